"""Numerical pentagon/hexagon solve for the rank-2 fusion ring tau*tau = 1 + tau.

Unit gauge fixed (any F with a trivial label is 1), so the only unknown block is
F^{ttt}_t (2x2, rows e in {1,t}, cols f in {1,t}) and R^{tt}_1, R^{tt}_t.
Prints the gauge-invariant data used as frozen expectations in the C++ tests.
"""
import cmath
import itertools
import math

import numpy as np
from scipy.optimize import least_squares

N = {(0, 0): [0], (0, 1): [1], (1, 0): [1], (1, 1): [0, 1]}


def allowed(a, b, c):
    return c in N[(a, b)]


def make_F(x):
    blk = np.array([[x[0], x[1]], [x[2], x[3]]])

    def F(a, b, c, d, e, f):
        if not (allowed(a, b, e) and allowed(e, c, d) and allowed(b, c, f) and allowed(a, f, d)):
            return 0.0
        if (a, b, c, d) == (1, 1, 1, 1):
            return blk[e, f]
        return 1.0
    return F


def pentagon(x):
    F = make_F(x)
    res = []
    L = (0, 1)
    for a, b, c, d, e, f, g, k, l in itertools.product(L, repeat=9):
        lhs = F(f, c, d, e, g, l) * F(a, b, l, e, f, k)
        rhs = sum(F(a, b, c, g, f, h) * F(a, h, d, e, g, k) * F(b, c, d, k, h, l) for h in L)
        res.append(lhs - rhs)
    return np.array(res)


def solve_pentagon(seed):
    rng = np.random.default_rng(seed)
    sol = least_squares(pentagon, rng.normal(size=4), xtol=1e-15, ftol=1e-15, gtol=1e-15)
    return sol.x, np.max(np.abs(pentagon(sol.x)))


def hexagon(F, R):
    L = (0, 1)
    worst = 0.0
    for a, b, c, d, e, g in itertools.product(L, repeat=6):
        lhs = sum(F(a, b, c, d, e, f) * R(a, f, d) * F(b, c, a, d, f, g) for f in L)
        rhs = R(a, b, e) * F(b, a, c, d, e, g) * R(a, c, g)
        worst = max(worst, abs(lhs - rhs))
    return worst


def main():
    phi = (1 + math.sqrt(5)) / 2
    for seed in range(6):
        x, r = solve_pentagon(seed)
        if r < 1e-10:
            print("seed", seed, "F^{ttt}_t[1,1] =", x[0], " residual", r)
    # hexagon: search the finite set of phase solutions R^{tt}_1 = e^{i a}, R^{tt}_t = e^{i b}
    F = make_F([1 / phi, 1 / math.sqrt(phi), 1 / math.sqrt(phi), -1 / phi])
    print("pentagon at closed form:", np.max(np.abs(pentagon([1 / phi, phi ** -0.5, phi ** -0.5, -1 / phi]))))
    for p1 in range(10):
        for p2 in range(10):
            r1 = cmath.exp(2j * math.pi * p1 / 10)
            rt = cmath.exp(2j * math.pi * p2 / 10)

            def R(a, b, c):
                if not allowed(a, b, c):
                    return 0.0
                if (a, b) == (1, 1):
                    return r1 if c == 0 else rt
                return 1.0
            h = hexagon(F, R)
            if h < 1e-10:
                dims = [1.0, phi]
                theta_t = (dims[0] * r1 + dims[1] * rt) / phi
                s = [[sum(dims[k] * ((1 if (i, j) != (1, 1) else (r1 if k == 0 else rt) ** 2) if allowed(i, j, k) else 0)
                          for k in (0, 1)) for j in (0, 1)] for i in (0, 1)]
                print("R1 = e^{2pi i %d/10}, Rt = e^{2pi i %d/10}, theta_t = %s, s = %s" % (p1, p2, theta_t, s))


if __name__ == "__main__":
    main()
