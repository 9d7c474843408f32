#include "bimod/catalog.hpp"

#include <cmath>
#include <functional>

#include "bimod/errors.hpp"

namespace bimod {

namespace {

using FFun = std::function<cplx(int, int, int, int, int, int)>;
using RFun = std::function<cplx(int, int, int)>;

// Fills multiplicity-free F and R entries for every admissible channel.
void fill_symbols(MtcData& C, const FFun& F, const RFun& R) {
  const int r = C.rank();
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        for (int d = 0; d < r; ++d)
          for (int e = 0; e < r; ++e)
            for (int f = 0; f < r; ++f)
              if (C.N(a, b, e) && C.N(e, c, d) && C.N(b, c, f) && C.N(a, f, d))
                C.F_raw[{a, b, c, d, e, f, 0, 0, 0, 0}] = F(a, b, c, d, e, f);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        if (C.N(a, b, c)) C.R_raw[{a, b, c, 0, 0}] = R(a, b, c);
}

std::shared_ptr<const MtcData> validated(MtcData C, double tol) {
  C.tol = tol;
  C.finalize();
  const AxiomReport rep = check_axioms(C);
  for (const auto& r : rep.residuals)
    if (r.max_residual > tol) throw AxiomViolation(r.identity, r.max_residual);
  return std::make_shared<const MtcData>(std::move(C));
}

MtcData make_trivial() {
  MtcData C;
  C.resize(1);
  C.labels = {"1"};
  C.set_fusion(0, 0, 0, 1);
  fill_symbols(C, [](int, int, int, int, int, int) { return cplx(1.0); },
               [](int, int, int) { return cplx(1.0); });
  return C;
}

// q-integers and the q-Racah formula for labels given as twice the spin.
struct QuantumSu2 {
  int k;
  double qint(int n) const { return std::sin(M_PI * n / (k + 2)) / std::sin(M_PI / (k + 2)); }
  double qfact(int n) const {
    double out = 1.0;
    for (int i = 1; i <= n; ++i) out *= qint(i);
    return out;
  }
  bool admissible(int a, int b, int c) const {
    return std::abs(a - b) <= c && c <= a + b && (a + b + c) % 2 == 0 && a + b + c <= 2 * k;
  }
  double triangle(int a, int b, int c) const {
    return std::sqrt(qfact((a + b - c) / 2) * qfact((a - b + c) / 2) * qfact((-a + b + c) / 2) /
                     qfact((a + b + c) / 2 + 1));
  }
  // {j1 j2 j3; j4 j5 j6} with triads (1,2,3) (1,5,6) (4,2,6) (4,5,3)
  double sixj(int j1, int j2, int j3, int j4, int j5, int j6) const {
    const int triads[4][3] = {{j1, j2, j3}, {j1, j5, j6}, {j4, j2, j6}, {j4, j5, j3}};
    double pre = 1.0;
    int lo = 0;
    for (const auto& t : triads) {
      if (!admissible(t[0], t[1], t[2])) return 0.0;
      pre *= triangle(t[0], t[1], t[2]);
      lo = std::max(lo, (t[0] + t[1] + t[2]) / 2);
    }
    const int s1 = (j1 + j2 + j4 + j5) / 2, s2 = (j2 + j3 + j5 + j6) / 2, s3 = (j3 + j1 + j6 + j4) / 2;
    const int hi = std::min({s1, s2, s3});
    double total = 0.0;
    for (int z = lo; z <= hi; ++z) {
      double den = qfact(s1 - z) * qfact(s2 - z) * qfact(s3 - z);
      for (const auto& t : triads) den *= qfact(z - (t[0] + t[1] + t[2]) / 2);
      total += ((z % 2) ? -1.0 : 1.0) * qfact(z + 1) / den;
    }
    return pre * total;
  }
  double F(int a, int b, int c, int d, int e, int f) const {
    const double sign = (((a + b + c + d) / 2) % 2) ? -1.0 : 1.0;
    return sign * std::sqrt(qint(e + 1) * qint(f + 1)) * sixj(a, b, e, c, d, f);
  }
  cplx R(int a, int b, int c) const {
    const double ex = (c * (c + 2) - a * (a + 2) - b * (b + 2)) / 8.0;
    const double sign = (((c - a - b) / 2) % 2) ? -1.0 : 1.0;
    return sign * std::polar(1.0, 2.0 * M_PI * ex / (k + 2));
  }
};

}  // namespace

MtcData make_fibonacci() {
  MtcData C;
  C.resize(2);
  C.labels = {"1", "tau"};
  C.dual = {0, 1};
  C.set_fusion(0, 0, 0, 1);
  C.set_fusion(0, 1, 1, 1);
  C.set_fusion(1, 0, 1, 1);
  C.set_fusion(1, 1, 0, 1);
  C.set_fusion(1, 1, 1, 1);
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  fill_symbols(
      C,
      [phi](int a, int b, int c, int d, int e, int f) -> cplx {
        if (a == 1 && b == 1 && c == 1 && d == 1) {
          if (e == 0 && f == 0) return 1.0 / phi;
          if (e == 1 && f == 1) return -1.0 / phi;
          return 1.0 / std::sqrt(phi);
        }
        return 1.0;
      },
      [](int a, int b, int c) -> cplx {
        if (a == 1 && b == 1) return c == 0 ? std::polar(1.0, -4.0 * M_PI / 5.0) : std::polar(1.0, 3.0 * M_PI / 5.0);
        return 1.0;
      });
  C.twist = {1.0, std::polar(1.0, 4.0 * M_PI / 5.0)};
  return C;
}

MtcData make_ising() {
  MtcData C;
  C.resize(3);
  C.labels = {"1", "sigma", "psi"};
  C.dual = {0, 1, 2};
  const int s = 1, p = 2;
  auto fuse = [&](int a, int b, int c) { C.set_fusion(a, b, c, 1); };
  for (int a = 0; a < 3; ++a) {
    fuse(0, a, a);
    if (a) fuse(a, 0, a);
  }
  fuse(s, s, 0);
  fuse(s, s, p);
  fuse(s, p, s);
  fuse(p, s, s);
  fuse(p, p, 0);
  fill_symbols(
      C,
      [](int a, int b, int c, int d, int e, int f) -> cplx {
        if (a == s && b == s && c == s && d == s) return (e == p && f == p ? -1.0 : 1.0) / std::sqrt(2.0);
        if (a == s && b == p && c == s && d == p) return -1.0;
        if (a == p && b == s && c == p && d == s) return -1.0;
        (void)e, (void)f;
        return 1.0;
      },
      [](int a, int b, int c) -> cplx {
        if (a == s && b == s) return c == 0 ? std::polar(1.0, -M_PI / 8.0) : std::polar(1.0, 3.0 * M_PI / 8.0);
        if ((a == s && b == p) || (a == p && b == s)) return cplx(0.0, -1.0);
        if (a == p && b == p) return -1.0;
        return 1.0;
      });
  C.twist = {1.0, std::polar(1.0, M_PI / 8.0), -1.0};
  return C;
}

MtcData make_toric_code() {
  MtcData C;
  C.resize(4);
  C.labels = {"1", "e", "m", "f"};
  C.dual = {0, 1, 2, 3};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) C.set_fusion(a, b, a ^ b, 1);
  fill_symbols(
      C, [](int, int, int, int, int, int) { return cplx(1.0); },
      [](int a, int b, int) { return cplx(((a >> 1) & (b & 1)) ? -1.0 : 1.0); });
  for (int a = 0; a < 4; ++a) C.twist[a] = ((a & 1) && (a >> 1)) ? -1.0 : 1.0;
  return C;
}

MtcData make_vec_zn(int n) {
  MtcData C;
  C.resize(n);
  const int p = (n % 2 == 0) ? 1 : 2;
  for (int a = 0; a < n; ++a) {
    C.labels[a] = std::to_string(a);
    C.dual[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) C.set_fusion(a, b, (a + b) % n, 1);
  }
  fill_symbols(
      C,
      [n, p](int a, int b, int c, int, int, int) {
        const int wrap = b + c - (b + c) % n;
        return std::polar(1.0, M_PI * p * a * wrap / n);
      },
      [n, p](int a, int b, int) { return std::polar(1.0, M_PI * p * a * b / n); });
  for (int a = 0; a < n; ++a) C.twist[a] = std::polar(1.0, M_PI * p * a * a / n);
  return C;
}

MtcData make_su2k(int k) {
  const QuantumSu2 q{k};
  MtcData C;
  C.resize(k + 1);
  for (int a = 0; a <= k; ++a) {
    C.labels[a] = std::to_string(a);
    C.dual[a] = a;
    for (int b = 0; b <= k; ++b)
      for (int c = 0; c <= k; ++c)
        if (q.admissible(a, b, c)) C.set_fusion(a, b, c, 1);
    C.twist[a] = std::polar(1.0, 2.0 * M_PI * a * (a + 2) / (4.0 * (k + 2)));
  }
  fill_symbols(
      C, [&q](int a, int b, int c, int d, int e, int f) { return cplx(q.F(a, b, c, d, e, f)); },
      [&q](int a, int b, int c) { return q.R(a, b, c); });
  return C;
}

CatalogEntry catalog(const std::string& name, double tol) {
  if (name == "trivial") return {name, validated(make_trivial(), tol), "unit category"};
  if (name == "fibonacci")
    return {name, validated(make_fibonacci(), tol), "closed-form pentagon/hexagon solution, unitary gauge"};
  if (name == "ising") return {name, validated(make_ising(), tol), "closed-form Ising data, unitary gauge"};
  if (name == "toric_code")
    return {name, validated(make_toric_code(), tol), "Drinfeld double of Z2, trivial associator, R = (-1)^{a2 b1}"};
  if (name.rfind("vec_z", 0) == 0) {
    const int n = std::atoi(name.c_str() + 5);
    if (n >= 2 && n <= 12 && name == "vec_z" + std::to_string(n))
      return {name, validated(make_vec_zn(n), tol),
              "pointed Z_n, quadratic form exp(i pi p a^2 / n) with p = 1 (n even) or 2 (n odd)"};
  }
  if (name.rfind("su2_", 0) == 0) {
    const int k = std::atoi(name.c_str() + 4);
    if (k >= 1 && k <= 4 && name == "su2_" + std::to_string(k))
      return {name, validated(make_su2k(k), tol), "quantum 6j symbols (q-Racah formula), unitary gauge"};
  }
  throw UnknownCatalogName("unknown catalog entry '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"trivial", "vec_z2", "vec_z3", "fibonacci", "ising", "toric_code", "su2_1", "su2_2", "su2_3", "su2_4"};
}

}  // namespace bimod
