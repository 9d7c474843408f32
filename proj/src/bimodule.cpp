#include "bimod/bimodule.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <numeric>

#include "bimod/errors.hpp"
#include "bimod/linalg.hpp"

namespace bimod {

Bimodule algebra_bimodule(const Engine&, const Algebra& A) {
  return Bimodule{A.word(), A.m, A.m, true, "A"};
}

Bimodule alpha_induce(const Engine& E, const Algebra& A, int i, int sign) {
  const Word W = A.word();
  const Word U = simple_word({i});
  Bimodule X;
  X.obj = concat(W, U);
  X.rho_l = E.tensor(A.m, E.identity(U));
  Morphism swap = sign > 0 ? E.braid(U, W, false) : E.braid(W, U, true);
  X.rho_r = E.compose(E.tensor(A.m, E.identity(U)), E.tensor(E.identity(W), swap));
  X.name = std::string(sign > 0 ? "alpha+(" : "alpha-(") + E.category().name(i) + ")";
  return X;
}

Bimodule sandwich(const Engine& E, const Algebra& A, const Word& U, const Bimodule& X, const Word& V) {
  const Word W = A.word();
  Bimodule Y;
  Y.obj = concat(concat(U, X.obj), V);
  Morphism left_swap = E.tensor(E.braid(U, W, true), E.identity(concat(X.obj, V)));
  Y.rho_l = E.compose(E.tensor(E.tensor(E.identity(U), X.rho_l), E.identity(V)), left_swap);
  Morphism right_swap = E.tensor(E.identity(concat(U, X.obj)), E.braid(W, V, true));
  Y.rho_r = E.compose(E.tensor(E.tensor(E.identity(U), X.rho_r), E.identity(V)), right_swap);
  Y.name = to_string(E.category(), U) + " x+ " + X.name + " x- " + to_string(E.category(), V);
  return Y;
}

Bimodule induced_left_module(const Engine& E, const Algebra& A, int i) {
  const Word U = simple_word({i});
  Bimodule X;
  X.obj = concat(A.word(), U);
  X.rho_l = E.tensor(A.m, E.identity(U));
  X.has_right = false;
  X.name = "A " + E.category().name(i);
  return X;
}

ModuleResiduals module_residuals(const Engine& E, const Algebra& A, const Bimodule& X) {
  const Word W = A.word();
  Morphism idX = E.identity(X.obj), idA = E.identity(W);
  ModuleResiduals r;
  r.left = std::max(distance(E.compose(X.rho_l, E.tensor(idA, X.rho_l)), E.compose(X.rho_l, E.tensor(A.m, idX))),
                    distance(E.compose(X.rho_l, E.tensor(A.eta, idX)), idX));
  if (!X.has_right) return r;
  r.right = std::max(distance(E.compose(X.rho_r, E.tensor(X.rho_r, idA)), E.compose(X.rho_r, E.tensor(idX, A.m))),
                     distance(E.compose(X.rho_r, E.tensor(idX, A.eta)), idX));
  r.commute = distance(E.compose(X.rho_l, E.tensor(idA, X.rho_r)), E.compose(X.rho_r, E.tensor(X.rho_l, idA)));
  return r;
}

namespace {

Eigen::VectorXcd intertwiner_defect(const Engine& E, const Algebra& A, const Bimodule& X, const Bimodule& Y,
                                    const Morphism& f) {
  const Word W = A.word();
  Morphism idA = E.identity(W);
  Eigen::VectorXcd l = (E.compose(f, X.rho_l) - E.compose(Y.rho_l, E.tensor(idA, f))).flatten();
  if (!X.has_right || !Y.has_right) return l;
  Eigen::VectorXcd r = (E.compose(f, X.rho_r) - E.compose(Y.rho_r, E.tensor(f, idA))).flatten();
  Eigen::VectorXcd v(l.size() + r.size());
  v << l, r;
  return v;
}

}  // namespace

Eigen::MatrixXcd hom_bimodule_coeffs(const Engine& E, const Algebra& A, const Bimodule& X, const Bimodule& Y) {
  HomBasis basis = E.hom_space(X.obj, Y.obj);
  const int n = basis.dimension();
  if (n == 0) return Eigen::MatrixXcd(0, 0);
  Eigen::MatrixXcd M =
      matrix_of(n, [&](int c) { return intertwiner_defect(E, A, X, Y, E.basis_element(basis, c)); });
  return nullspace(M);
}

std::vector<Morphism> hom_bimodule(const Engine& E, const Algebra& A, const Bimodule& X, const Bimodule& Y) {
  Eigen::MatrixXcd K = hom_bimodule_coeffs(E, A, X, Y);
  std::vector<Morphism> out;
  for (int c = 0; c < K.cols(); ++c) out.push_back(E.from_coefficients(X.obj, Y.obj, K.col(c)));
  return out;
}

int hom_dimension(const Engine& E, const Algebra& A, const Bimodule& X, const Bimodule& Y) {
  return static_cast<int>(hom_bimodule_coeffs(E, A, X, Y).cols());
}

double intertwiner_residual(const Engine& E, const Algebra& A, const Bimodule& X, const Bimodule& Y,
                            const Morphism& f) {
  Eigen::VectorXcd v = intertwiner_defect(E, A, X, Y, f);
  return v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
}

bool is_isomorphic(const Engine& E, const Algebra& A, const Bimodule& X, const Bimodule& Y) {
  auto fwd = hom_bimodule(E, A, X, Y);
  if (fwd.size() != 1) return false;
  if (hom_dimension(E, A, Y, X) != 1) return false;
  for (const auto& b : fwd[0].blocks) {
    if (b.rows() != b.cols()) return false;
    if (b.size() && numerical_rank(b) != b.rows()) return false;
  }
  return true;
}

Bimodule transport(const Engine& E, const Algebra& A, const Bimodule& X, const Morphism& f, const Morphism& f_inv) {
  const Word W = A.word();
  Bimodule Y;
  Y.obj = f.target;
  Y.name = X.name;
  Y.has_right = X.has_right;
  Y.rho_l = E.compose(f, E.compose(X.rho_l, E.tensor(E.identity(W), f_inv)));
  if (X.has_right) Y.rho_r = E.compose(f, E.compose(X.rho_r, E.tensor(f_inv, E.identity(W))));
  return Y;
}

RetractPair flatten(const Engine& E, const Algebra& A, const Bimodule& X) {
  const int r = E.category().rank();
  Object Z;
  for (int k = 0; k < r; ++k) Z.summands.insert(Z.summands.end(), E.dim(X.obj, k), k);
  Morphism f = E.zero(X.obj, {Z});
  Morphism g = E.zero({Z}, X.obj);
  for (int k = 0; k < r; ++k) {
    f.blocks[k].setIdentity();
    g.blocks[k].setIdentity();
  }
  return RetractPair{g, f, transport(E, A, X, f, g)};
}

RetractPair split_idempotent(const Engine& E, const Algebra& A, const Bimodule& X, const Morphism& P) {
  const int r = E.category().rank();
  std::vector<Eigen::MatrixXcd> U(r);
  Object Z;
  for (int k = 0; k < r; ++k) {
    U[k] = range(P.blocks[k]);
    Z.summands.insert(Z.summands.end(), U[k].cols(), k);
  }
  const Word Zw{Z};
  RetractPair out;
  out.embed = E.zero(Zw, X.obj);
  out.restrict = E.zero(X.obj, Zw);
  for (int k = 0; k < r; ++k) {
    out.embed.blocks[k] = U[k];
    out.restrict.blocks[k] = U[k].adjoint() * P.blocks[k];
  }
  const Word W = A.word();
  Bimodule& T = out.target;
  T.obj = Zw;
  T.has_right = X.has_right;
  T.name = X.name;
  T.rho_l = E.compose(out.restrict, E.compose(X.rho_l, E.tensor(E.identity(W), out.embed)));
  if (X.has_right) T.rho_r = E.compose(out.restrict, E.compose(X.rho_r, E.tensor(out.embed, E.identity(W))));
  return out;
}

RetractPair tensor_over_A(const Engine& E, const Algebra& A, const Bimodule& X, const Bimodule& Y) {
  Morphism idX = E.identity(X.obj), idY = E.identity(Y.obj);
  Morphism P = E.compose(E.tensor(X.rho_r, Y.rho_l),
                         E.tensor(E.tensor(idX, E.compose(A.delta, A.eta)), idY));
  double scale = std::max(1.0, P.norm());
  if (distance(E.compose(P, P), P) > 1e3 * E.tol() * scale) {
    throw IdempotentSplitFailure("tensor-over-A projector is not idempotent");
  }
  for (const auto& b : P.blocks) {
    if (b.size() == 0) continue;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(b, false);
    for (int t = 0; t < es.eigenvalues().size(); ++t) {
      cplx lam = es.eigenvalues()(t);
      if (std::min(std::abs(lam), std::abs(lam - 1.0)) > 0.5) {
        throw IdempotentSplitFailure("projector eigenvalue away from {0, 1}");
      }
    }
  }
  Bimodule XY;
  XY.obj = concat(X.obj, Y.obj);
  XY.rho_l = E.tensor(X.rho_l, idY);
  XY.rho_r = E.tensor(idX, Y.rho_r);
  XY.name = X.name + " xA " + Y.name;
  return split_idempotent(E, A, XY, P);
}

ZMatrix z_matrix(const Engine& E, const Algebra& A) {
  const int r = E.category().rank();
  ZMatrix Z{Eigen::MatrixXi::Zero(r, r), Eigen::MatrixXd::Zero(r, r)};
  std::vector<Bimodule> plus, minus;
  for (int i = 0; i < r; ++i) {
    plus.push_back(alpha_induce(E, A, i, +1));
    minus.push_back(alpha_induce(E, A, i, -1));
  }
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      int d = hom_dimension(E, A, plus[i], minus[j]);
      Z.raw(i, j) = d;
      Z.z(i, j) = d;
    }
  }
  return Z;
}

namespace {

std::vector<Bimodule> decompose_impl(const Engine& E, const Algebra& A, const Bimodule& X, std::mt19937_64& rng,
                                     int* end_dim) {
  Bimodule G = flatten(E, A, X).target;
  std::vector<Morphism> basis = hom_bimodule(E, A, G, G);
  if (end_dim) *end_dim = static_cast<int>(basis.size());
  if (basis.empty()) return {};
  if (basis.size() == 1) return {G};
  std::normal_distribution<double> gauss;
  const int r = E.category().rank();
  for (int attempt = 0; attempt < 8; ++attempt) {
    Morphism x = E.zero(G.obj, G.obj);
    for (const auto& f : basis) x += cplx(gauss(rng), gauss(rng)) * f;
    struct Eig {
      int k, idx;
      cplx val;
    };
    std::vector<Eig> eigs;
    std::vector<Eigen::MatrixXcd> V(r), Vinv(r);
    for (int k = 0; k < r; ++k) {
      if (x.blocks[k].size() == 0) continue;
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(x.blocks[k]);
      V[k] = es.eigenvectors();
      Vinv[k] = V[k].inverse();
      for (int t = 0; t < es.eigenvalues().size(); ++t) eigs.push_back({k, t, es.eigenvalues()(t)});
    }
    double scale = 1.0;
    for (const auto& e : eigs) scale = std::max(scale, std::abs(e.val));
    // Greedy clustering; distinct simple summands give well separated eigenvalues.
    std::vector<int> cluster(eigs.size(), -1);
    std::vector<cplx> centers;
    for (std::size_t t = 0; t < eigs.size(); ++t) {
      for (std::size_t c = 0; c < centers.size(); ++c) {
        if (std::abs(eigs[t].val - centers[c]) < 1e-6 * scale) {
          cluster[t] = static_cast<int>(c);
          break;
        }
      }
      if (cluster[t] < 0) {
        cluster[t] = static_cast<int>(centers.size());
        centers.push_back(eigs[t].val);
      }
    }
    if (centers.size() < 2) continue;
    std::vector<Bimodule> out;
    for (std::size_t c = 0; c < centers.size(); ++c) {
      Morphism P = E.zero(G.obj, G.obj);
      for (std::size_t t = 0; t < eigs.size(); ++t) {
        if (cluster[t] != static_cast<int>(c)) continue;
        int k = eigs[t].k, idx = eigs[t].idx;
        P.blocks[k] += V[k].col(idx) * Vinv[k].row(idx);
      }
      RetractPair part = split_idempotent(E, A, G, P);
      auto pieces = decompose_impl(E, A, part.target, rng, nullptr);
      out.insert(out.end(), pieces.begin(), pieces.end());
    }
    return out;
  }
  throw DecompositionIncomplete("could not split a bimodule with " + std::to_string(basis.size()) +
                                "-dimensional endomorphism algebra");
}

std::vector<int> object_multiplicities(const Engine& E, const Bimodule& X) {
  std::vector<int> n(E.category().rank());
  for (int k = 0; k < E.category().rank(); ++k) n[k] = E.dim(X.obj, k);
  return n;
}

// Index of the class of X among `found`, or -1.
int find_class(const Engine& E, const Algebra& A, const std::vector<Bimodule>& found,
               const std::vector<std::vector<int>>& n, const Bimodule& X) {
  std::vector<int> nx = object_multiplicities(E, X);
  for (std::size_t s = 0; s < found.size(); ++s) {
    if (n[s] == nx && is_isomorphic(E, A, found[s], X)) return static_cast<int>(s);
  }
  return -1;
}

}  // namespace

std::vector<Bimodule> decompose(const Engine& E, const Algebra& A, const Bimodule& X, std::mt19937_64& rng) {
  return decompose_impl(E, A, X, rng, nullptr);
}

SimpleBimodules simple_bimodules(const Engine& E, const Algebra& A, std::uint64_t seed) {
  const int r = E.category().rank();
  std::mt19937_64 rng(seed);
  const Bimodule AA = algebra_bimodule(E, A);
  std::vector<Bimodule> found;
  std::vector<std::vector<int>> n;
  std::vector<std::vector<int>> mult_raw;  // per generator, per found index
  std::vector<int> end_dims;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      Bimodule G = sandwich(E, A, simple_word({i}), AA, simple_word({j}));
      int end_dim = 0;
      auto pieces = decompose_impl(E, A, G, rng, &end_dim);
      std::vector<int> counts(found.size(), 0);
      for (auto& p : pieces) {
        int s = find_class(E, A, found, n, p);
        if (s < 0) {
          s = static_cast<int>(found.size());
          p.name = "X" + std::to_string(s);
          found.push_back(p);
          n.push_back(object_multiplicities(E, p));
          counts.push_back(0);
        }
        ++counts[s];
      }
      int sum_sq = 0;
      for (int c : counts) sum_sq += c * c;
      if (sum_sq != end_dim) {
        throw DecompositionIncomplete("generator (" + E.category().name(i) + "," + E.category().name(j) +
                                      "): sum of squared multiplicities " + std::to_string(sum_sq) +
                                      " != dim End " + std::to_string(end_dim));
      }
      mult_raw.push_back(counts);
      end_dims.push_back(end_dim);
    }
  }
  // A first, then by the underlying multiplicity vector; stable for ties.
  int unit = find_class(E, A, found, n, flatten(E, A, AA).target);
  if (unit < 0) throw DecompositionIncomplete("A itself is not among the simple bimodules");
  std::vector<int> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if ((a == unit) != (b == unit)) return a == unit;
    return n[a] > n[b];
  });
  SimpleBimodules out;
  for (std::size_t s = 0; s < order.size(); ++s) {
    out.simples.push_back(found[order[s]]);
    out.simples.back().name = "X" + std::to_string(s);
    out.n.push_back(n[order[s]]);
  }
  for (const auto& counts : mult_raw) {
    std::vector<int> row(found.size(), 0);
    for (std::size_t s = 0; s < order.size(); ++s)
      if (order[s] < static_cast<int>(counts.size())) row[s] = counts[order[s]];
    out.multiplicity.push_back(row);
  }
  out.generator_end_dim = end_dims;
  return out;
}

int count_simple_left_modules(const Engine& E, const Algebra& A, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Bimodule> found;
  std::vector<std::vector<int>> n;
  for (int i = 0; i < E.category().rank(); ++i) {
    Bimodule G = induced_left_module(E, A, i);
    for (auto& p : decompose(E, A, G, rng)) {
      if (find_class(E, A, found, n, p) >= 0) continue;
      found.push_back(p);
      n.push_back(object_multiplicities(E, p));
    }
  }
  return static_cast<int>(found.size());
}

}  // namespace bimod
