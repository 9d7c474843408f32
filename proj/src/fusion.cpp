#include "bimod/fusion.hpp"

#include <cmath>
#include <random>

#include "bimod/diagram.hpp"
#include "bimod/errors.hpp"
#include "bimod/linalg.hpp"

namespace bimod {

std::string fusion_table_defect(const FusionTable& T, int unit) {
  const int n = T.size;
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      if (T.at(unit, a, c) != (a == c) || T.at(a, unit, c) != (a == c)) return "unit law fails";
      for (int b = 0; b < n; ++b)
        if (T.at(a, b, c) < 0) return "negative entry";
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          long lhs = 0, rhs = 0;
          for (int e = 0; e < n; ++e) {
            lhs += long(T.at(a, b, e)) * T.at(e, c, d);
            rhs += long(T.at(b, c, e)) * T.at(a, e, d);
          }
          if (lhs != rhs) return "associativity fails";
        }
  return "";
}

FusionTable fusion_table_direct(const Engine& E, const Algebra& A, const std::vector<Bimodule>& simples) {
  const int n = static_cast<int>(simples.size());
  FusionTable T{n, std::vector<int>(static_cast<std::size_t>(n) * n * n, 0)};
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Bimodule Z = tensor_over_A(E, A, simples[a], simples[b]).target;
      for (int c = 0; c < n; ++c) T.at(a, b, c) = hom_dimension(E, A, Z, simples[c]);
    }
  }
  return T;
}

const std::string& D_map_diagram() {
  static const std::string text =
      "id(U A) * (id(V) * b(X) ; cinv(X, V) * id(X^))\n"
      "; id(U) * ((id(A X) * (eta ; delta)) ; ((rhol * id(A)) ; rhor) * id(A)) * id(V X^)\n"
      "; ((eta ; delta) * c(U, X) * id(A V) ; id(A) * rhol * (phi ; eps)) * id(X^)\n"
      "; id(A) * dt(X)\n";
  return text;
}

Morphism D_map(const Engine& E, const Algebra& A, const Bimodule& X, const Word& U, const Word& V,
               const Morphism& phi, bool check) {
  if (check) {
    Bimodule AA = algebra_bimodule(E, A);
    Bimodule S = sandwich(E, A, U, AA, V);
    if (phi.source != S.obj || phi.target != AA.obj) throw TypeMismatch("D_map: phi has the wrong type");
    double res = intertwiner_residual(E, A, S, AA, phi);
    if (res > 1e3 * E.tol() * std::max(1.0, phi.norm())) {
      throw NotIntertwiner("D_map: phi is not a bimodule morphism (residual " + std::to_string(res) + ")");
    }
  }
  static const ExprPtr expr = parse_diagram(D_map_diagram());
  DiagramEnv env;
  env.objects = {{"U", U}, {"V", V}, {"A", A.word()}, {"X", X.obj}};
  env.morphisms = {{"rhol", X.rho_l}, {"rhor", X.rho_r}, {"eta", A.eta},
                   {"delta", A.delta}, {"eps", A.eps},   {"phi", phi}};
  return evaluate(E, env, *expr);
}

std::vector<HomBlock> hom_blocks(const Engine& E, const Algebra& A) {
  const int r = E.category().rank();
  Bimodule AA = algebra_bimodule(E, A);
  std::vector<HomBlock> out;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      HomBlock b;
      b.i = i;
      b.j = j;
      b.sandwich = sandwich(E, A, simple_word({i}), AA, simple_word({j}));
      b.h = hom_bimodule(E, A, b.sandwich, AA);
      if (b.h.empty()) continue;
      std::vector<Morphism> g = hom_bimodule(E, A, AA, b.sandwich);
      const int n = static_cast<int>(b.h.size());
      if (static_cast<int>(g.size()) != n) throw SingularD("Hom spaces in both directions differ in dimension");
      Eigen::MatrixXcd G(n, n);
      for (int beta = 0; beta < n; ++beta)
        for (int alpha = 0; alpha < n; ++alpha)
          G(beta, alpha) = E.compose(A.eps, E.compose(b.h[beta], E.compose(g[alpha], A.eta))).scalar();
      if (smallest_singular_value(G) < E.tol()) throw SingularD("degenerate pairing of Hom spaces");
      Eigen::MatrixXcd Ginv = G.inverse();
      for (int alpha = 0; alpha < n; ++alpha) {
        Morphism hb = E.zero(AA.obj, b.sandwich.obj);
        for (int gamma = 0; gamma < n; ++gamma) hb += Ginv(gamma, alpha) * g[gamma];
        b.hbar.push_back(hb);
      }
      out.push_back(std::move(b));
    }
  }
  return out;
}

Eigen::MatrixXcd D_block(const Engine& E, const Algebra& A, const Bimodule& X, const HomBlock& b) {
  const int n = static_cast<int>(b.h.size());
  Eigen::MatrixXcd M(n, n);
  const Word U = simple_word({b.i}), V = simple_word({b.j});
  for (int beta = 0; beta < n; ++beta) {
    Morphism Dh = D_map(E, A, X, U, V, b.h[beta], false);
    for (int alpha = 0; alpha < n; ++alpha)
      M(alpha, beta) = E.compose(A.eps, E.compose(Dh, E.compose(b.hbar[alpha], A.eta))).scalar();
  }
  return M;
}

Eigen::MatrixXcd DMatrix::block_matrix(int kappa, int p) const {
  const int n = static_cast<int>(blocks[p].h.size());
  Eigen::MatrixXcd M(n, n);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    auto [q, alpha, beta] = columns[c];
    if (q == p) M(alpha, beta) = d(kappa, c);
  }
  return M;
}

DMatrix d_matrix(const Engine& E, const Algebra& A, const std::vector<Bimodule>& simples) {
  DMatrix D;
  D.blocks = hom_blocks(E, A);
  for (std::size_t p = 0; p < D.blocks.size(); ++p) {
    const int n = static_cast<int>(D.blocks[p].h.size());
    for (int alpha = 0; alpha < n; ++alpha)
      for (int beta = 0; beta < n; ++beta) D.columns.push_back({static_cast<int>(p), alpha, beta});
  }
  const int K = static_cast<int>(simples.size());
  if (K != static_cast<int>(D.columns.size())) {
    throw SingularD("d-matrix is " + std::to_string(K) + " x " + std::to_string(D.columns.size()));
  }
  D.d = Eigen::MatrixXcd::Zero(K, K);
  for (int kappa = 0; kappa < K; ++kappa) {
    int c = 0;
    for (const auto& b : D.blocks) {
      Eigen::MatrixXcd M = D_block(E, A, simples[kappa], b);
      for (int alpha = 0; alpha < M.rows(); ++alpha)
        for (int beta = 0; beta < M.cols(); ++beta) D.d(kappa, c++) = M(alpha, beta);
    }
  }
  D.smallest_singular_value = smallest_singular_value(D.d);
  if (D.smallest_singular_value < E.tol()) throw SingularD("d-matrix is singular");
  return D;
}

FusionTable fusion_table_blockdiag(const DMatrix& D, double tol) {
  const int K = static_cast<int>(D.d.rows());
  Eigen::MatrixXcd dinv = D.d.inverse();
  std::vector<std::vector<Eigen::MatrixXcd>> M(K);
  for (int k = 0; k < K; ++k)
    for (std::size_t p = 0; p < D.blocks.size(); ++p) M[k].push_back(D.block_matrix(k, static_cast<int>(p)));
  FusionTable T{K, std::vector<int>(static_cast<std::size_t>(K) * K * K, 0)};
  for (int a = 0; a < K; ++a) {
    for (int b = 0; b < K; ++b) {
      Eigen::VectorXcd prod(K);
      for (std::size_t c = 0; c < D.columns.size(); ++c) {
        auto [p, alpha, gamma] = D.columns[c];
        prod(c) = (M[a][p] * M[b][p])(alpha, gamma);
      }
      Eigen::VectorXcd coeff = dinv.transpose() * prod;
      for (int c = 0; c < K; ++c) {
        double re = coeff(c).real();
        long n = std::lround(re);
        if (std::abs(coeff(c) - double(n)) >= 100.0 * tol || n < 0) {
          throw NonIntegerStructureConstant("structure constant " + std::to_string(re) + "+" +
                                            std::to_string(coeff(c).imag()) + "i is not a non-negative integer");
        }
        T.at(a, b, c) = static_cast<int>(n);
      }
    }
  }
  return T;
}

VerifyReport verify_bimodule_category(const Engine& E, const Algebra& A, std::uint64_t seed) {
  VerifyReport rep;
  const MtcData& C = E.category();
  const int r = C.rank();
  const double tol = E.tol();
  auto fail = [&](const std::string& what) { rep.failures.push_back(what); };

  rep.z = z_matrix(E, A).z;
  for (int i = 0; i < r; ++i) {
    rep.trace_z += rep.z(i, i);
    for (int j = 0; j < r; ++j) {
      rep.trace_zz += rep.z(i, j) * rep.z(i, j);
      if (rep.z(i, j)) {
        rep.P.push_back({i, j});
        rep.n[C.name(i) + "," + C.name(j)] = rep.z(i, j);
      }
    }
  }
  SimpleBimodules S = simple_bimodules(E, A, seed);
  rep.K = static_cast<int>(S.simples.size());
  if (rep.K != rep.trace_zz) fail("|K| != tr(z^t z)");
  rep.left_modules = count_simple_left_modules(E, A, seed);
  if (rep.left_modules != rep.trace_z) fail("number of simple left modules != tr(z)");

  rep.direct = fusion_table_direct(E, A, S.simples);
  if (auto why = fusion_table_defect(rep.direct); !why.empty()) fail("direct table: " + why);

  DMatrix D = d_matrix(E, A, S.simples);
  rep.smallest_singular_value = D.smallest_singular_value;
  double block_dims = 0.0;
  for (const auto& b : D.blocks)
    block_dims = std::max(block_dims, std::abs(double(b.h.size()) - rep.z(b.i, C.dual[b.j])));
  // Blocks absent from D.blocks have z = 0 by construction of hom_blocks.
  rep.residuals["block_dims"] = block_dims;

  double unit = 0.0;
  for (std::size_t p = 0; p < D.blocks.size(); ++p) {
    Eigen::MatrixXcd M = D.block_matrix(0, static_cast<int>(p));
    unit = std::max(unit, (M - Eigen::MatrixXcd::Identity(M.rows(), M.cols())).cwiseAbs().maxCoeff());
  }
  rep.residuals["D_A_identity"] = unit;

  std::vector<std::pair<int, int>> pairs;
  if (rep.K <= 12) {
    for (int a = 0; a < rep.K; ++a)
      for (int b = 0; b < rep.K; ++b) pairs.emplace_back(a, b);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, rep.K - 1);
    for (int t = 0; t < 100; ++t) pairs.emplace_back(pick(rng), pick(rng));
  }
  double hom = 0.0;
  for (auto [a, b] : pairs) {
    Bimodule XY = tensor_over_A(E, A, S.simples[a], S.simples[b]).target;
    for (std::size_t p = 0; p < D.blocks.size(); ++p) {
      Eigen::MatrixXcd lhs = D.block_matrix(a, static_cast<int>(p)) * D.block_matrix(b, static_cast<int>(p));
      Eigen::MatrixXcd rhs = D_block(E, A, XY, D.blocks[p]);
      hom = std::max(hom, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }
  rep.residuals["homomorphism"] = hom;

  rep.blockdiag = fusion_table_blockdiag(D, tol);
  if (!(rep.blockdiag == rep.direct)) fail("block-diagonal and direct fusion tables differ");

  for (const auto& [name, v] : rep.residuals)
    if (v > 1e3 * tol) fail("residual " + name);
  rep.pass = rep.failures.empty();
  return rep;
}

const std::string& defect_diagram() {
  static const std::string text =
      "b(X Y J)\n"
      "; ((c(X Y, J) ; c(J, X Y) ; ((id(X) * (eta ; delta) * id(Y)) ; (rhor_X * rhol_Y)) * id(J)) * id(J^ Y^ X^))\n"
      "; dt(X Y J)\n";
  return text;
}

DefectReport defect_identity(const Engine& E, const Algebra& A, const SimpleBimodules& S, const FusionTable& N,
                             const Eigen::MatrixXcd& s, int kappa, int kappa2, int j) {
  static const ExprPtr expr = parse_diagram(defect_diagram());
  const Bimodule& X = S.simples.at(kappa);
  const Bimodule& Y = S.simples.at(kappa2);
  DiagramEnv env;
  env.objects = {{"X", X.obj}, {"Y", Y.obj}, {"J", simple_word({j})}};
  env.morphisms = {{"eta", A.eta}, {"delta", A.delta}, {"rhor_X", X.rho_r}, {"rhol_Y", Y.rho_l}};
  DefectReport rep;
  rep.kappa = kappa;
  rep.kappa2 = kappa2;
  rep.j = j;
  rep.lhs = evaluate(E, env, *expr).scalar();
  rep.rhs = 0.0;
  for (int k = 0; k < N.size; ++k)
    for (int i = 0; i < E.category().rank(); ++i) rep.rhs += double(N.at(kappa, kappa2, k) * S.n[k][i]) * s(i, j);
  rep.residual = std::abs(rep.lhs - rep.rhs);
  return rep;
}

}  // namespace bimod
