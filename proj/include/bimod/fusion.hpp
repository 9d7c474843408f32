#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bimod/bimodule.hpp"

namespace bimod {

struct FusionTable {
  int size = 0;
  /// N[(a * size + b) * size + c] = N_{ab}^c
  std::vector<int> N;
  int at(int a, int b, int c) const { return N[(a * size + b) * size + c]; }
  int& at(int a, int b, int c) { return N[(a * size + b) * size + c]; }
  bool operator==(const FusionTable&) const = default;
};

/// Unit law with respect to `unit` and associativity; returns a description of the first failure or "".
std::string fusion_table_defect(const FusionTable& T, int unit = 0);

/// N_{ab}^c = dim Hom_{A|A}(X_a (x)_A X_b, X_c).
FusionTable fusion_table_direct(const Engine& E, const Algebra& A, const std::vector<Bimodule>& simples);

/// The loop map D_X^{U,V}(phi) on Hom(U A V, A).
Morphism D_map(const Engine& E, const Algebra& A, const Bimodule& X, const Word& U, const Word& V,
               const Morphism& phi, bool check = true);

/// Diagram text evaluated by D_map, over objects U, A, V, X and morphisms
/// rhol, rhor, eta, delta, eps, phi.
const std::string& D_map_diagram();

/// One block (i,j) of the algebra E: a basis h of Hom_{A|A}(U_i x+ A x- U_j, A)
/// and its dual basis hbar under (f, g) -> eps o f o g o eta.
struct HomBlock {
  int i = 0, j = 0;
  Bimodule sandwich;
  std::vector<Morphism> h;
  std::vector<Morphism> hbar;
};

std::vector<HomBlock> hom_blocks(const Engine& E, const Algebra& A);

struct DMatrix {
  std::vector<HomBlock> blocks;
  /// columns (block, alpha, beta) in this order
  std::vector<std::array<int, 3>> columns;
  Eigen::MatrixXcd d;
  double smallest_singular_value = 0.0;
  /// matrix of D_{X_kappa} on block p: entry (alpha, beta) = d_{kappa,(p) alpha beta}
  Eigen::MatrixXcd block_matrix(int kappa, int p) const;
};

/// d_{kappa,(ij) alpha beta} = eps o D_{X_kappa}(h_beta) o hbar_alpha o eta.
/// Throws SingularD if d is not square and invertible.
DMatrix d_matrix(const Engine& E, const Algebra& A, const std::vector<Bimodule>& simples);
/// Matrix of D_X on block p in the basis h.
Eigen::MatrixXcd D_block(const Engine& E, const Algebra& A, const Bimodule& X, const HomBlock& b);

/// N_{ab}^c = sum_p sum_{alpha beta gamma} d_{a,(p) alpha beta} d_{b,(p) beta gamma} dinv_{(p) alpha gamma, c}.
/// Throws NonIntegerStructureConstant.
FusionTable fusion_table_blockdiag(const DMatrix& d, double tol);

struct VerifyReport {
  Eigen::MatrixXi z;
  std::vector<std::array<int, 2>> P;
  std::map<std::string, int> n;
  int K = 0;
  int trace_zz = 0;
  int trace_z = 0;
  int left_modules = 0;
  FusionTable direct, blockdiag;
  std::map<std::string, double> residuals;
  double smallest_singular_value = 0.0;
  std::vector<std::string> failures;
  bool pass = false;
};

VerifyReport verify_bimodule_category(const Engine& E, const Algebra& A, std::uint64_t seed);

struct DefectReport {
  int kappa = 0, kappa2 = 0, j = 0;
  cplx lhs, rhs;
  double residual = 0.0;
};

/// Closed diagram: the loop X_kappa (x)_A X_kappa2 linked with a U_j loop.
const std::string& defect_diagram();
DefectReport defect_identity(const Engine& E, const Algebra& A, const SimpleBimodules& S, const FusionTable& N,
                             const Eigen::MatrixXcd& s, int kappa, int kappa2, int j);

}  // namespace bimod
