#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bimod/engine.hpp"

namespace bimod {

/// One structure constant: copy `a` of U_i times copy `b` of U_j into copy
/// `c` of U_k through vertex `mu`. Used for both m and (reversed) delta.
struct VertexComponent {
  int i = 0, a = 0, j = 0, b = 0, k = 0, c = 0, mu = 0;
  cplx val;
};

/// Component of a morphism between the unit and A: copy `c` of the unit label.
struct UnitComponent {
  int c = 0;
  cplx val;
};

/// Algebra data relative to the decomposition A = sum_i mult[i] U_i, with
/// summands ordered by label and then by copy.
struct AlgebraSpec {
  std::map<int, int> mult;
  std::vector<VertexComponent> m;
  std::vector<UnitComponent> eta;
  std::optional<std::vector<VertexComponent>> delta;
  std::optional<std::vector<UnitComponent>> eps;
};

struct Algebra {
  Object obj;
  Morphism m, eta, delta, eps;
  Word word() const { return {obj}; }
};

Object algebra_object(const std::map<int, int>& mult);

/// Builds m and eta from components (ShapeError on inconsistent indices), then
/// takes delta/eps from the spec if present or derives them, and normalizes.
Algebra build_algebra(const Engine& E, const AlgebraSpec& spec);
AlgebraSpec trivial_algebra_spec();
Algebra make_trivial_algebra(const Engine& E);

/// eps_nat = d_A o (id_{A^} (x) m) o (bt_A (x) id_A).
Morphism epsilon_natural(const Engine& E, const Algebra& A);

/// Sets eps := eps_nat and delta := (m (x) id) o (id (x) psi), where psi is
/// the copairing of the form eps o m; then normalizes.
void derive_coalgebra(const Engine& E, Algebra& A);

/// Rescales (delta, eps) so that m o delta = id_A exactly. Throws NotSpecial
/// if m o delta is not proportional to id_A or dim(A) vanishes.
Algebra normalize_counit(const Engine& E, const Algebra& A);

struct AlgebraReport {
  std::map<std::string, double> residuals;
  int end_dim = 0;
  bool passed = false;
};

/// Residuals of associativity, unit, coassociativity, counit, Frobenius,
/// symmetry, specialness and simplicity.
AlgebraReport validate_algebra(const Engine& E, const Algebra& A);

struct NondegReport {
  double iso_residual = 0.0;
  int rank = 0;
  int expected_rank = 0;
  bool passed = false;
};

/// Checks that [(eps_nat o m) (x) id] o (id (x) b_A) : A -> A^ is invertible with
/// inverse (d_A (x) id) o (id (x) delta o eta).
NondegReport nondegeneracy(const Engine& E, const Algebra& A);

/// Component data in a new F-gauge given the vertex phases of gauge_transform.
AlgebraSpec gauge_transform(const AlgebraSpec& spec, int rank, const std::vector<cplx>& phases);

/// A' = g A g^{-1} for an automorphism g of the underlying object.
Algebra conjugate(const Engine& E, const Algebra& A, const Morphism& g, const Morphism& g_inv);

}  // namespace bimod
