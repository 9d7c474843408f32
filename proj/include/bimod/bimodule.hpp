#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bimod/frobenius.hpp"

namespace bimod {

/// A-bimodule (obj, rho_l, rho_r). With `has_right` false this is a left module
/// and `rho_r` is unused.
struct Bimodule {
  Word obj;
  Morphism rho_l;
  Morphism rho_r;
  bool has_right = true;
  std::string name;
};

struct RetractPair {
  Morphism embed;     // target.obj -> source object
  Morphism restrict;  // source object -> target.obj
  Bimodule target;
};

struct ModuleResiduals {
  double left = 0, right = 0, commute = 0;
  double max() const { return std::max({left, right, commute}); }
};

Bimodule algebra_bimodule(const Engine& E, const Algebra& A);
/// alpha^+(U_i) (sign > 0) or alpha^-(U_i) on the object A U_i; the right action
/// braids U_i over A with c_{U,A} for alpha^+ and c_{A,U}^{-1} for alpha^-.
Bimodule alpha_induce(const Engine& E, const Algebra& A, int i, int sign);
/// U (x)^+ X (x)^- V on the word U X V.
Bimodule sandwich(const Engine& E, const Algebra& A, const Word& U, const Bimodule& X, const Word& V);
Bimodule induced_left_module(const Engine& E, const Algebra& A, int i);

ModuleResiduals module_residuals(const Engine& E, const Algebra& A, const Bimodule& X);

/// Coefficient vectors (columns, in the basis of Hom(X.obj, Y.obj)) spanning Hom_{A|A}(X, Y).
Eigen::MatrixXcd hom_bimodule_coeffs(const Engine& E, const Algebra& A, const Bimodule& X, const Bimodule& Y);
std::vector<Morphism> hom_bimodule(const Engine& E, const Algebra& A, const Bimodule& X, const Bimodule& Y);
int hom_dimension(const Engine& E, const Algebra& A, const Bimodule& X, const Bimodule& Y);
/// Largest intertwiner residual of f against X and Y.
double intertwiner_residual(const Engine& E, const Algebra& A, const Bimodule& X, const Bimodule& Y,
                            const Morphism& f);
bool is_isomorphic(const Engine& E, const Algebra& A, const Bimodule& X, const Bimodule& Y);

/// Transports X along an isomorphism (f: X.obj -> obj, f_inv: obj -> X.obj).
Bimodule transport(const Engine& E, const Algebra& A, const Bimodule& X, const Morphism& f, const Morphism& f_inv);
/// Isomorphic bimodule on a single-letter object (summand k repeated dim(X.obj, k) times).
RetractPair flatten(const Engine& E, const Algebra& A, const Bimodule& X);
/// Image of an idempotent bimodule endomorphism P of a single-letter bimodule X.
RetractPair split_idempotent(const Engine& E, const Algebra& A, const Bimodule& X, const Morphism& P);

/// Splitting of (rho_r^X (x) rho_l^Y) o (id (x) delta o eta (x) id).
/// Throws IdempotentSplitFailure if that morphism is not idempotent.
RetractPair tensor_over_A(const Engine& E, const Algebra& A, const Bimodule& X, const Bimodule& Y);

struct ZMatrix {
  Eigen::MatrixXi z;
  Eigen::MatrixXd raw;
};
/// z_{ij} = dim Hom_{A|A}(alpha^+(U_i), alpha^-(U_j)).
ZMatrix z_matrix(const Engine& E, const Algebra& A);

/// Splits X into simple summands, returned with repetition.
std::vector<Bimodule> decompose(const Engine& E, const Algebra& A, const Bimodule& X, std::mt19937_64& rng);

struct SimpleBimodules {
  std::vector<Bimodule> simples;
  /// multiplicity[g][kappa] of simple kappa in generator g = U_i (x)^+ A (x)^- U_j, g = i*rank + j.
  std::vector<std::vector<int>> multiplicity;
  std::vector<int> generator_end_dim;
  /// n[kappa][i] = dim Hom(U_i, X_kappa)
  std::vector<std::vector<int>> n;
};

/// Simple bimodules found as summands of U_i (x)^+ A (x)^- U_j, deduplicated and
/// ordered with A first and then by decreasing multiplicity vector of the underlying
/// object. Throws DecompositionIncomplete if a generator does not split into
/// simples consistently with dim End.
SimpleBimodules simple_bimodules(const Engine& E, const Algebra& A, std::uint64_t seed);

/// Number of isomorphism classes of simple left A-modules, found by splitting
/// the induced modules A U_i.
int count_simple_left_modules(const Engine& E, const Algebra& A, std::uint64_t seed);

}  // namespace bimod
