#pragma once

#include <Eigen/Dense>

#include "bimod/engine.hpp"

namespace bimod {

/// Unnormalized S-matrix: s_{ij} = trace of the double braiding of U_i and U_j.
Eigen::MatrixXcd s_matrix(const Engine& E);

/// Closed-form value sum_k N_ij^k dim(k) theta_k / (theta_i theta_j), used as a cross-check.
Eigen::MatrixXcd s_matrix_balancing(const Engine& E);

struct ModularReport {
  Eigen::MatrixXcd s;
  double symmetry_residual = 0.0;
  /// max_i |s_{0,i} - dim(U_i)|
  double dim_residual = 0.0;
  double smallest_singular_value = 0.0;
  bool modular = false;
};

ModularReport verify_modular(const Engine& E);

Eigen::VectorXcd twists(const MtcData& C);

}  // namespace bimod
