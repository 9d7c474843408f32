#pragma once

#include <Eigen/Dense>

#include <functional>

#include "bimod/mtc.hpp"

namespace bimod {

/// Relative singular-value threshold used for ranks and kernels.
inline constexpr double kRankTol = 1e-8;

/// Orthonormal basis (as columns) of the kernel of M.
Eigen::MatrixXcd nullspace(const Eigen::MatrixXcd& M, double rel_tol = kRankTol);
/// Orthonormal basis of the column space of M.
Eigen::MatrixXcd range(const Eigen::MatrixXcd& M, double rel_tol = kRankTol);
int numerical_rank(const Eigen::MatrixXcd& M, double rel_tol = kRankTol);
double smallest_singular_value(const Eigen::MatrixXcd& M);

/// Rounds x to the nearest integer n, throwing NonIntegerDim unless |x - n| < 100 tol.
int round_integer(double x, double tol, const char* what = "dimension");

/// Matrix of a linear map R^n -> R^m given on basis vectors, one column per basis vector.
Eigen::MatrixXcd matrix_of(int n, const std::function<Eigen::VectorXcd(int)>& column);

}  // namespace bimod
