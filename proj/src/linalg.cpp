#include "bimod/linalg.hpp"

#include <cmath>
#include <string>

#include "bimod/errors.hpp"

namespace bimod {

namespace {

double threshold(const Eigen::VectorXd& sv, double rel_tol) {
  double top = sv.size() ? sv(0) : 0.0;
  return rel_tol * std::max(1.0, top);
}

}  // namespace

Eigen::MatrixXcd nullspace(const Eigen::MatrixXcd& M, double rel_tol) {
  const auto n = M.cols();
  if (M.rows() == 0) return Eigen::MatrixXcd::Identity(n, n);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double thr = threshold(sv, rel_tol);
  int r = 0;
  while (r < sv.size() && sv(r) > thr) ++r;
  return svd.matrixV().rightCols(n - r);
}

Eigen::MatrixXcd range(const Eigen::MatrixXcd& M, double rel_tol) {
  if (M.size() == 0) return Eigen::MatrixXcd(M.rows(), 0);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeThinU);
  return svd.matrixU().leftCols(numerical_rank(M, rel_tol));
}

int numerical_rank(const Eigen::MatrixXcd& M, double rel_tol) {
  if (M.size() == 0) return 0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(M);
  const auto& sv = svd.singularValues();
  double thr = threshold(sv, rel_tol);
  int r = 0;
  while (r < sv.size() && sv(r) > thr) ++r;
  return r;
}

double smallest_singular_value(const Eigen::MatrixXcd& M) {
  if (M.size() == 0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(M);
  const auto& sv = svd.singularValues();
  if (M.rows() != M.cols()) return 0.0;
  return sv(sv.size() - 1);
}

int round_integer(double x, double tol, const char* what) {
  double n = std::round(x);
  if (std::abs(x - n) >= 100.0 * tol) {
    throw NonIntegerDim(std::string(what) + " " + std::to_string(x) + " is not an integer");
  }
  return static_cast<int>(n);
}

Eigen::MatrixXcd matrix_of(int n, const std::function<Eigen::VectorXcd(int)>& column) {
  Eigen::MatrixXcd M;
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXcd v = column(j);
    if (j == 0) M = Eigen::MatrixXcd::Zero(v.size(), n);
    M.col(j) = v;
  }
  return M;
}

}  // namespace bimod
