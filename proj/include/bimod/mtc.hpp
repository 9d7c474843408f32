#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace bimod {

using cplx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;

/// One associator block F^{abc}_d.
///
/// Rows are left-combed channels (e, alpha, beta) with alpha a vertex of
/// a*b -> e and beta of e*c -> d; columns are right-combed channels
/// (f, mu, nu) with mu a vertex of b*c -> f and nu of a*f -> d:
///
///   (psi^{ab}_{e,alpha} (x) id_c) psi^{ec}_{d,beta}
///       = sum F[(e,alpha,beta),(f,mu,nu)] (id_a (x) psi^{bc}_{f,mu}) psi^{af}_{d,nu}
struct FBlock {
  std::vector<std::array<int, 3>> rows;
  std::vector<std::array<int, 3>> cols;
  Eigen::MatrixXcd mat;
  Eigen::MatrixXcd inv;

  int row_index(int e, int alpha, int beta) const;
  int col_index(int f, int mu, int nu) const;
};

/// Skeletal data of a ribbon fusion category.
///
/// Braiding convention: c_{a,b} psi^{ab}_{c,mu} = sum_nu R[a,b,c](mu,nu) psi^{ba}_{c,nu}.
/// Immutable after `finalize()`; share it as `std::shared_ptr<const MtcData>`.
class MtcData {
 public:
  std::vector<std::string> labels;
  std::vector<int> dual;
  std::vector<cplx> twist;
  double tol = kDefaultTol;

  /// Raw entries keyed (a,b,c,d,e,f,alpha,beta,mu,nu) and (a,b,c,mu,nu).
  std::map<std::array<int, 10>, cplx> F_raw;
  std::map<std::array<int, 5>, cplx> R_raw;

  int rank() const { return static_cast<int>(labels.size()); }
  int label(const std::string& name) const;
  const std::string& name(int a) const { return labels.at(a); }

  void resize(int rank);
  void set_fusion(int a, int b, int c, int mult);
  int N(int a, int b, int c) const { return fusion_[(a * rank() + b) * rank() + c]; }
  int max_mult() const { return max_mult_; }

  /// Builds the F blocks and R matrices from the raw entries. Throws
  /// MissingSymbol if an entry of an admissible channel is absent.
  void finalize();

  const FBlock* F_block(int a, int b, int c, int d) const;
  cplx F(int a, int b, int c, int d, int e, int f, int alpha, int beta, int mu, int nu) const;
  /// Matrix R[a,b,c] of size N(a,b,c) x N(b,a,c); empty when the channel is absent.
  const Eigen::MatrixXcd& R(int a, int b, int c) const;
  const Eigen::MatrixXcd& R_inverse_reversed(int a, int b, int c) const;

 private:
  std::vector<int> fusion_;
  int max_mult_ = 0;
  std::vector<int> block_index_;
  std::vector<FBlock> blocks_;
  std::vector<Eigen::MatrixXcd> R_;
  std::vector<Eigen::MatrixXcd> R_rev_;
  Eigen::MatrixXcd empty_;
};

struct IdentityResidual {
  std::string identity;
  double max_residual = 0.0;
};

struct AxiomReport {
  std::vector<IdentityResidual> residuals;
  bool passed(double tol) const;
  double residual(const std::string& identity) const;
};

/// Checks fusion-ring axioms, unit gauge, pentagon, both hexagons and the
/// balancing relation between R and the twists.
AxiomReport check_axioms(const MtcData& C);

double pentagon_residual(const MtcData& C);
double hexagon_residual(const MtcData& C, bool reversed);

/// Multiplicity-free vertex gauge transformation with random unit phases
/// (unit vertices untouched). `phases[(a*r+b)*r+c]` is returned for callers
/// that need to transform morphism data along with the category.
MtcData gauge_transform(const MtcData& C, std::mt19937_64& rng, std::vector<cplx>* phases = nullptr);

}  // namespace bimod
