#include "bimod/mtc.hpp"

#include <algorithm>
#include <cmath>

#include "bimod/errors.hpp"

namespace bimod {

int FBlock::row_index(int e, int alpha, int beta) const {
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i][0] == e && rows[i][1] == alpha && rows[i][2] == beta) return static_cast<int>(i);
  return -1;
}

int FBlock::col_index(int f, int mu, int nu) const {
  for (std::size_t i = 0; i < cols.size(); ++i)
    if (cols[i][0] == f && cols[i][1] == mu && cols[i][2] == nu) return static_cast<int>(i);
  return -1;
}

int MtcData::label(const std::string& name) const {
  auto it = std::find(labels.begin(), labels.end(), name);
  if (it == labels.end()) throw ParseError("unknown label '" + name + "'");
  return static_cast<int>(it - labels.begin());
}

void MtcData::resize(int r) {
  labels.resize(r);
  dual.assign(r, 0);
  twist.assign(r, cplx(1.0, 0.0));
  fusion_.assign(static_cast<std::size_t>(r) * r * r, 0);
}

void MtcData::set_fusion(int a, int b, int c, int mult) {
  fusion_.at((a * rank() + b) * rank() + c) = mult;
}

void MtcData::finalize() {
  const int r = rank();
  if (static_cast<int>(fusion_.size()) != r * r * r) fusion_.assign(static_cast<std::size_t>(r) * r * r, 0);
  max_mult_ = 0;
  for (int v : fusion_) max_mult_ = std::max(max_mult_, v);

  block_index_.assign(static_cast<std::size_t>(r) * r * r * r, -1);
  blocks_.clear();
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        for (int d = 0; d < r; ++d) {
          FBlock blk;
          for (int e = 0; e < r; ++e)
            for (int al = 0; al < N(a, b, e); ++al)
              for (int be = 0; be < N(e, c, d); ++be) blk.rows.push_back({e, al, be});
          for (int f = 0; f < r; ++f)
            for (int mu = 0; mu < N(b, c, f); ++mu)
              for (int nu = 0; nu < N(a, f, d); ++nu) blk.cols.push_back({f, mu, nu});
          if (blk.rows.empty() && blk.cols.empty()) continue;
          blk.mat = Eigen::MatrixXcd::Zero(blk.rows.size(), blk.cols.size());
          for (std::size_t i = 0; i < blk.rows.size(); ++i)
            for (std::size_t j = 0; j < blk.cols.size(); ++j) {
              const auto& [e, al, be] = blk.rows[i];
              const auto& [f, mu, nu] = blk.cols[j];
              auto it = F_raw.find({a, b, c, d, e, f, al, be, mu, nu});
              if (it == F_raw.end())
                throw MissingSymbol("missing F entry for (" + name(a) + "," + name(b) + "," + name(c) + "," +
                                    name(d) + ";" + name(e) + "," + name(f) + ")");
              blk.mat(i, j) = it->second;
            }
          if (blk.mat.rows() == blk.mat.cols()) blk.inv = blk.mat.fullPivLu().inverse();
          block_index_[((a * r + b) * r + c) * r + d] = static_cast<int>(blocks_.size());
          blocks_.push_back(std::move(blk));
        }

  R_.assign(static_cast<std::size_t>(r) * r * r, Eigen::MatrixXcd());
  R_rev_.assign(static_cast<std::size_t>(r) * r * r, Eigen::MatrixXcd());
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        const int n = N(a, b, c);
        if (n == 0) continue;
        Eigen::MatrixXcd m(n, N(b, a, c));
        for (int mu = 0; mu < n; ++mu)
          for (int nu = 0; nu < N(b, a, c); ++nu) {
            auto it = R_raw.find({a, b, c, mu, nu});
            if (it == R_raw.end())
              throw MissingSymbol("missing R entry for (" + name(a) + "," + name(b) + "," + name(c) + ")");
            m(mu, nu) = it->second;
          }
        R_[(a * r + b) * r + c] = m;
      }
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        const auto& m = R_[(b * r + a) * r + c];
        if (m.size() == 0 || m.rows() != m.cols()) continue;
        R_rev_[(a * r + b) * r + c] = m.fullPivLu().inverse();
      }
}

const FBlock* MtcData::F_block(int a, int b, int c, int d) const {
  const int r = rank();
  const int idx = block_index_[((a * r + b) * r + c) * r + d];
  return idx < 0 ? nullptr : &blocks_[idx];
}

cplx MtcData::F(int a, int b, int c, int d, int e, int f, int alpha, int beta, int mu, int nu) const {
  const FBlock* blk = F_block(a, b, c, d);
  if (!blk) return 0.0;
  const int i = blk->row_index(e, alpha, beta);
  const int j = blk->col_index(f, mu, nu);
  if (i < 0 || j < 0) return 0.0;
  return blk->mat(i, j);
}

const Eigen::MatrixXcd& MtcData::R(int a, int b, int c) const {
  const int r = rank();
  return R_[(a * r + b) * r + c];
}

const Eigen::MatrixXcd& MtcData::R_inverse_reversed(int a, int b, int c) const {
  const int r = rank();
  return R_rev_[(a * r + b) * r + c];
}

bool AxiomReport::passed(double tol) const {
  return std::all_of(residuals.begin(), residuals.end(),
                     [tol](const IdentityResidual& r) { return r.max_residual <= tol; });
}

double AxiomReport::residual(const std::string& identity) const {
  for (const auto& r : residuals)
    if (r.identity == identity) return r.max_residual;
  return 0.0;
}

double pentagon_residual(const MtcData& C) {
  const int r = C.rank();
  double worst = 0.0;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        for (int d = 0; d < r; ++d)
          for (int t = 0; t < r; ++t)
            for (int f = 0; f < r; ++f)
              for (int g = 0; g < r; ++g) {
                if (!C.N(a, b, f) || !C.N(f, c, g) || !C.N(g, d, t)) continue;
                for (int l = 0; l < r; ++l)
                  for (int k = 0; k < r; ++k) {
                    if (!C.N(c, d, l) || !C.N(b, l, k) || !C.N(a, k, t)) continue;
                    for (int al = 0; al < C.N(a, b, f); ++al)
                      for (int be = 0; be < C.N(f, c, g); ++be)
                        for (int ga = 0; ga < C.N(g, d, t); ++ga)
                          for (int de = 0; de < C.N(c, d, l); ++de)
                            for (int ze = 0; ze < C.N(b, l, k); ++ze)
                              for (int et = 0; et < C.N(a, k, t); ++et) {
                                cplx lhs = 0.0;
                                for (int ep = 0; ep < C.N(f, l, t); ++ep)
                                  lhs += C.F(f, c, d, t, g, l, be, ga, de, ep) * C.F(a, b, l, t, f, k, al, ep, ze, et);
                                cplx rhs = 0.0;
                                for (int h = 0; h < r; ++h)
                                  for (int ka = 0; ka < C.N(b, c, h); ++ka)
                                    for (int la = 0; la < C.N(a, h, g); ++la)
                                      for (int si = 0; si < C.N(h, d, k); ++si)
                                        rhs += C.F(a, b, c, g, f, h, al, be, ka, la) *
                                               C.F(a, h, d, t, g, k, la, ga, si, et) *
                                               C.F(b, c, d, k, h, l, ka, si, de, ze);
                                worst = std::max(worst, std::abs(lhs - rhs));
                              }
                  }
              }
  return worst;
}

double hexagon_residual(const MtcData& C, bool reversed) {
  const int r = C.rank();
  auto Rm = [&](int a, int b, int c) -> const Eigen::MatrixXcd& {
    return reversed ? C.R_inverse_reversed(a, b, c) : C.R(a, b, c);
  };
  double worst = 0.0;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        for (int d = 0; d < r; ++d)
          for (int e = 0; e < r; ++e)
            for (int g = 0; g < r; ++g) {
              if (!C.N(a, b, e) || !C.N(e, c, d) || !C.N(c, a, g) || !C.N(b, g, d)) continue;
              for (int al = 0; al < C.N(a, b, e); ++al)
                for (int be = 0; be < C.N(e, c, d); ++be)
                  for (int rho = 0; rho < C.N(c, a, g); ++rho)
                    for (int nup = 0; nup < C.N(b, g, d); ++nup) {
                      cplx lhs = 0.0;
                      for (int f = 0; f < r; ++f) {
                        if (!C.N(b, c, f) || !C.N(a, f, d)) continue;
                        const auto& Raf = Rm(a, f, d);
                        for (int mu = 0; mu < C.N(b, c, f); ++mu)
                          for (int nu = 0; nu < C.N(a, f, d); ++nu)
                            for (int tau = 0; tau < C.N(f, a, d); ++tau)
                              lhs += C.F(a, b, c, d, e, f, al, be, mu, nu) * Raf(nu, tau) *
                                     C.F(b, c, a, d, f, g, mu, tau, rho, nup);
                      }
                      cplx rhs = 0.0;
                      const auto& Rab = Rm(a, b, e);
                      const auto& Rac = Rm(a, c, g);
                      for (int n2 = 0; n2 < C.N(b, a, e); ++n2)
                        for (int mp = 0; mp < C.N(a, c, g); ++mp)
                          rhs += Rab(al, n2) * C.F(b, a, c, d, e, g, n2, be, mp, nup) * Rac(mp, rho);
                      worst = std::max(worst, std::abs(lhs - rhs));
                    }
            }
  return worst;
}

AxiomReport check_axioms(const MtcData& C) {
  AxiomReport rep;
  const int r = C.rank();
  auto delta = [](int x, int y) { return x == y ? 1 : 0; };

  double unit = 0.0, duality = 0.0, assoc = 0.0;
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) {
      unit = std::max(unit, double(std::abs(C.N(0, j, k) - delta(j, k))));
      unit = std::max(unit, double(std::abs(C.N(j, 0, k) - delta(j, k))));
    }
  if (C.dual.empty() || C.dual[0] != 0) duality = 1.0;
  for (int i = 0; i < r; ++i) {
    if (C.dual[C.dual[i]] != i) duality = 1.0;
    for (int j = 0; j < r; ++j) duality = std::max(duality, double(std::abs(C.N(i, j, 0) - delta(j, C.dual[i]))));
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) {
          int lhs = 0, rhs = 0;
          for (int e = 0; e < r; ++e) lhs += C.N(i, j, e) * C.N(e, k, l);
          for (int f = 0; f < r; ++f) rhs += C.N(j, k, f) * C.N(i, f, l);
          assoc = std::max(assoc, double(std::abs(lhs - rhs)));
        }
  rep.residuals.push_back({"fusion_unit", unit});
  rep.residuals.push_back({"fusion_dual", duality});
  rep.residuals.push_back({"fusion_associativity", assoc});
  if (unit > 0 || duality > 0 || assoc > 0) return rep;

  double inv = 0.0, gauge = 0.0;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        for (int d = 0; d < r; ++d) {
          const FBlock* blk = C.F_block(a, b, c, d);
          if (!blk) continue;
          if (blk->inv.size() == 0 && blk->mat.size() > 0) {
            inv = 1.0;
            continue;
          }
          inv = std::max(inv, (blk->mat * blk->inv - Eigen::MatrixXcd::Identity(blk->mat.rows(), blk->mat.cols()))
                                  .cwiseAbs()
                                  .maxCoeff());
          if (a != 0 && b != 0 && c != 0) continue;
          for (std::size_t i = 0; i < blk->rows.size(); ++i)
            for (std::size_t j = 0; j < blk->cols.size(); ++j) {
              const auto& [e, al, be] = blk->rows[i];
              const auto& [f, mu, nu] = blk->cols[j];
              bool one = false;
              if (a == 0) one = (e == b && f == d && mu == be);
              else if (b == 0) one = (e == a && f == c && nu == be);
              else one = (e == d && f == b && nu == al);
              gauge = std::max(gauge, std::abs(blk->mat(i, j) - (one ? 1.0 : 0.0)));
            }
        }
  rep.residuals.push_back({"F_invertible", inv});
  rep.residuals.push_back({"unit_gauge", gauge});
  rep.residuals.push_back({"pentagon", pentagon_residual(C)});
  rep.residuals.push_back({"hexagon", hexagon_residual(C, false)});
  rep.residuals.push_back({"hexagon_reverse", hexagon_residual(C, true)});

  double tw = std::abs(C.twist[0] - 1.0);
  for (const auto& t : C.twist) tw = std::max(tw, std::abs(std::abs(t) - 1.0));
  rep.residuals.push_back({"twist_unit", tw});

  double bal = 0.0;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        if (!C.N(a, b, c)) continue;
        Eigen::MatrixXcd mono = C.R(a, b, c) * C.R(b, a, c);
        const cplx expect = C.twist[c] / (C.twist[a] * C.twist[b]);
        mono -= expect * Eigen::MatrixXcd::Identity(mono.rows(), mono.cols());
        bal = std::max(bal, mono.cwiseAbs().maxCoeff());
      }
  rep.residuals.push_back({"ribbon_balancing", bal});
  return rep;
}

MtcData gauge_transform(const MtcData& C, std::mt19937_64& rng, std::vector<cplx>* phases) {
  if (C.max_mult() > 1) throw Error("gauge_transform: only multiplicity-free data supported");
  const int r = C.rank();
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::vector<cplx> u(static_cast<std::size_t>(r) * r * r, cplx(1.0, 0.0));
  for (int a = 1; a < r; ++a)
    for (int b = 1; b < r; ++b)
      for (int c = 0; c < r; ++c)
        if (C.N(a, b, c)) u[(a * r + b) * r + c] = std::polar(1.0, angle(rng));
  auto U = [&](int a, int b, int c) { return u[(a * r + b) * r + c]; };

  MtcData out = C;
  for (auto& [key, val] : out.F_raw) {
    const auto [a, b, c, d, e, f, al, be, mu, nu] = key;
    (void)al, (void)be, (void)mu, (void)nu;
    if (!C.N(a, b, e) || !C.N(e, c, d) || !C.N(b, c, f) || !C.N(a, f, d)) continue;
    val *= U(a, b, e) * U(e, c, d) / (U(b, c, f) * U(a, f, d));
  }
  for (auto& [key, val] : out.R_raw) {
    const auto [a, b, c, mu, nu] = key;
    (void)mu, (void)nu;
    if (!C.N(a, b, c)) continue;
    val *= U(a, b, c) / U(b, a, c);
  }
  out.finalize();
  if (phases) *phases = u;
  return out;
}

}  // namespace bimod
