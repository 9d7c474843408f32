#include "bimod/modular.hpp"

#include "bimod/linalg.hpp"

namespace bimod {

Eigen::MatrixXcd s_matrix(const Engine& E) {
  const int r = E.category().rank();
  Eigen::MatrixXcd s(r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      // (d_j (x) dt_i) o [id_{j^} (x) c_{i,j} c_{j,i} (x) id_{i^}] o (bt_j (x) b_i)
      const Word I = simple_word({i}), J = simple_word({j});
      const Word Jv = dual_word(E.category(), J), Iv = dual_word(E.category(), I);
      Morphism dbl = E.compose(E.braid(I, J, false), E.braid(J, I, false));
      Morphism mid = E.tensor(E.tensor(E.identity(Jv), dbl), E.identity(Iv));
      Morphism cups = E.tensor(E.coev_tilde(J), E.coev(I));
      Morphism caps = E.tensor(E.ev(J), E.ev_tilde(I));
      s(i, j) = E.compose(caps, E.compose(mid, cups)).scalar();
    }
  }
  return s;
}

Eigen::MatrixXcd s_matrix_balancing(const Engine& E) {
  const MtcData& C = E.category();
  const int r = C.rank();
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        s(i, j) += double(C.N(i, j, k)) * E.dimension(k) * C.twist[k] / (C.twist[i] * C.twist[j]);
  return s;
}

ModularReport verify_modular(const Engine& E) {
  ModularReport rep;
  rep.s = s_matrix(E);
  const int r = E.category().rank();
  rep.symmetry_residual = (rep.s - rep.s.transpose()).cwiseAbs().maxCoeff();
  for (int i = 0; i < r; ++i)
    rep.dim_residual = std::max(rep.dim_residual, std::abs(rep.s(0, i) - E.dimension(i)));
  rep.smallest_singular_value = smallest_singular_value(rep.s);
  rep.modular = rep.smallest_singular_value > E.tol();
  return rep;
}

Eigen::VectorXcd twists(const MtcData& C) {
  Eigen::VectorXcd t(C.rank());
  for (int i = 0; i < C.rank(); ++i) t(i) = C.twist[i];
  return t;
}

}  // namespace bimod
