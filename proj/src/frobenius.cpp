#include "bimod/frobenius.hpp"

#include "bimod/bimodule.hpp"
#include "bimod/errors.hpp"
#include "bimod/linalg.hpp"

namespace bimod {

Object algebra_object(const std::map<int, int>& mult) {
  Object A;
  for (auto [label, n] : mult)
    for (int c = 0; c < n; ++c) A.summands.push_back(label);
  return A;
}

namespace {

int summand(const Object& A, int label, int copy) {
  int s = A.summand_index(label, copy);
  if (s < 0) throw ShapeError("algebra component refers to a missing summand");
  return s;
}

// Sets the entry of f (Hom(A A, A) if `product`, else Hom(A, A A)) for one vertex.
void set_vertex(const Engine& E, Morphism& f, const Object& A, const VertexComponent& v, bool product) {
  const MtcData& C = E.category();
  if (v.mu < 0 || v.mu >= C.N(v.i, v.j, v.k)) throw ShapeError("algebra component on an absent fusion channel");
  Word AA{A, A};
  Tree pair{{summand(A, v.i, v.a), summand(A, v.j, v.b)}, {v.i, v.k}, {0, v.mu}};
  Tree single{{summand(A, v.k, v.c)}, {v.k}, {0}};
  int p = E.trees(AA, v.k).find(pair);
  int s = E.trees({A}, v.k).find(single);
  if (product)
    f.blocks[v.k](s, p) = v.val;
  else
    f.blocks[v.k](p, s) = v.val;
}

void set_unit(const Engine& E, Morphism& f, const Object& A, const UnitComponent& u, bool unit) {
  Tree t{{summand(A, 0, u.c)}, {0}, {0}};
  int s = E.trees({A}, 0).find(t);
  if (unit)
    f.blocks[0](s, 0) = u.val;
  else
    f.blocks[0](0, s) = u.val;
}

}  // namespace

Algebra build_algebra(const Engine& E, const AlgebraSpec& spec) {
  for (auto [label, n] : spec.mult) {
    if (label < 0 || label >= E.category().rank() || n < 0) throw ShapeError("bad algebra multiplicity");
  }
  Algebra A;
  A.obj = algebra_object(spec.mult);
  if (A.obj.multiplicity(0) == 0) throw ShapeError("algebra does not contain the tensor unit");
  const Word W = A.word();
  A.m = E.zero({A.obj, A.obj}, W);
  for (const auto& v : spec.m) set_vertex(E, A.m, A.obj, v, true);
  A.eta = E.zero({}, W);
  for (const auto& u : spec.eta) set_unit(E, A.eta, A.obj, u, true);
  if (spec.delta && spec.eps) {
    A.delta = E.zero(W, {A.obj, A.obj});
    for (const auto& v : *spec.delta) set_vertex(E, A.delta, A.obj, v, false);
    A.eps = E.zero(W, {});
    for (const auto& u : *spec.eps) set_unit(E, A.eps, A.obj, u, false);
    return A;
  }
  derive_coalgebra(E, A);
  return A;
}

AlgebraSpec trivial_algebra_spec() {
  AlgebraSpec s;
  s.mult[0] = 1;
  s.m.push_back({0, 0, 0, 0, 0, 0, 0, 1.0});
  s.eta.push_back({0, 1.0});
  return s;
}

Algebra make_trivial_algebra(const Engine& E) { return build_algebra(E, trivial_algebra_spec()); }

Morphism epsilon_natural(const Engine& E, const Algebra& A) {
  const Word W = A.word();
  const Word Wv = dual_word(E.category(), W);
  Morphism f = E.tensor(E.identity(Wv), A.m);
  return E.compose(E.ev(W), E.compose(f, E.tensor(E.coev_tilde(W), E.identity(W))));
}

void derive_coalgebra(const Engine& E, Algebra& A) {
  const Word W = A.word();
  const Word AA{A.obj, A.obj};
  A.eps = epsilon_natural(E, A);
  Morphism form = E.compose(A.eps, A.m);
  // Copairing psi in Hom(1, A A) with (form (x) id)(id (x) psi) = id_A.
  HomBasis basis = E.hom_space({}, AA);
  Morphism idW = E.identity(W);
  auto snake = [&](const Morphism& psi) { return E.compose(E.tensor(form, idW), E.tensor(idW, psi)); };
  Eigen::MatrixXcd M = matrix_of(basis.dimension(), [&](int c) { return snake(E.basis_element(basis, c)).flatten(); });
  Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(basis.dimension());
  if (basis.dimension() > 0) coeffs = M.completeOrthogonalDecomposition().solve(idW.flatten());
  Morphism psi = E.from_coefficients({}, AA, coeffs);
  A.delta = E.compose(E.tensor(A.m, idW), E.tensor(idW, psi));
  try {
    A = normalize_counit(E, A);
  } catch (const NotSpecial&) {
    // Leave the unnormalized data; validate_algebra reports the failure.
  }
}

Algebra normalize_counit(const Engine& E, const Algebra& A) {
  const Word W = A.word();
  Morphism md = E.compose(A.m, A.delta);
  Morphism id = E.identity(W);
  cplx lambda = md.flatten().dot(id.flatten()) / id.flatten().squaredNorm();
  double scale = std::max(1.0, md.norm());
  if (std::abs(lambda) < E.tol() * scale || distance(md, lambda * id) > 1e3 * E.tol() * scale) {
    throw NotSpecial("m o delta is not a nonzero multiple of id_A");
  }
  cplx dimA = E.dimension(A.obj);
  if (std::abs(dimA) < 1e3 * E.tol()) throw NotSpecial("dim(A) vanishes");
  Algebra out = A;
  out.delta *= 1.0 / lambda;
  out.eps *= lambda;
  return out;
}

AlgebraReport validate_algebra(const Engine& E, const Algebra& A) {
  AlgebraReport rep;
  const Word W = A.word();
  const Word Wv = dual_word(E.category(), W);
  Morphism id = E.identity(W);
  auto& r = rep.residuals;
  auto dist = [](const Morphism& a, const Morphism& b) { return distance(a, b); };
  r["associativity"] = dist(E.compose(A.m, E.tensor(A.m, id)), E.compose(A.m, E.tensor(id, A.m)));
  r["unit"] = std::max(dist(E.compose(A.m, E.tensor(A.eta, id)), id), dist(E.compose(A.m, E.tensor(id, A.eta)), id));
  r["coassociativity"] =
      dist(E.compose(E.tensor(A.delta, id), A.delta), E.compose(E.tensor(id, A.delta), A.delta));
  r["counit"] =
      std::max(dist(E.compose(E.tensor(A.eps, id), A.delta), id), dist(E.compose(E.tensor(id, A.eps), A.delta), id));
  Morphism dm = E.compose(A.delta, A.m);
  r["frobenius"] = std::max(dist(E.compose(E.tensor(id, A.m), E.tensor(A.delta, id)), dm),
                            dist(E.compose(E.tensor(A.m, id), E.tensor(id, A.delta)), dm));
  Morphism loop = E.compose(E.compose(A.delta, A.eta), E.compose(A.eps, A.m));
  Morphism sym = E.compose(E.tensor(E.ev(W), id),
                           E.compose(E.tensor(E.identity(Wv), loop), E.tensor(E.coev_tilde(W), id)));
  r["symmetric"] = dist(sym, id);
  r["special"] = std::max(dist(E.compose(A.m, A.delta), id),
                          std::abs(E.compose(A.eps, A.eta).scalar() - E.dimension(A.obj)));
  Bimodule AA = algebra_bimodule(E, A);
  rep.end_dim = hom_dimension(E, A, AA, AA);
  r["simple"] = std::abs(rep.end_dim - 1);
  rep.passed = true;
  for (auto& [k, v] : r) rep.passed = rep.passed && v < 1e3 * E.tol();
  return rep;
}

NondegReport nondegeneracy(const Engine& E, const Algebra& A) {
  NondegReport rep;
  const Word W = A.word();
  const Word Wv = dual_word(E.category(), W);
  Morphism form = E.compose(epsilon_natural(E, A), A.m);
  Morphism phi = E.compose(E.tensor(form, E.identity(Wv)), E.tensor(E.identity(W), E.coev(W)));
  Morphism psi = E.compose(E.tensor(E.ev(W), E.identity(W)),
                           E.tensor(E.identity(Wv), E.compose(A.delta, A.eta)));
  rep.iso_residual = std::max(distance(E.compose(psi, phi), E.identity(W)),
                              distance(E.compose(phi, psi), E.identity(Wv)));
  for (const auto& b : phi.blocks) rep.rank += numerical_rank(b);
  rep.expected_rank = A.obj.size();
  rep.passed = rep.iso_residual < 1e3 * E.tol() && rep.rank == rep.expected_rank;
  return rep;
}

AlgebraSpec gauge_transform(const AlgebraSpec& spec, int rank, const std::vector<cplx>& phases) {
  AlgebraSpec out = spec;
  auto u = [&](int a, int b, int c) { return phases[(a * rank + b) * rank + c]; };
  for (auto& v : out.m) v.val *= u(v.i, v.j, v.k);
  if (out.delta)
    for (auto& v : *out.delta) v.val /= u(v.i, v.j, v.k);
  return out;
}

Algebra conjugate(const Engine& E, const Algebra& A, const Morphism& g, const Morphism& g_inv) {
  Algebra out = A;
  out.m = E.compose(g, E.compose(A.m, E.tensor(g_inv, g_inv)));
  out.eta = E.compose(g, A.eta);
  out.delta = E.compose(E.tensor(g, g), E.compose(A.delta, g_inv));
  out.eps = E.compose(A.eps, g_inv);
  return out;
}

}  // namespace bimod
