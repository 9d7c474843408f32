#include <doctest.h>

#include <random>

#include "bimod/catalog.hpp"
#include "bimod/engine.hpp"
#include "bimod/errors.hpp"

using namespace bimod;

namespace {

Morphism random_morphism(const Engine& E, const Word& src, const Word& tgt, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  HomBasis basis = E.hom_space(src, tgt);
  Eigen::VectorXcd v(basis.dimension());
  for (int i = 0; i < v.size(); ++i) v(i) = cplx(g(rng), g(rng));
  return E.from_coefficients(src, tgt, v);
}

}  // namespace

TEST_CASE("hom space dimensions") {
  auto fib = catalog("fibonacci").data;
  Engine F(fib);
  const int t = fib->label("tau");
  CHECK(F.hom_space(simple_word({t, t}), simple_word({t, t})).dimension() == 2);
  CHECK(F.hom_space(simple_word({t, t, t}), simple_word({t})).dimension() == 2);

  auto ising = catalog("ising").data;
  Engine I(ising);
  const int s = ising->label("sigma"), p = ising->label("psi");
  CHECK(I.hom_space(simple_word({s, s}), simple_word({p})).dimension() == 1);
  CHECK(I.hom_space(simple_word({s, p}), simple_word({p})).dimension() == 0);

  for (const char* name : {"su2_3", "vec_z3", "toric_code"}) {
    auto C = catalog(name).data;
    Engine E(C);
    for (int i = 0; i < C->rank(); ++i)
      for (int j = 0; j < C->rank(); ++j)
        CHECK(E.hom_space({}, simple_word({i, j})).dimension() == (C->dual[i] == j ? 1 : 0));
  }
}

TEST_CASE("interchange law and associativity of the tensor product") {
  auto C = catalog("su2_2").data;
  Engine E(C);
  std::mt19937_64 rng(1);
  const Word u = simple_word({1, 1}), v = simple_word({1}), w = simple_word({2, 1});
  Morphism f1 = random_morphism(E, u, v, rng), f2 = random_morphism(E, v, u, rng);
  Morphism g1 = random_morphism(E, w, u, rng), g2 = random_morphism(E, u, w, rng);
  Morphism lhs = E.compose(E.tensor(f2, g2), E.tensor(f1, g1));
  Morphism rhs = E.tensor(E.compose(f2, f1), E.compose(g2, g1));
  CHECK(distance(lhs, rhs) < 1e-10);

  // Re-associating a triple tensor product leaves the coefficients unchanged.
  Morphism h = random_morphism(E, v, u, rng);
  CHECK(distance(E.tensor(E.tensor(f1, g1), h), E.tensor(f1, E.tensor(g1, h))) < 1e-10);
  CHECK(distance(E.compose(E.identity(v), f1), f1) < 1e-12);
  CHECK(distance(E.tensor(E.identity({}), f1), f1) < 1e-12);
}

TEST_CASE("braiding is natural, invertible and satisfies the hexagon on words") {
  for (const char* name : {"fibonacci", "ising", "su2_3"}) {
    CAPTURE(name);
    auto C = catalog(name).data;
    Engine E(C);
    std::mt19937_64 rng(3);
    const int a = C->rank() - 1;
    const Word u = simple_word({a, a}), v = simple_word({a}), x = simple_word({1});
    Morphism f = random_morphism(E, u, u, rng);
    Morphism g = random_morphism(E, v, v, rng);
    Morphism lhs = E.compose(E.braid(u, v, false), E.tensor(f, g));
    Morphism rhs = E.compose(E.tensor(g, f), E.braid(u, v, false));
    CHECK(distance(lhs, rhs) < 1e-10);
    CHECK(distance(E.compose(E.braid(u, v, true), E.braid(u, v, false)), E.identity(concat(u, v))) < 1e-10);
    // c_{u, v x} = (id_v (x) c_{u,x}) o (c_{u,v} (x) id_x)
    Morphism split = E.compose(E.tensor(E.identity(v), E.braid(u, x, false)), E.tensor(E.braid(u, v, false), E.identity(x)));
    CHECK(distance(E.braid(u, concat(v, x), false), split) < 1e-10);
  }
}

TEST_CASE("dualities: zig-zag, sovereignty and traces") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    auto C = catalog(name).data;
    Engine E(C);
    for (int i = 0; i < C->rank(); ++i) {
      const DualityData& D = E.duality(i);
      CHECK(D.zigzag_residual < 1e-10);
      CHECK(D.sovereign_residual < 1e-10);
      const Word I = simple_word({i});
      Morphism zig = E.compose(E.tensor(E.identity(I), D.d), E.tensor(D.b, E.identity(I)));
      CHECK(distance(zig, E.identity(I)) < 1e-10);
      Morphism zag = E.compose(E.tensor(D.dt, E.identity(I)), E.tensor(E.identity(I), D.bt));
      CHECK(distance(zag, E.identity(I)) < 1e-10);
      CHECK(std::abs(E.trace(E.identity(I)) - E.trace_left(E.identity(I))) < 1e-10);
      CHECK(std::abs(E.dimension(i) - E.dimension(C->dual[i])) < 1e-10);
    }
  }
  auto C = catalog("su2_3").data;
  Engine E(C);
  std::mt19937_64 rng(5);
  const Word w = simple_word({1, 2});
  Morphism f = random_morphism(E, w, w, rng);
  CHECK(std::abs(E.trace(f) - E.trace_left(f)) < 1e-10);
  Morphism zig = E.compose(E.tensor(E.identity(w), E.ev(w)), E.tensor(E.coev(w), E.identity(w)));
  CHECK(distance(zig, E.identity(w)) < 1e-10);
}

TEST_CASE("twist from the braiding and duality") {
  for (const char* name : {"fibonacci", "ising", "su2_4", "toric_code"}) {
    CAPTURE(name);
    auto C = catalog(name).data;
    Engine E(C);
    for (int i = 0; i < C->rank(); ++i) {
      const Word I = simple_word({i});
      Morphism cc = E.braid(I, I, false);
      // Partial trace of c_{i,i} over the right factor is theta_i id_i.
      const DualityData& D = E.duality(i);
      Morphism left = E.compose(E.tensor(E.identity(I), D.dt),
                                E.compose(E.tensor(cc, E.identity(dual_word(*C, I))), E.tensor(E.identity(I), D.b)));
      CHECK(distance(left, C->twist[i] * E.identity(I)) < 1e-10);
    }
  }
}

TEST_CASE("scalar of an open morphism is a type error") {
  Engine E(catalog("fibonacci").data);
  CHECK_THROWS_AS(E.identity(simple_word({1})).scalar(), TypeMismatch);
}
