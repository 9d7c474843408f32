#include <doctest.h>

#include "bimod/diagram.hpp"
#include "bimod/errors.hpp"
#include "bimod/fusion.hpp"
#include "bimod/modular.hpp"
#include "pairs.hpp"

using namespace bimod;
using bimod::testing::Pair;

namespace {

struct Setup {
  std::shared_ptr<const MtcData> C;
  Engine E;
  Algebra A;
  SimpleBimodules S;
  explicit Setup(const Pair& p)
      : C(catalog(p.category).data),
        E(C),
        A(build_algebra(E, bimod::testing::load_spec(p, *C))),
        S(simple_bimodules(E, A, 1)) {}
};

Morphism random_morphism(const Engine& E, const Word& src, const Word& tgt, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  HomBasis basis = E.hom_space(src, tgt);
  Eigen::VectorXcd v(basis.dimension());
  for (int i = 0; i < v.size(); ++i) v(i) = cplx(g(rng), g(rng));
  return E.from_coefficients(src, tgt, v);
}

}  // namespace

TEST_CASE("A = 1 reproduces the fusion rules of the category") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    Setup s({name, "trivial"});
    const int r = s.C->rank();
    DMatrix D = d_matrix(s.E, s.A, s.S.simples);
    FusionTable T = fusion_table_blockdiag(D, 1e-9);
    REQUIRE(T.size == r);
    // With A = 1 the simples are the U_i in label order.
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        for (int c = 0; c < r; ++c) CHECK(T.at(a, b, c) == s.C->N(a, b, c));
    CHECK(fusion_table_direct(s.E, s.A, s.S.simples) == T);
  }
}

TEST_CASE("D_A is the identity and D is linear") {
  for (const Pair& p : bimod::testing::all_pairs()) {
    CAPTURE(p.label());
    Setup s(p);
    DMatrix D = d_matrix(s.E, s.A, s.S.simples);
    CHECK(D.smallest_singular_value > 1e-6);
    for (int q = 0; q < static_cast<int>(D.blocks.size()); ++q) {
      Eigen::MatrixXcd M = D.block_matrix(0, q);
      CHECK((M - Eigen::MatrixXcd::Identity(M.rows(), M.cols())).cwiseAbs().maxCoeff() < 1e-9);
    }
    const HomBlock& b = D.blocks.back();
    const Word U = simple_word({b.i}), V = simple_word({b.j});
    const Bimodule& X = s.S.simples.back();
    Morphism phi = b.h.front();
    Morphism psi = b.h.back();
    Morphism lhs = D_map(s.E, s.A, X, U, V, cplx(2.0, 1.0) * phi + psi);
    Morphism rhs = cplx(2.0, 1.0) * D_map(s.E, s.A, X, U, V, phi) + D_map(s.E, s.A, X, U, V, psi);
    CHECK(distance(lhs, rhs) < 1e-9);
  }
}

TEST_CASE("D rejects maps that are not bimodule morphisms") {
  Setup s({"su2_4", "su2_4_d.alg.json"});
  std::vector<HomBlock> blocks = hom_blocks(s.E, s.A);
  std::mt19937_64 rng(2);
  bool tried = false;
  for (const HomBlock& b : blocks) {
    HomBasis all = s.E.hom_space(b.sandwich.obj, s.A.word());
    if (all.dimension() <= static_cast<int>(b.h.size())) continue;
    Morphism phi = random_morphism(s.E, b.sandwich.obj, s.A.word(), rng);
    CHECK_THROWS_AS(D_map(s.E, s.A, s.S.simples[0], simple_word({b.i}), simple_word({b.j}), phi), NotIntertwiner);
    tried = true;
    break;
  }
  CHECK(tried);
}

TEST_CASE("loop diagrams parse and type check") {
  CHECK(parse_diagram(D_map_diagram()) != nullptr);
  CHECK(parse_diagram(defect_diagram()) != nullptr);
}

TEST_CASE("defect identity holds for every triple of small cases") {
  for (const Pair& p : {Pair{"ising", "trivial"}, Pair{"su2_3", "trivial"}, Pair{"toric_code", "ze.alg.json"}}) {
    CAPTURE(p.label());
    Setup s(p);
    FusionTable N = fusion_table_direct(s.E, s.A, s.S.simples);
    Eigen::MatrixXcd sm = s_matrix(s.E);
    const int K = N.size;
    for (int a = 0; a < K; ++a)
      for (int b = 0; b < K; ++b)
        for (int j = 0; j < s.C->rank(); ++j) CHECK(defect_identity(s.E, s.A, s.S, N, sm, a, b, j).residual < 1e-9);
  }
}

TEST_CASE("fusion table checks") {
  FusionTable T{2, {1, 0, 0, 1, 0, 1, 1, 1}};
  CHECK(fusion_table_defect(T).empty());
  T.at(1, 1, 1) = 0;
  T.at(0, 1, 1) = 0;
  CHECK_FALSE(fusion_table_defect(T).empty());

  // Commutative with a unit but not associative: (1 1) 2 = 0 while 1 (1 2) = 1.
  FusionTable U{3, std::vector<int>(27, 0)};
  for (int x = 0; x < 3; ++x) U.at(0, x, x) = U.at(x, 0, x) = 1;
  U.at(1, 1, 2) = U.at(1, 2, 0) = U.at(2, 1, 0) = U.at(2, 2, 0) = 1;
  CHECK_FALSE(fusion_table_defect(U).empty());

  Setup s({"fibonacci", "trivial"});
  DMatrix D = d_matrix(s.E, s.A, s.S.simples);
  D.d(1, 0) += 0.3;
  CHECK_THROWS_AS(fusion_table_blockdiag(D, 1e-9), NonIntegerStructureConstant);
}

TEST_CASE("gauge-invariant quantities are unchanged by a gauge transformation") {
  for (const Pair& p : {Pair{"ising", "trivial"}, Pair{"toric_code", "ze.alg.json"}, Pair{"su2_4", "su2_4_d.alg.json"}}) {
    CAPTURE(p.label());
    auto C = catalog(p.category).data;
    AlgebraSpec spec = bimod::testing::load_spec(p, *C);
    Engine E0(C);
    VerifyReport before = verify_bimodule_category(E0, build_algebra(E0, spec), 4);

    std::mt19937_64 rng(21);
    std::vector<cplx> phases;
    auto G = std::make_shared<const MtcData>(gauge_transform(*C, rng, &phases));
    Engine E1(G);
    VerifyReport after = verify_bimodule_category(E1, build_algebra(E1, gauge_transform(spec, C->rank(), phases)), 4);
    CHECK(before.pass);
    CHECK(after.pass);
    CHECK(before.z == after.z);
    CHECK(before.K == after.K);
    CHECK(before.trace_z == after.trace_z);
    CHECK(before.direct == after.direct);
    CHECK(before.blockdiag == after.blockdiag);
  }
}
