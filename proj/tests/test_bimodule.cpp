#include <doctest.h>

#include "bimod/bimodule.hpp"
#include "bimod/modular.hpp"
#include "pairs.hpp"

using namespace bimod;
using bimod::testing::Pair;

namespace {

struct Setup {
  std::shared_ptr<const MtcData> C;
  Engine E;
  Algebra A;
  explicit Setup(const Pair& p)
      : C(catalog(p.category).data), E(C), A(build_algebra(E, bimod::testing::load_spec(p, *C))) {}
};

}  // namespace

TEST_CASE("induced bimodules satisfy the module axioms") {
  for (const Pair& p : bimod::testing::all_pairs()) {
    CAPTURE(p.label());
    Setup s(p);
    CHECK(module_residuals(s.E, s.A, algebra_bimodule(s.E, s.A)).max() < 1e-9);
    for (int i = 0; i < s.C->rank(); ++i) {
      CHECK(module_residuals(s.E, s.A, alpha_induce(s.E, s.A, i, +1)).max() < 1e-9);
      CHECK(module_residuals(s.E, s.A, alpha_induce(s.E, s.A, i, -1)).max() < 1e-9);
      CHECK(module_residuals(s.E, s.A, induced_left_module(s.E, s.A, i)).max() < 1e-9);
    }
  }
}

TEST_CASE("z commutes with s and the twists, and is the identity for A = 1") {
  for (const Pair& p : bimod::testing::all_pairs()) {
    CAPTURE(p.label());
    Setup s(p);
    ZMatrix Z = z_matrix(s.E, s.A);
    CHECK((Z.raw - Z.z.cast<double>()).cwiseAbs().maxCoeff() < 1e-9);
    Eigen::MatrixXcd z = Z.z.cast<cplx>();
    Eigen::MatrixXcd S = s_matrix(s.E);
    Eigen::MatrixXcd T = twists(*s.C).asDiagonal();
    CHECK((S * z - z * S).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((T * z - z * T).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(Z.z(0, 0) == 1);
    if (p.algebra == "trivial") CHECK(Z.z == Eigen::MatrixXi::Identity(s.C->rank(), s.C->rank()));
  }
}

TEST_CASE("toric code z-matrix matches the golden file") {
  Setup s({"toric_code", "ze.alg.json"});
  json golden = read_json_file(std::string(BIMOD_FIXTURE_DIR) + "/toric_ze.z.json");
  CHECK(golden["labels"].get<std::vector<std::string>>() == s.C->labels);
  ZMatrix Z = z_matrix(s.E, s.A);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(Z.z(i, j) == golden["z"][i][j].get<int>());
}

TEST_CASE("simple bimodules are simple, distinct and led by A") {
  for (const Pair& p : bimod::testing::all_pairs()) {
    CAPTURE(p.label());
    Setup s(p);
    SimpleBimodules S = simple_bimodules(s.E, s.A, 3);
    const int K = static_cast<int>(S.simples.size());
    CHECK(is_isomorphic(s.E, s.A, S.simples[0], algebra_bimodule(s.E, s.A)));
    for (int a = 0; a < K; ++a) {
      CHECK(module_residuals(s.E, s.A, S.simples[a]).max() < 1e-9);
      for (int b = 0; b < K; ++b)
        CHECK(hom_dimension(s.E, s.A, S.simples[a], S.simples[b]) == (a == b ? 1 : 0));
    }
    ZMatrix Z = z_matrix(s.E, s.A);
    CHECK(K == (Z.z.transpose() * Z.z).trace());
    CHECK(count_simple_left_modules(s.E, s.A, 3) == Z.z.trace());
  }
}

TEST_CASE("tensor product over A: unit law and retract") {
  for (const Pair& p : bimod::testing::nontrivial_pairs()) {
    CAPTURE(p.label());
    Setup s(p);
    SimpleBimodules S = simple_bimodules(s.E, s.A, 3);
    Bimodule AA = algebra_bimodule(s.E, s.A);
    for (const Bimodule& X : S.simples) {
      RetractPair left = tensor_over_A(s.E, s.A, AA, X);
      RetractPair right = tensor_over_A(s.E, s.A, X, AA);
      CHECK(distance(s.E.compose(left.restrict, left.embed), s.E.identity(left.target.obj)) < 1e-9);
      Morphism P = s.E.compose(left.embed, left.restrict);
      CHECK(distance(s.E.compose(P, P), P) < 1e-9);
      CHECK(is_isomorphic(s.E, s.A, left.target, X));
      CHECK(is_isomorphic(s.E, s.A, right.target, X));
    }
  }
}

TEST_CASE("isomorphism invariance under transport") {
  Setup s({"su2_4", "su2_4_d.alg.json"});
  SimpleBimodules S = simple_bimodules(s.E, s.A, 3);
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g;
  for (const Bimodule& X : S.simples) {
    // A random invertible endomorphism of the underlying object.
    Morphism f = s.E.identity(X.obj);
    for (auto& b : f.blocks)
      for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) b(i, j) += 0.3 * cplx(g(rng), g(rng));
    Morphism f_inv = f;
    for (auto& b : f_inv.blocks)
      if (b.size()) b = b.inverse().eval();
    Bimodule Y = transport(s.E, s.A, X, f, f_inv);
    CHECK(module_residuals(s.E, s.A, Y).max() < 1e-9);
    CHECK(is_isomorphic(s.E, s.A, X, Y));
    for (const Bimodule& W : S.simples) CHECK(hom_dimension(s.E, s.A, W, Y) == hom_dimension(s.E, s.A, W, X));
  }
}
