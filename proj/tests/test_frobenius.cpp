#include <doctest.h>

#include <fstream>
#include <sstream>

#include "bimod/bimodule.hpp"
#include "bimod/errors.hpp"
#include "bimod/frobenius.hpp"
#include "bimod/io.hpp"
#include "pairs.hpp"

using namespace bimod;
using bimod::testing::Pair;

namespace {

std::string fixture(const std::string& name) { return std::string(BIMOD_FIXTURE_DIR) + "/" + name; }

Algebra load(const Engine& E, const std::string& file) {
  return build_algebra(E, parse_algebra(read_json_file(fixture(file)), E.category()));
}

}  // namespace

TEST_CASE("catalog algebras are simple symmetric special Frobenius and nondegenerate") {
  for (const Pair& p : bimod::testing::all_pairs()) {
    CAPTURE(p.label());
    auto C = catalog(p.category).data;
    Engine E(C);
    Algebra A = build_algebra(E, bimod::testing::load_spec(p, *C));
    AlgebraReport rep = validate_algebra(E, A);
    for (const auto& [k, v] : rep.residuals) {
      CAPTURE(k);
      CHECK(v < 1e-9);
    }
    CHECK(rep.passed);
    CHECK(rep.end_dim == 1);
    NondegReport nd = nondegeneracy(E, A);
    CHECK(nd.passed);
    CHECK(nd.rank == A.obj.size());
    CHECK(distance(epsilon_natural(E, A), A.eps) < 1e-9);
    Algebra again = normalize_counit(E, A);
    CHECK(distance(again.delta, A.delta) < 1e-12);
    CHECK(distance(again.eps, A.eps) < 1e-12);
  }
}

TEST_CASE("supplied coalgebra data agrees with the derived one") {
  Engine E(catalog("toric_code").data);
  Algebra derived = load(E, "ze.alg.json");
  Algebra given = load(E, "ze_frobenius.alg.json");
  CHECK(distance(derived.delta, given.delta) < 1e-12);
  CHECK(distance(derived.eps, given.eps) < 1e-12);
}

TEST_CASE("single-entry violations are detected") {
  Engine E(catalog("toric_code").data);
  AlgebraReport assoc = validate_algebra(E, load(E, "ze_assoc_broken.alg.json"));
  CHECK_FALSE(assoc.passed);
  CHECK(assoc.residuals.at("associativity") > 1e-3);
  AlgebraReport frob = validate_algebra(E, load(E, "ze_frobenius_broken.alg.json"));
  CHECK_FALSE(frob.passed);
  CHECK(frob.residuals.at("frobenius") > 1e-3);
  // e.e = 0 fails the Frobenius axioms and nondegeneracy together.
  Algebra nil = load(E, "ze_nilpotent.alg.json");
  CHECK_FALSE(validate_algebra(E, nil).passed);
  CHECK_FALSE(nondegeneracy(E, nil).passed);
}

TEST_CASE("an algebra of vanishing dimension is not special") {
  auto C = std::make_shared<const MtcData>(load_mtc(read_json_file(fixture("svec.json"))));
  Engine E(C);
  CHECK(std::abs(E.dimension(1) + 1.0) < 1e-12);
  Algebra A = load(E, "svec_1f.alg.json");
  CHECK_THROWS_AS(normalize_counit(E, A), NotSpecial);
  CHECK_FALSE(validate_algebra(E, A).passed);
}

TEST_CASE("malformed algebra data") {
  Engine E(catalog("toric_code").data);
  AlgebraSpec no_unit;
  no_unit.mult = {{1, 1}};
  CHECK_THROWS_AS(build_algebra(E, no_unit), ShapeError);
  AlgebraSpec bad = bimod::testing::simple_current_algebra(1);
  bad.m.push_back({1, 0, 2, 0, 3, 0, 0, 1.0});  // refers to summands not in A
  CHECK_THROWS_AS(build_algebra(E, bad), ShapeError);
  json doc = read_json_file(fixture("ze.alg.json"));
  doc["m"][0]["i"] = "q";
  CHECK_THROWS_AS(parse_algebra(doc, E.category()), ParseError);
  doc = read_json_file(fixture("ze.alg.json"));
  doc["delta"] = doc["m"];
  CHECK_THROWS_AS(parse_algebra(doc, E.category()), ParseError);
}

TEST_CASE("algebra documents round trip") {
  for (const Pair& p : bimod::testing::nontrivial_pairs()) {
    auto C = catalog(p.category).data;
    AlgebraSpec spec = bimod::testing::load_spec(p, *C);
    json doc = algebra_to_json(spec, *C);
    CHECK(algebra_to_json(parse_algebra(doc, *C), *C) == doc);
  }
}

TEST_CASE("algebra axioms survive a gauge transformation and a change of basis") {
  for (const Pair& p : bimod::testing::nontrivial_pairs()) {
    CAPTURE(p.label());
    auto C = catalog(p.category).data;
    std::mt19937_64 rng(11);
    std::vector<cplx> phases;
    auto G = std::make_shared<const MtcData>(gauge_transform(*C, rng, &phases));
    Engine E(G);
    AlgebraSpec spec = gauge_transform(bimod::testing::load_spec(p, *C), C->rank(), phases);
    Algebra A = build_algebra(E, spec);
    CHECK(validate_algebra(E, A).passed);

    // Rescale the nonunit summand.
    Morphism g = E.identity(A.word()), g_inv = g;
    const int k = A.obj.summands[1];
    g.blocks[k] *= 2.0;
    g_inv.blocks[k] *= 0.5;
    Algebra B = conjugate(E, A, g, g_inv);
    CHECK(validate_algebra(E, B).passed);
    CHECK(nondegeneracy(E, B).passed);
  }
}

TEST_CASE("su2_4 algebra fixture is the independently solved one") {
  std::ifstream in(std::string(BIMOD_ORACLE_DIR) + "/su2_4_oracle.out");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const std::size_t start = text.find("\n{\n");
  REQUIRE(start != std::string::npos);
  json oracle = json::parse(text.substr(start));
  CHECK(oracle == read_json_file(fixture("su2_4_d.alg.json")));
}
