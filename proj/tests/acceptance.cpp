// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "bimod/cli.hpp"
#include "bimod/fusion.hpp"
#include "bimod/modular.hpp"
#include "pairs.hpp"

using namespace bimod;
using bimod::testing::Pair;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Case {
  Pair pair;
  std::shared_ptr<const MtcData> C;
  std::unique_ptr<Engine> E;
  Algebra A;
  VerifyReport rep;
  double seconds = 0.0;
};

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", n, ok ? "PASS" : "FAIL", detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

int cli(std::vector<std::string> args, std::string* out = nullptr) {
  std::ostringstream o, e;
  int status = run(args, o, e);
  if (out) *out = o.str();
  return status;
}

std::string fixture(const std::string& name) { return std::string(BIMOD_FIXTURE_DIR) + "/" + name; }

}  // namespace

int main() {
  const std::uint64_t seed = 17;
  std::vector<Case> cases;
  for (const Pair& p : bimod::testing::all_pairs()) {
    Case c;
    c.pair = p;
    auto t0 = Clock::now();
    try {
      c.C = catalog(p.category).data;
      c.E = std::make_unique<Engine>(c.C);
      c.A = build_algebra(*c.E, bimod::testing::load_spec(p, *c.C));
      c.rep = verify_bimodule_category(*c.E, c.A, seed);
    } catch (const std::exception& e) {
      c.rep.failures.push_back(e.what());
    }
    c.seconds = seconds_since(t0);
    cases.push_back(std::move(c));
  }
  auto is_trivial = [](const Case& c) { return c.pair.algebra == "trivial"; };

  // 1. Verlinde reduction.
  {
    bool ok = true;
    double worst_time = 0.0;
    std::string bad;
    for (const Case& c : cases) {
      if (!is_trivial(c)) continue;
      auto t0 = Clock::now();
      bool same = false;
      try {
        Algebra A = make_trivial_algebra(*c.E);
        SimpleBimodules S = simple_bimodules(*c.E, A, seed);
        // 100 * 1e-8: accepted within 1e-6 of an integer.
        FusionTable T = fusion_table_blockdiag(d_matrix(*c.E, A, S.simples), 1e-8);
        same = T.size == c.C->rank();
        for (int a = 0; same && a < T.size; ++a)
          for (int b = 0; b < T.size; ++b)
            for (int k = 0; k < T.size; ++k) same = same && T.at(a, b, k) == c.C->N(a, b, k);
      } catch (const std::exception&) {
        same = false;
      }
      double t = seconds_since(t0) + c.seconds;
      worst_time = std::max(worst_time, t);
      if (!same || t >= 5.0) {
        ok = false;
        bad += " " + c.pair.category;
      }
    }
    report(1, ok, "A = 1 tables equal N_ij^k for all catalog categories; slowest " + fmt(worst_time) + " s" + bad);
  }

  // 2. Bookkeeping for the two required nontrivial pairs.
  {
    bool ok = true;
    std::string detail;
    for (const Case& c : cases) {
      const bool wanted = (c.pair.category == "toric_code" && c.pair.algebra == "ze.alg.json") ||
                          (c.pair.category == "su2_4" && c.pair.algebra == "su2_4_d.alg.json");
      if (!wanted) continue;
      const bool good = c.rep.K == c.rep.trace_zz && c.rep.left_modules == c.rep.trace_z && c.seconds < 60.0 &&
                        c.rep.K > 0;
      ok = ok && good;
      detail += c.pair.label() + ": |K|=" + std::to_string(c.rep.K) + " tr(z^t z)=" + std::to_string(c.rep.trace_zz) +
                " left=" + std::to_string(c.rep.left_modules) + " tr z=" + std::to_string(c.rep.trace_z) + " (" +
                fmt(c.seconds) + " s); ";
    }
    report(2, ok, detail);
  }

  // 3. Two-path fusion agreement.
  {
    bool ok = true;
    std::string bad;
    for (const Case& c : cases) {
      bool good = c.rep.direct.size > 0 && c.rep.direct == c.rep.blockdiag;
      for (int v : c.rep.direct.N) good = good && v >= 0;
      if (!good) {
        ok = false;
        bad += " " + c.pair.label();
      }
    }
    report(3, ok, "direct and block-diagonal tables agree on " + std::to_string(cases.size()) + " pairs" + bad);
  }

  // 4. Homomorphism and unit.
  {
    double hom = 0.0, unit = 0.0;
    bool ran = true;
    for (const Case& c : cases) {
      if (!c.rep.residuals.count("homomorphism")) ran = false;
      else {
        hom = std::max(hom, c.rep.residuals.at("homomorphism"));
        unit = std::max(unit, c.rep.residuals.at("D_A_identity"));
      }
    }
    report(4, ran && hom < 1e-6 && unit < 1e-9, "max |D_X D_Y - D_XY| = " + fmt(hom) + ", max |D_A - id| = " + fmt(unit));
  }

  // 5. Invertibility of d.
  {
    double smin = 1e300;
    for (const Case& c : cases) smin = std::min(smin, c.rep.smallest_singular_value);
    report(5, smin > 1e-6, "smallest singular value of d over all pairs = " + fmt(smin));
  }

  // 6. z-matrix properties.
  {
    double cs = 0.0, ct = 0.0;
    bool identity = true;
    for (const Case& c : cases) {
      if (c.rep.z.size() == 0) {
        identity = false;
        continue;
      }
      Eigen::MatrixXcd z = c.rep.z.cast<cplx>();
      Eigen::MatrixXcd s = s_matrix(*c.E);
      Eigen::MatrixXcd t = twists(*c.C).asDiagonal();
      cs = std::max(cs, (s * z - z * s).cwiseAbs().maxCoeff());
      ct = std::max(ct, (t * z - z * t).cwiseAbs().maxCoeff());
      if (is_trivial(c)) identity = identity && c.rep.z == Eigen::MatrixXi::Identity(c.C->rank(), c.C->rank());
    }
    report(6, cs < 1e-6 && ct < 1e-6 && identity,
           "max |[s,z]| = " + fmt(cs) + ", max |[T,z]| = " + fmt(ct) + (identity ? ", z = 1 for A = 1" : ", z != 1 for A = 1"));
  }

  // 7. Axiom gate.
  {
    std::string out;
    struct Probe {
      const char* what;
      std::vector<std::string> args;
      const char* section;
      const char* key;
    };
    std::vector<Probe> probes = {
        {"pentagon", {"validate", fixture("broken.json"), "--format", "json"}, "axioms", "pentagon"},
        {"associativity",
         {"algebra-check", "--cat", "catalog:toric_code", "--alg", fixture("ze_assoc_broken.alg.json"), "--format",
          "json"},
         "residuals",
         "associativity"},
        {"frobenius",
         {"algebra-check", "--cat", "catalog:toric_code", "--alg", fixture("ze_frobenius_broken.alg.json"), "--format",
          "json"},
         "residuals",
         "frobenius"},
    };
    bool ok = true;
    std::string detail;
    for (const Probe& p : probes) {
      int status = cli(p.args, &out);
      double residual = 0.0;
      try {
        residual = json::parse(out).at(p.section).at(p.key).get<double>();
      } catch (const std::exception&) {
      }
      ok = ok && status != 0 && residual > 1e-3;
      detail += std::string(p.what) + " residual " + fmt(residual) + " exit " + std::to_string(status) + "; ";
    }
    report(7, ok, detail);
  }

  // 8. Defect identity.
  {
    double worst = 0.0;
    int triples = 0;
    bool ok = true;
    for (const Case& c : cases) {
      if (c.rep.direct.size == 0) {
        ok = false;
        continue;
      }
      SimpleBimodules S = simple_bimodules(*c.E, c.A, seed);
      Eigen::MatrixXcd s = s_matrix(*c.E);
      const int K = c.rep.direct.size, r = c.C->rank();
      std::vector<std::array<int, 3>> list;
      if (is_trivial(c)) {
        for (int a = 0; a < K; ++a)
          for (int b = 0; b < K; ++b)
            for (int j = 0; j < r; ++j) list.push_back({a, b, j});
      } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pk(0, K - 1), pj(0, r - 1);
        for (int t = 0; t < 24; ++t) list.push_back({pk(rng), pk(rng), pj(rng)});
      }
      for (auto [a, b, j] : list) {
        worst = std::max(worst, defect_identity(*c.E, c.A, S, c.rep.direct, s, a, b, j).residual);
        ++triples;
      }
    }
    report(8, ok && worst < 1e-6, std::to_string(triples) + " triples, max residual " + fmt(worst));
  }

  // 9. Determinism.
  {
    bool ok = true;
    int compared = 0;
    for (const Pair& p : bimod::testing::nontrivial_pairs()) {
      std::string alg = fixture(p.algebra);
      for (const char* cmd : {"verify-o", "defect-check", "blockdiag"}) {
        std::vector<std::string> args{cmd, "--cat", "catalog:" + p.category, "--alg", alg, "--seed", "42",
                                      "--format", "json"};
        std::string a, b;
        int sa = cli(args, &a), sb = cli(args, &b);
        ok = ok && sa == 0 && sb == 0 && a == b && !a.empty();
        ++compared;
      }
    }
    report(9, ok, std::to_string(compared) + " repeated JSON reports compared byte for byte");
  }

  for (const Case& c : cases)
    for (const auto& f : c.rep.failures) std::printf("  %s: %s\n", c.pair.label().c_str(), f.c_str());
  std::printf("%s\n", failures ? "acceptance: FAIL" : "acceptance: PASS");
  return failures ? 1 : 0;
}
