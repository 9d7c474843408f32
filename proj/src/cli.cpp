#include "bimod/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>

#include "bimod/bimodule.hpp"
#include "bimod/catalog.hpp"
#include "bimod/errors.hpp"
#include "bimod/fusion.hpp"
#include "bimod/io.hpp"
#include "bimod/modular.hpp"

namespace bimod {

namespace {

struct Config {
  double tol = kDefaultTol;
  std::uint64_t seed = 0;
  std::string format = "table";
  std::string cat;
  std::string alg = "trivial";
  std::string out;
  std::string path;
  int samples = 20;
};

struct Result {
  json report;
  bool pass = true;
  bool document = false;  // a data document, always written as JSON
};

// ---- table rendering ----------------------------------------------------

bool is_complex(const json& v) {
  return v.is_array() && v.size() == 2 && v[0].is_number_float() && v[1].is_number_float();
}

bool is_scalar(const json& v) { return !v.is_structured() || is_complex(v); }

std::string scalar_text(const json& v) {
  char buf[64];
  if (is_complex(v)) {
    double re = v[0].get<double>(), im = v[1].get<double>();
    if (std::abs(im) < 1e-12) im = 0.0;
    if (im == 0.0) {
      std::snprintf(buf, sizeof buf, "%.6g", re);
    } else {
      std::snprintf(buf, sizeof buf, "%.6g%+.6gi", re, im);
    }
    return buf;
  }
  if (v.is_number_float()) {
    std::snprintf(buf, sizeof buf, "%.6g", v.get<double>());
    return buf;
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_row(const json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return is_scalar(x); });
}

void render(const std::string& key, const json& v, int indent, std::ostream& os) {
  const std::string pad(indent, ' ');
  if (is_scalar(v)) {
    os << pad << key << ": " << scalar_text(v) << '\n';
  } else if (v.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, x] : v.items()) render(k, x, indent + 2, os);
  } else if (is_row(v)) {
    os << pad << key << ":";
    for (const auto& x : v) os << ' ' << scalar_text(x);
    os << '\n';
  } else if (std::all_of(v.begin(), v.end(), [](const json& x) { return is_row(x); })) {
    std::size_t width = 1;
    for (const auto& row : v)
      for (const auto& x : row) width = std::max(width, scalar_text(x).size());
    os << pad << key << ":\n";
    for (const auto& row : v) {
      os << pad << "  ";
      for (const auto& x : row) {
        std::string s = scalar_text(x);
        os << std::string(width - s.size() + 1, ' ') << s;
      }
      os << '\n';
    }
  } else {
    os << pad << key << ":\n";
    int i = 0;
    for (const auto& x : v) render("[" + std::to_string(i++) + "]", x, indent + 2, os);
  }
}

void emit(const Config& cfg, const Result& res, std::ostream& out) {
  const json& report = res.report;
  std::ofstream file;
  std::ostream* os = &out;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) throw UsageError("cannot write '" + cfg.out + "'");
    os = &file;
  }
  if (cfg.format == "json" || res.document) {
    *os << report.dump(2) << '\n';
  } else {
    for (const auto& [k, v] : report.items()) render(k, v, 0, *os);
  }
}

// ---- conversions --------------------------------------------------------

json complex_matrix(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json int_matrix(const Eigen::MatrixXi& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json fusion_json(const FusionTable& T) {
  json out = json::array();
  for (int a = 0; a < T.size; ++a) {
    json rows = json::array();
    for (int b = 0; b < T.size; ++b) {
      json row = json::array();
      for (int c = 0; c < T.size; ++c) row.push_back(T.at(a, b, c));
      rows.push_back(row);
    }
    out.push_back(rows);
  }
  return out;
}

json residual_map(const std::map<std::string, double>& r) {
  json out = json::object();
  for (const auto& [k, v] : r) out[k] = v;
  return out;
}

// ---- shared setup -------------------------------------------------------

struct Loaded {
  std::shared_ptr<const MtcData> C;
  std::unique_ptr<Engine> E;
  AlgebraSpec spec;
  Algebra A;
};

Loaded load_category(const Config& cfg) {
  if (cfg.cat.empty()) throw UsageError("--cat is required");
  Loaded L;
  L.C = resolve_category(cfg.cat, cfg.tol);
  L.E = std::make_unique<Engine>(L.C);
  return L;
}

Loaded load_pair(const Config& cfg) {
  Loaded L = load_category(cfg);
  L.spec = resolve_algebra(cfg.alg, *L.C);
  L.A = build_algebra(*L.E, L.spec);
  return L;
}

json algebra_summary(const Loaded& L) {
  json mult = json::object();
  for (auto [label, n] : L.spec.mult) mult[L.C->name(label)] = n;
  return mult;
}

// Commands that need a valid algebra stop here with the residuals if it is not.
bool gate_algebra(const Loaded& L, Result& res) {
  AlgebraReport rep = validate_algebra(*L.E, L.A);
  if (rep.passed) return true;
  res.report["algebra_residuals"] = residual_map(rep.residuals);
  res.report["error"] = "algebra is not a simple symmetric special Frobenius algebra";
  res.report["pass"] = false;
  res.pass = false;
  return false;
}

// ---- subcommands --------------------------------------------------------

Result cmd_validate(const Config& cfg) {
  Result res;
  std::string ref = cfg.path.empty() ? cfg.cat : cfg.path;
  if (ref.empty()) throw UsageError("validate needs a category path or --cat");
  MtcData C;
  if (ref.rfind("catalog:", 0) == 0) {
    C = *catalog(ref.substr(8), cfg.tol).data;
  } else {
    C = parse_mtc(read_json_file(ref), cfg.tol);
  }
  AxiomReport ax = check_axioms(C);
  json axioms = json::object();
  for (const auto& r : ax.residuals) axioms[r.identity] = r.max_residual;
  res.report["category"] = ref;
  res.report["rank"] = C.rank();
  res.report["labels"] = C.labels;
  res.report["axioms"] = axioms;
  res.pass = ax.passed(1e3 * cfg.tol);
  if (res.pass) {
    Engine E(std::make_shared<const MtcData>(C));
    ModularReport mod = verify_modular(E);
    json dims = json::array();
    for (int a = 0; a < C.rank(); ++a) dims.push_back(to_json(E.dimension(a)));
    res.report["dims"] = dims;
    res.report["modular"] = mod.modular;
    res.report["s_smallest_singular_value"] = mod.smallest_singular_value;
    res.pass = mod.modular;
  }
  res.report["pass"] = res.pass;
  return res;
}

Result cmd_smatrix(const Config& cfg) {
  Result res;
  Loaded L = load_category(cfg);
  const Engine& E = *L.E;
  const MtcData& C = *L.C;
  ModularReport mod = verify_modular(E);
  Eigen::MatrixXcd bal = s_matrix_balancing(E);
  json dims = json::array(), theta = json::array();
  for (int a = 0; a < C.rank(); ++a) {
    dims.push_back(to_json(E.dimension(a)));
    theta.push_back(to_json(C.twist[a]));
  }
  double cross = (mod.s - bal).cwiseAbs().maxCoeff();
  res.report["labels"] = C.labels;
  res.report["dims"] = dims;
  res.report["twists"] = theta;
  res.report["s"] = complex_matrix(mod.s);
  res.report["residuals"] = {{"symmetry", mod.symmetry_residual},
                             {"dims", mod.dim_residual},
                             {"balancing", cross}};
  res.report["smallest_singular_value"] = mod.smallest_singular_value;
  res.report["modular"] = mod.modular;
  const double lim = 1e3 * cfg.tol;
  res.pass = mod.modular && mod.symmetry_residual < lim && mod.dim_residual < lim && cross < lim;
  res.report["pass"] = res.pass;
  return res;
}

Result cmd_algebra_check(const Config& cfg) {
  Result res;
  Loaded L = load_pair(cfg);
  AlgebraReport rep = validate_algebra(*L.E, L.A);
  NondegReport nd = nondegeneracy(*L.E, L.A);
  res.report["mult"] = algebra_summary(L);
  res.report["dim"] = to_json(L.E->dimension(L.A.obj));
  res.report["residuals"] = residual_map(rep.residuals);
  res.report["end_dim"] = rep.end_dim;
  res.report["nondegenerate"] = {{"iso_residual", nd.iso_residual},
                                 {"rank", nd.rank},
                                 {"expected_rank", nd.expected_rank},
                                 {"pass", nd.passed}};
  res.pass = rep.passed && nd.passed;
  res.report["pass"] = res.pass;
  return res;
}

Result cmd_z(const Config& cfg) {
  Result res;
  Loaded L = load_pair(cfg);
  if (!gate_algebra(L, res)) return res;
  const MtcData& C = *L.C;
  ZMatrix Z = z_matrix(*L.E, L.A);
  Eigen::MatrixXcd z = Z.z.cast<cplx>();
  Eigen::MatrixXcd s = s_matrix(*L.E);
  Eigen::MatrixXcd t = twists(C).asDiagonal();
  double cs = (s * z - z * s).cwiseAbs().maxCoeff();
  double ct = (t * z - z * t).cwiseAbs().maxCoeff();
  double rounding = (Z.raw - Z.z.cast<double>()).cwiseAbs().maxCoeff();
  res.report["labels"] = C.labels;
  res.report["z"] = int_matrix(Z.z);
  res.report["residuals"] = {{"commutator_s", cs}, {"commutator_t", ct}, {"rounding", rounding}};
  res.pass = cs < 1e3 * cfg.tol && ct < 1e3 * cfg.tol;
  res.report["pass"] = res.pass;
  return res;
}

json simples_json(const Loaded& L, const SimpleBimodules& S) {
  const MtcData& C = *L.C;
  json list = json::array();
  for (std::size_t k = 0; k < S.simples.size(); ++k) {
    json n = json::object();
    cplx dim = 0.0;
    for (int i = 0; i < C.rank(); ++i) {
      if (S.n[k][i]) n[C.name(i)] = S.n[k][i];
      dim += double(S.n[k][i]) * L.E->dimension(i);
    }
    list.push_back({{"index", k}, {"n", n}, {"object_dim", to_json(dim)}});
  }
  return list;
}

Result cmd_simples(const Config& cfg) {
  Result res;
  Loaded L = load_pair(cfg);
  if (!gate_algebra(L, res)) return res;
  SimpleBimodules S = simple_bimodules(*L.E, L.A, cfg.seed);
  const int r = L.C->rank();
  json gens = json::object();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) gens[L.C->name(i) + "," + L.C->name(j)] = S.multiplicity[i * r + j];
  res.report["K"] = S.simples.size();
  res.report["simples"] = simples_json(L, S);
  res.report["generator_multiplicities"] = gens;
  res.report["pass"] = true;
  return res;
}

Result cmd_fusion(const Config& cfg) {
  Result res;
  Loaded L = load_pair(cfg);
  if (!gate_algebra(L, res)) return res;
  SimpleBimodules S = simple_bimodules(*L.E, L.A, cfg.seed);
  FusionTable T = fusion_table_direct(*L.E, L.A, S.simples);
  std::string defect = fusion_table_defect(T);
  res.report["K"] = T.size;
  res.report["simples"] = simples_json(L, S);
  res.report["N"] = fusion_json(T);
  if (!defect.empty()) res.report["defect"] = defect;
  res.pass = defect.empty();
  res.report["pass"] = res.pass;
  return res;
}

Result cmd_blockdiag(const Config& cfg) {
  Result res;
  Loaded L = load_pair(cfg);
  if (!gate_algebra(L, res)) return res;
  const MtcData& C = *L.C;
  SimpleBimodules S = simple_bimodules(*L.E, L.A, cfg.seed);
  DMatrix D = d_matrix(*L.E, L.A, S.simples);
  FusionTable T = fusion_table_blockdiag(D, cfg.tol);
  std::string defect = fusion_table_defect(T);
  json blocks = json::array(), columns = json::array();
  for (const auto& b : D.blocks) blocks.push_back({{"i", C.name(b.i)}, {"j", C.name(b.j)}, {"dim", b.h.size()}});
  for (const auto& c : D.columns) columns.push_back(json::array({c[0], c[1], c[2]}));
  res.report["K"] = T.size;
  res.report["blocks"] = blocks;
  res.report["columns"] = columns;
  res.report["d"] = complex_matrix(D.d);
  res.report["smallest_singular_value"] = D.smallest_singular_value;
  res.report["N"] = fusion_json(T);
  if (!defect.empty()) res.report["defect"] = defect;
  res.pass = defect.empty() && D.smallest_singular_value > 1e3 * cfg.tol;
  res.report["pass"] = res.pass;
  return res;
}

Result cmd_verify_o(const Config& cfg) {
  Result res;
  Loaded L = load_pair(cfg);
  if (!gate_algebra(L, res)) return res;
  VerifyReport rep = verify_bimodule_category(*L.E, L.A, cfg.seed);
  json P = json::array();
  for (auto [i, j] : rep.P) P.push_back(json::array({i, j}));
  json n = json::object();
  for (const auto& [k, v] : rep.n) n[k] = v;
  res.report["P"] = P;
  res.report["n"] = n;
  res.report["K"] = rep.K;
  res.report["z"] = int_matrix(rep.z);
  res.report["trace_z"] = rep.trace_z;
  res.report["trace_zz"] = rep.trace_zz;
  res.report["left_modules"] = rep.left_modules;
  res.report["fusion_direct"] = fusion_json(rep.direct);
  res.report["fusion_blockdiag"] = fusion_json(rep.blockdiag);
  res.report["residuals"] = residual_map(rep.residuals);
  res.report["smallest_singular_value"] = rep.smallest_singular_value;
  res.report["failures"] = rep.failures;
  res.pass = rep.pass;
  res.report["pass"] = res.pass;
  return res;
}

bool is_trivial(const AlgebraSpec& spec) { return spec.mult.size() == 1 && spec.mult.begin()->second == 1 && spec.mult.begin()->first == 0; }

Result cmd_defect_check(const Config& cfg) {
  Result res;
  Loaded L = load_pair(cfg);
  if (!gate_algebra(L, res)) return res;
  const int r = L.C->rank();
  SimpleBimodules S = simple_bimodules(*L.E, L.A, cfg.seed);
  FusionTable N = fusion_table_direct(*L.E, L.A, S.simples);
  Eigen::MatrixXcd s = s_matrix(*L.E);
  const int K = N.size;
  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < K; ++a)
    for (int b = 0; b < K; ++b)
      for (int j = 0; j < r; ++j) triples.push_back({a, b, j});
  if (!is_trivial(L.spec) && static_cast<int>(triples.size()) > cfg.samples) {
    std::mt19937_64 rng(cfg.seed);
    // Partial Fisher-Yates on raw engine output; unlike the standard
    // distributions this is the same under every standard library.
    for (std::size_t t = 0; t < static_cast<std::size_t>(cfg.samples); ++t)
      std::swap(triples[t], triples[t + rng() % (triples.size() - t)]);
    triples.resize(cfg.samples);
    std::sort(triples.begin(), triples.end());
  }
  json list = json::array();
  double worst = 0.0;
  for (auto [a, b, j] : triples) {
    DefectReport d = defect_identity(*L.E, L.A, S, N, s, a, b, j);
    worst = std::max(worst, d.residual);
    list.push_back({{"kappa", a}, {"kappa2", b}, {"j", L.C->name(j)}, {"lhs", to_json(d.lhs)},
                    {"rhs", to_json(d.rhs)}, {"residual", d.residual}});
  }
  res.report["K"] = K;
  res.report["triples"] = list;
  res.report["max_residual"] = worst;
  res.pass = worst < 1e3 * cfg.tol;
  res.report["pass"] = res.pass;
  return res;
}

Result cmd_catalog(const Config& cfg) {
  Result res;
  std::string name = cfg.path;
  if (name.empty() && cfg.cat.rfind("catalog:", 0) == 0) name = cfg.cat.substr(8);
  if (name.empty()) {
    res.report["names"] = catalog_names();
    return res;
  }
  CatalogEntry e = catalog(name, cfg.tol);
  res.report = mtc_to_json(*e.data);
  res.document = true;
  return res;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Bimodule categories over modular tensor categories", "bimodcat"};
  app.require_subcommand(1);
  using Handler = Result (*)(const Config&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--tol", cfg.tol, "numerical tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--cat", cfg.cat, "catalog:<name> or a category document");
    sub->add_option("--alg", cfg.alg, "trivial or an algebra document");
    sub->add_option("--out", cfg.out, "write the report to a file");
    commands.emplace_back(sub, h);
    return sub;
  };
  add("validate", "check pentagon, hexagon and modularity of a category", cmd_validate)
      ->add_option("path", cfg.path, "category document");
  add("smatrix", "S-matrix, dimensions and twists", cmd_smatrix);
  add("algebra-check", "Frobenius algebra axioms and nondegeneracy", cmd_algebra_check);
  add("z", "z-matrix of the algebra", cmd_z);
  add("simples", "simple A-bimodules", cmd_simples);
  add("fusion", "fusion table of A-bimodules from tensor products over A", cmd_fusion);
  add("blockdiag", "d-matrix and its fusion table", cmd_blockdiag);
  add("verify-o", "full bimodule-category consistency report", cmd_verify_o);
  add("defect-check", "closed defect-loop identity", cmd_defect_check)
      ->add_option("--samples", cfg.samples, "triples sampled for a nontrivial algebra")
      ->check(CLI::PositiveNumber);
  add("catalog", "list built-in categories or dump one", cmd_catalog)->add_option("name", cfg.path, "catalog name");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    CLI::App* shown = &app;
    for (auto& [sub, h] : commands)
      if (sub->parsed()) shown = sub;
    err << shown->help();
    return 2;
  }

  for (auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    try {
      Result res = handler(cfg);
      emit(cfg, res, out);
      return res.pass ? 0 : 1;
    } catch (const UsageError& e) {
      err << "error: " << e.what() << '\n' << sub->help();
      return 2;
    } catch (const ParseError& e) {
      err << "parse error: " << e.what() << '\n';
      return 2;
    } catch (const json::exception& e) {
      err << "parse error: " << e.what() << '\n';
      return 2;
    } catch (const UnknownCatalogName& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (const MissingSymbol& e) {
      err << "parse error: " << e.what() << '\n';
      return 2;
    } catch (const ShapeError& e) {
      err << "parse error: " << e.what() << '\n';
      return 2;
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
  }
  return 2;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace bimod
