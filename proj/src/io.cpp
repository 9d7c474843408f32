#include "bimod/io.hpp"

#include <algorithm>
#include <fstream>

#include "bimod/catalog.hpp"
#include "bimod/errors.hpp"

namespace bimod {

namespace {

std::string label_string(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError("label must be a string, got " + v.dump());
}

cplx complex_value(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw ParseError("complex value must be [re, im], got " + v.dump());
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return obj.at(key);
}

int int_field(const json& obj, const char* key, int fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

int label_field(const MtcData& C, const json& obj, const char* key) {
  return C.label(label_string(field(obj, key)));
}

// Entries of F blocks with a unit among a, b, c default to the identity of
// the unit gauge; check_axioms still verifies any that are supplied.
void fill_unit_gauge(MtcData& C) {
  const int r = C.rank();
  auto put = [&](std::array<int, 10> key, bool diag) { C.F_raw.try_emplace(key, cplx(diag ? 1.0 : 0.0, 0.0)); };
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y)
      for (int d = 0; d < r; ++d)
        for (int m = 0; m < C.N(x, y, d); ++m)
          for (int n = 0; n < C.N(x, y, d); ++n) {
            put({0, x, y, d, x, d, 0, m, n, 0}, m == n);
            put({x, 0, y, d, x, y, 0, m, 0, n}, m == n);
            put({x, y, 0, d, d, y, m, 0, 0, n}, m == n);
          }
  for (int a = 0; a < r; ++a) {
    C.R_raw.try_emplace({0, a, a, 0, 0}, cplx(1.0, 0.0));
    C.R_raw.try_emplace({a, 0, a, 0, 0}, cplx(1.0, 0.0));
  }
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

MtcData parse_mtc(const json& doc, double tol) {
  if (!doc.is_object()) throw ParseError("category document must be an object");
  std::vector<std::string> names;
  for (const auto& v : field(doc, "labels")) names.push_back(label_string(v));
  if (names.empty()) throw ParseError("category has no labels");
  std::string unit = doc.contains("unit") ? label_string(doc.at("unit")) : names.front();
  auto it = std::find(names.begin(), names.end(), unit);
  if (it == names.end()) throw ParseError("unit '" + unit + "' is not a label");
  std::rotate(names.begin(), it, it + 1);
  {
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw ParseError("duplicate label");
  }

  MtcData C;
  C.resize(static_cast<int>(names.size()));
  C.labels = names;
  C.tol = tol;
  const int r = C.rank();

  for (const auto& e : field(doc, "fusion")) {
    int mult = int_field(e, "mult", 1);
    if (mult < 0) throw ParseError("negative fusion multiplicity");
    C.set_fusion(label_field(C, e, "a"), label_field(C, e, "b"), label_field(C, e, "c"), mult);
  }

  if (doc.contains("dual")) {
    const json& d = doc.at("dual");
    if (!d.is_object()) throw ParseError("'dual' must be an object");
    for (int a = 0; a < r; ++a) {
      if (!d.contains(C.name(a))) throw ParseError("no dual given for '" + C.name(a) + "'");
      C.dual[a] = C.label(label_string(d.at(C.name(a))));
    }
  } else {
    for (int a = 0; a < r; ++a) {
      int found = -1;
      for (int b = 0; b < r; ++b)
        if (C.N(a, b, 0) > 0) found = b;
      if (found < 0) throw ParseError("label '" + C.name(a) + "' has no dual");
      C.dual[a] = found;
    }
  }

  const json& twist = field(doc, "twist");
  if (!twist.is_object()) throw ParseError("'twist' must be an object");
  for (int a = 0; a < r; ++a) {
    if (!twist.contains(C.name(a))) throw ParseError("no twist given for '" + C.name(a) + "'");
    C.twist[a] = complex_value(twist.at(C.name(a)));
  }

  if (doc.contains("F"))
    for (const auto& e : doc.at("F")) {
      std::array<int, 10> key{label_field(C, e, "a"), label_field(C, e, "b"), label_field(C, e, "c"),
                              label_field(C, e, "d"), label_field(C, e, "e"), label_field(C, e, "f"),
                              int_field(e, "mu", 0),  int_field(e, "nu", 0),  int_field(e, "rho", 0),
                              int_field(e, "sigma", 0)};
      C.F_raw[key] = complex_value(field(e, "val"));
    }
  if (doc.contains("R"))
    for (const auto& e : doc.at("R")) {
      std::array<int, 5> key{label_field(C, e, "a"), label_field(C, e, "b"), label_field(C, e, "c"),
                             int_field(e, "mu", 0), int_field(e, "nu", 0)};
      C.R_raw[key] = complex_value(field(e, "val"));
    }
  fill_unit_gauge(C);
  C.finalize();
  return C;
}

MtcData load_mtc(const json& doc, double tol) {
  MtcData C = parse_mtc(doc, tol);
  const AxiomReport rep = check_axioms(C);
  const IdentityResidual* worst = nullptr;
  for (const auto& res : rep.residuals)
    if (res.max_residual > tol && (!worst || res.max_residual > worst->max_residual)) worst = &res;
  if (worst) throw AxiomViolation(worst->identity, worst->max_residual);
  return C;
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json mtc_to_json(const MtcData& C) {
  const int r = C.rank();
  json doc;
  doc["labels"] = C.labels;
  doc["unit"] = C.name(0);
  json dual = json::object(), twist = json::object();
  for (int a = 0; a < r; ++a) {
    dual[C.name(a)] = C.name(C.dual[a]);
    twist[C.name(a)] = to_json(C.twist[a]);
  }
  doc["dual"] = dual;
  doc["twist"] = twist;
  json fusion = json::array();
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        if (C.N(a, b, c)) fusion.push_back({{"a", C.name(a)}, {"b", C.name(b)}, {"c", C.name(c)}, {"mult", C.N(a, b, c)}});
  doc["fusion"] = fusion;
  json F = json::array();
  for (const auto& [k, v] : C.F_raw)
    F.push_back({{"a", C.name(k[0])}, {"b", C.name(k[1])}, {"c", C.name(k[2])}, {"d", C.name(k[3])},
                 {"e", C.name(k[4])}, {"f", C.name(k[5])}, {"mu", k[6]}, {"nu", k[7]}, {"rho", k[8]},
                 {"sigma", k[9]}, {"val", to_json(v)}});
  doc["F"] = F;
  json R = json::array();
  for (const auto& [k, v] : C.R_raw)
    R.push_back({{"a", C.name(k[0])}, {"b", C.name(k[1])}, {"c", C.name(k[2])}, {"mu", k[3]}, {"nu", k[4]},
                 {"val", to_json(v)}});
  doc["R"] = R;
  return doc;
}

std::shared_ptr<const MtcData> resolve_category(const std::string& ref, double tol) {
  const std::string prefix = "catalog:";
  if (ref.rfind(prefix, 0) == 0) return catalog(ref.substr(prefix.size()), tol).data;
  return std::make_shared<const MtcData>(load_mtc(read_json_file(ref), tol));
}

namespace {

VertexComponent vertex(const json& e, const MtcData& C) {
  VertexComponent v;
  v.i = label_field(C, e, "i");
  v.a = int_field(e, "a", 0);
  v.j = label_field(C, e, "j");
  v.b = int_field(e, "b", 0);
  v.k = label_field(C, e, "k");
  v.c = int_field(e, "c", 0);
  v.mu = int_field(e, "mu", 0);
  v.val = complex_value(field(e, "val"));
  return v;
}

UnitComponent unit_component(const json& e, const MtcData& C) {
  if (e.contains("k") && label_field(C, e, "k") != 0) throw ParseError("unit component on a non-unit label");
  return {int_field(e, "c", 0), complex_value(field(e, "val"))};
}

json vertex_json(const VertexComponent& v, const MtcData& C) {
  return {{"i", C.name(v.i)}, {"a", v.a}, {"j", C.name(v.j)}, {"b", v.b},
          {"k", C.name(v.k)}, {"c", v.c}, {"mu", v.mu}, {"val", to_json(v.val)}};
}

json unit_json(const UnitComponent& u, const MtcData& C) {
  return {{"k", C.name(0)}, {"c", u.c}, {"val", to_json(u.val)}};
}

}  // namespace

AlgebraSpec parse_algebra(const json& doc, const MtcData& C) {
  if (!doc.is_object()) throw ParseError("algebra document must be an object");
  AlgebraSpec spec;
  const json& mult = field(doc, "mult");
  if (!mult.is_object()) throw ParseError("'mult' must be an object");
  for (const auto& [name, n] : mult.items()) {
    if (!n.is_number_integer() || n.get<int>() < 0) throw ParseError("bad multiplicity for '" + name + "'");
    if (n.get<int>() > 0) spec.mult[C.label(name)] = n.get<int>();
  }
  for (const auto& e : field(doc, "m")) spec.m.push_back(vertex(e, C));
  for (const auto& e : field(doc, "eta")) spec.eta.push_back(unit_component(e, C));
  if (doc.contains("delta") != doc.contains("eps")) throw ParseError("'delta' and 'eps' must be given together");
  if (doc.contains("delta")) {
    spec.delta.emplace();
    for (const auto& e : doc.at("delta")) spec.delta->push_back(vertex(e, C));
    spec.eps.emplace();
    for (const auto& e : doc.at("eps")) spec.eps->push_back(unit_component(e, C));
  }
  return spec;
}

json algebra_to_json(const AlgebraSpec& spec, const MtcData& C) {
  json doc;
  json mult = json::object();
  for (auto [label, n] : spec.mult) mult[C.name(label)] = n;
  doc["mult"] = mult;
  doc["m"] = json::array();
  for (const auto& v : spec.m) doc["m"].push_back(vertex_json(v, C));
  doc["eta"] = json::array();
  for (const auto& u : spec.eta) doc["eta"].push_back(unit_json(u, C));
  if (spec.delta && spec.eps) {
    doc["delta"] = json::array();
    for (const auto& v : *spec.delta) doc["delta"].push_back(vertex_json(v, C));
    doc["eps"] = json::array();
    for (const auto& u : *spec.eps) doc["eps"].push_back(unit_json(u, C));
  }
  return doc;
}

AlgebraSpec resolve_algebra(const std::string& ref, const MtcData& C) {
  if (ref == "trivial") return trivial_algebra_spec();
  return parse_algebra(read_json_file(ref), C);
}

}  // namespace bimod
