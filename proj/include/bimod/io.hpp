#pragma once

#include <json.hpp>

#include <memory>
#include <string>

#include "bimod/frobenius.hpp"
#include "bimod/mtc.hpp"

namespace bimod {

using json = nlohmann::json;

json read_json_file(const std::string& path);

/// Parses a category document and builds F/R blocks without checking axioms.
/// Throws ParseError or MissingSymbol.
MtcData parse_mtc(const json& doc, double tol = kDefaultTol);
/// parse_mtc followed by check_axioms; throws AxiomViolation for the worst identity over tol.
MtcData load_mtc(const json& doc, double tol = kDefaultTol);
json mtc_to_json(const MtcData& C);

/// `catalog:<name>` or a path to a category document.
std::shared_ptr<const MtcData> resolve_category(const std::string& ref, double tol);

AlgebraSpec parse_algebra(const json& doc, const MtcData& C);
json algebra_to_json(const AlgebraSpec& spec, const MtcData& C);
/// `trivial` or a path to an algebra document.
AlgebraSpec resolve_algebra(const std::string& ref, const MtcData& C);

json to_json(cplx z);

}  // namespace bimod
