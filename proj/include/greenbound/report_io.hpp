#pragma once

#include <string>

#include <json.hpp>

#include "greenbound/f_bound.hpp"
#include "greenbound/green_assembly.hpp"
#include "greenbound/point_counting.hpp"

namespace greenbound {

inline constexpr int kJsonSchemaVersion = 1;

/// Three significant figures after directed rounding, as printed in reports.
std::string display_up(double v);
std::string display_down(double v);

void to_json(nlohmann::json& j, const Interval& v);
void from_json(const nlohmann::json& j, Interval& v);
void to_json(nlohmann::json& j, const CuspReport& v);
void from_json(const nlohmann::json& j, CuspReport& v);
/// Flat keys: "S", "r_delta", "regime_a_lo", "regime_a_hi", ..., "cusps", "sup_bound".
void to_json(nlohmann::json& j, const BoundReport& v);
void from_json(const nlohmann::json& j, BoundReport& v);
void to_json(nlohmann::json& j, const CountCertificate& v);
void from_json(const nlohmann::json& j, CountCertificate& v);
void to_json(nlohmann::json& j, const FBoundResult& v);
void from_json(const nlohmann::json& j, FBoundResult& v);
void to_json(nlohmann::json& j, const SupPolynomial& v);
void from_json(const nlohmann::json& j, SupPolynomial& v);
void to_json(nlohmann::json& j, const CuspParams& v);
void from_json(const nlohmann::json& j, CuspParams& v);
void to_json(nlohmann::json& j, const BoundParams& v);
void from_json(const nlohmann::json& j, BoundParams& v);

/// Versioned report document: the BoundReport keys at top level plus "schema",
/// "provenance", "group", "inputs", "counts", "global_sup_polynomial" and "display".
nlohmann::json pipeline_document(const PipelineResult& r);

std::string to_string(ConstantsMode m);
ConstantsMode parse_constants_mode(const std::string& s);

}  // namespace greenbound
