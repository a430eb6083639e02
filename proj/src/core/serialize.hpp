#pragma once

#include <string>

#include "json.hpp"

#include "core/hadamard.hpp"
#include "core/kdata.hpp"
#include "core/trigpoly.hpp"
#include "core/trigpoly2.hpp"
#include "core/verify.hpp"

namespace huygens {

// Text and JSON serialization for the library's value types. Canonical text
// written by the polynomial classes parses back to an equal value, so the
// JSON table format round-trips; parse failures throw ParseError.

// Scalar text: "num/den" (exact) or "decimal@bits" (floating).
Scalar parse_scalar(const std::string& text);

// Inverse of TrigPoly::canonical_text / TrigPoly2::canonical_text. The
// single-angle form accepts the angle symbol p; the two-angle form accepts
// products of at most one p-factor and one q-factor per term.
TrigPoly parse_trigpoly(const std::string& text);
TrigPoly2 parse_trigpoly2(const std::string& text);

// Sequence data as JSON: {"k":[...], "phases":[{"cos":..,"sin":..}, ...],
// "mode":"exact"}. Floating mode adds "precision" (bits) and accepts phases
// given either as scalar strings or as {"angle_radians": <number>}.
nlohmann::json kdata_to_json(const KData& data);
KData kdata_from_json(const nlohmann::json& j);

// Coefficient table as JSON: the sequence data plus, per order nu, the
// canonical text of the coefficient's angular numerator and denominator and
// the power of (r rho) scaling it. Tagged "schema":"hk-1".
nlohmann::json table_to_json(const HadamardTable& table);

// One verification report as a single-line JSON object (no newline).
std::string report_to_json_line(const VerifyReport& report);
std::string status_text(VerifyStatus status);

// Decimal text with 17 significant digits (value round-trips through text).
std::string csv_double(double value);

}  // namespace huygens
