#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "convexlab/measure.hpp"
#include "convexlab/report.hpp"
#include "convexlab/set_models.hpp"

namespace convexlab {

using Json = nlohmann::ordered_json;

// Parses JSON text keeping every non-integer number literal as its source
// string, so decimals such as 0.1 read back as the exact rational 1/10.
Json parse_json_exact(std::string_view text);

Rational rational_from_json(const Json& value);
Json to_json(const Rational& value);  // "p/q", or "p" for integers

// Set descriptions. "kind" is one of
//   vpolytope {vertices}, hpolytope {halfspaces: [{normal, offset}]},
//   simplex {dim, L}, box {lo, hi}, grid {cell, origin?, cells}, lattice {points}.
// Every polytope form is converted to vertices.
using SetDescription = std::variant<VPolytope, GridSet, LatticeSet>;

SetDescription set_from_json(const Json& j);
Json to_json(const VPolytope& p);
Json to_json(const GridSet& g);
Json to_json(const LatticeSet& s);
Json to_json(const SetDescription& s);

std::string read_file(const std::string& path);
SetDescription load_set(const std::string& path);
std::string sha256_hex(std::string_view bytes);

Json to_json(const VolumeEstimate& v);
Json to_json(const ReportValue& v);
Json to_json(const CheckReport& r);

// CSV cells: rationals as p/q, doubles with 17 significant digits.
std::string csv_number(const ReportNumber& x);
std::string csv_double(double x);
std::string csv_escape(std::string_view text);
inline constexpr std::string_view kReportCsvHeader = "name,pass,lhs,rhs,ratio,errorBudget";
std::string csv_row(const CheckReport& r);

}  // namespace convexlab
