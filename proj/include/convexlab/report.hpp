#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "convexlab/rational.hpp"

namespace convexlab {

using ReportNumber = std::variant<Rational, double>;
using ReportValue = std::variant<Rational, double, bool, std::int64_t, std::string>;

double to_double(const ReportNumber& x);

// Outcome of one inequality verification. The stored fields determine `pass`:
// lhs <= rhs + error_budget, and every metric whose key starts with "holds."
// is true. Exact checks carry error_budget 0 and compare exactly.
struct CheckReport {
  std::string name;
  ReportNumber lhs = 0.0;
  ReportNumber rhs = 0.0;
  double ratio = 0.0;  // lhs / rhs
  double error_budget = 0.0;
  bool pass = false;
  std::vector<std::string> inputs;
  std::map<std::string, std::string> parameters;
  std::map<std::string, ReportValue> metrics;
  std::vector<std::string> notes;

  bool recompute_pass() const;
  // Fills ratio and pass from the other fields.
  void finalize();
};

// One report summarising many: lhs counts the failing members, rhs is 0.
CheckReport aggregate(std::string name, const std::vector<CheckReport>& members);

// ratio helper with 0/0 := 1 and x/0 := inf.
double safe_ratio(double lhs, double rhs);

}  // namespace convexlab
