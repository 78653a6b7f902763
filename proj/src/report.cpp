#include "convexlab/report.hpp"

#include <algorithm>
#include <limits>

namespace convexlab {

double to_double(const ReportNumber& x) {
  if (const auto* q = std::get_if<Rational>(&x)) return q->get_d();
  return std::get<double>(x);
}

double safe_ratio(double lhs, double rhs) {
  if (rhs == 0.0) return lhs == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return lhs / rhs;
}

bool CheckReport::recompute_pass() const {
  bool inequality;
  const auto* ql = std::get_if<Rational>(&lhs);
  const auto* qr = std::get_if<Rational>(&rhs);
  if (ql && qr && error_budget == 0.0) {
    inequality = *ql <= *qr;
  } else {
    inequality = to_double(lhs) <= to_double(rhs) + error_budget;
  }
  for (const auto& [key, value] : metrics) {
    if (key.rfind("holds.", 0) != 0) continue;
    const bool* b = std::get_if<bool>(&value);
    if (b == nullptr || !*b) return false;
  }
  return inequality;
}

void CheckReport::finalize() {
  const auto* ql = std::get_if<Rational>(&lhs);
  const auto* qr = std::get_if<Rational>(&rhs);
  if (ql && qr && sgn(*qr) != 0) {
    ratio = Rational(*ql / *qr).get_d();
  } else {
    ratio = safe_ratio(to_double(lhs), to_double(rhs));
  }
  pass = recompute_pass();
}

CheckReport aggregate(std::string name, const std::vector<CheckReport>& members) {
  long failures = 0;
  double worst = -std::numeric_limits<double>::infinity();
  CheckReport r;
  r.name = std::move(name);
  for (const auto& m : members) {
    if (!m.pass) {
      ++failures;
      if (r.notes.size() < 5) r.notes.push_back("failed: " + m.name);
    }
    worst = std::max(worst, m.ratio);
  }
  r.lhs = Rational(failures);
  r.rhs = Rational(0);
  r.metrics["checks"] = static_cast<std::int64_t>(members.size());
  if (!members.empty()) r.metrics["maxRatio"] = worst;
  r.finalize();
  return r;
}

}  // namespace convexlab
