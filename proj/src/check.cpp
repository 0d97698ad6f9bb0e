#include "normgrowth/check.hpp"

#include <algorithm>
#include <limits>

namespace normgrowth {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
    case Status::Info: return "INFO";
  }
  return "?";
}

std::size_t GrowthReport::pass_count() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const CheckResult& r) { return r.status == Status::Pass; }));
}

std::size_t GrowthReport::fail_count() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const CheckResult& r) { return r.failed(); }));
}

double GrowthReport::min_margin() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& r : records)
    if (r.status == Status::Pass || r.status == Status::Fail) m = std::min(m, r.margin);
  return m;
}

std::vector<CheckResult> GrowthReport::counterexamples() const {
  std::vector<CheckResult> out;
  for (const auto& r : records)
    if (r.failed()) out.push_back(r);
  return out;
}

void GrowthReport::append(const GrowthReport& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

}  // namespace normgrowth
