#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace normgrowth {

enum class Status { Pass, Fail, Skipped, Info };

std::string_view to_string(Status s);

/// One evaluated inequality. `margin` is positive when the inequality holds
/// with room to spare; `inputs` carries enough to reproduce the record.
struct CheckResult {
  std::string check;
  std::string group;
  std::size_t n = 0;
  std::string inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  Status status = Status::Pass;
  std::string note;

  bool failed() const noexcept { return status == Status::Fail; }
};

/// Ordered collection of check records with aggregate statistics.
struct GrowthReport {
  std::string name;
  std::vector<CheckResult> records;

  std::size_t pass_count() const;
  std::size_t fail_count() const;
  double min_margin() const;
  std::vector<CheckResult> counterexamples() const;
  void append(const GrowthReport& other);
};

}  // namespace normgrowth
