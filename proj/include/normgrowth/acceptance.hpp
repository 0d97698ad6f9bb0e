#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "normgrowth/report.hpp"

namespace normgrowth {

/// quick: A5, S5, PSL(2,7). full: every group each criterion names.
enum class Profile { Quick, Full };

Profile parse_profile(std::string_view text);
std::string_view to_string(Profile p);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::size_t checks = 0;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  Profile profile = Profile::Full;
  std::uint64_t seed = 20240601;
  /// Criterion 14 repeats criteria 1-13 from scratch and compares bodies.
  bool check_determinism = true;
  std::ostream* progress = nullptr;
};

struct AcceptanceRun {
  std::vector<CriterionResult> criteria;
  ReportDocument report;

  bool passed() const;
};

AcceptanceRun run_acceptance(const AcceptanceOptions& options);

}  // namespace normgrowth
