#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

#include "normgrowth/check.hpp"

namespace normgrowth {

inline constexpr const char* kToolVersion = "0.3.0";

struct ReportHeader {
  std::string tool_version = kToolVersion;
  std::string command;
  std::string group_label;
  std::size_t n = 0;
  std::size_t class_count = 0;
  std::uint64_t seed = 0;
  std::string timestamp;  // the only field allowed to differ between identical runs
};

struct ReportSummary {
  std::size_t pass_count = 0;
  std::size_t fail_count = 0;
  std::size_t skipped_count = 0;
  std::size_t info_count = 0;
  double min_margin = 0.0;
  std::string status;  // "PASS" iff fail_count == 0
};

struct ReportDocument {
  ReportHeader header;
  std::vector<CheckResult> records;
  nlohmann::json data = nlohmann::json::object();  // command-specific payload

  ReportSummary summary() const;
  bool passed() const { return summary().fail_count == 0; }
};

std::string current_timestamp();

nlohmann::json to_json(const CheckResult& r);
nlohmann::json to_json(const ReportDocument& doc);
/// Everything except the header timestamp; identical configs give identical bodies.
std::string body_text(const ReportDocument& doc);
/// One row per record: check,group,n,inputs,lhs,rhs,margin,pass
std::string to_csv(const ReportDocument& doc);

}  // namespace normgrowth
