#include "normgrowth/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fmt/format.h>
#include <limits>

namespace normgrowth {

namespace {

nlohmann::json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

ReportSummary ReportDocument::summary() const {
  ReportSummary s;
  s.min_margin = std::numeric_limits<double>::infinity();
  for (const auto& r : records) {
    switch (r.status) {
      case Status::Pass: ++s.pass_count; break;
      case Status::Fail: ++s.fail_count; break;
      case Status::Skipped: ++s.skipped_count; break;
      case Status::Info: ++s.info_count; break;
    }
    if (r.status == Status::Pass || r.status == Status::Fail) s.min_margin = std::min(s.min_margin, r.margin);
  }
  s.status = s.fail_count == 0 ? "PASS" : "FAIL";
  return s;
}

std::string current_timestamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json to_json(const CheckResult& r) {
  return {{"check", r.check}, {"group", r.group},   {"n", r.n},
          {"inputs", r.inputs}, {"lhs", number(r.lhs)}, {"rhs", number(r.rhs)},
          {"margin", number(r.margin)}, {"status", std::string(to_string(r.status))}, {"note", r.note}};
}

namespace {

nlohmann::json body_json(const ReportDocument& doc) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : doc.records) records.push_back(to_json(r));
  auto s = doc.summary();
  return {{"records", std::move(records)},
          {"data", doc.data},
          {"summary",
           {{"pass_count", s.pass_count},
            {"fail_count", s.fail_count},
            {"skipped_count", s.skipped_count},
            {"info_count", s.info_count},
            {"min_margin", number(s.min_margin)},
            {"status", s.status}}}};
}

}  // namespace

nlohmann::json to_json(const ReportDocument& doc) {
  nlohmann::json out = body_json(doc);
  out["header"] = {{"tool_version", doc.header.tool_version}, {"command", doc.header.command},
                   {"group_label", doc.header.group_label},   {"n", doc.header.n},
                   {"class_count", doc.header.class_count},   {"seed", doc.header.seed},
                   {"timestamp", doc.header.timestamp}};
  return out;
}

std::string body_text(const ReportDocument& doc) { return body_json(doc).dump(); }

std::string to_csv(const ReportDocument& doc) {
  std::string out = "check,group,n,inputs,lhs,rhs,margin,pass\n";
  for (const auto& r : doc.records)
    out += fmt::format("{},{},{},{},{:.17g},{:.17g},{:.17g},{}\n", csv_field(r.check), csv_field(r.group), r.n,
                       csv_field(r.inputs), r.lhs, r.rhs, r.margin, to_string(r.status));
  return out;
}

}  // namespace normgrowth
