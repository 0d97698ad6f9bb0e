#include "normgrowth/group_spec.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>

#include "normgrowth/error.hpp"

namespace normgrowth {

namespace {

std::uint32_t parse_uint(std::string_view text, std::string_view spec) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw Error(ErrorCode::ParseError, "bad integer in group spec '" + std::string(spec) + "'");
  return v;
}

FiniteGroup from_generator_file(const std::filesystem::path& path, const GroupLimits& limits) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "unknown group spec or unreadable file: " + path.string());
  std::vector<std::string> lines;
  std::size_t degree = 0;
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    degree = std::max(degree, cycle_string_degree(line));
    lines.push_back(line);
  }
  if (lines.empty()) throw Error(ErrorCode::ParseError, "generator file has no generators: " + path.string());
  degree = std::max<std::size_t>(degree, 1);
  std::vector<Permutation> gens;
  for (const auto& l : lines) gens.push_back(Permutation::from_cycles(l, degree));
  return closure(gens, limits, path.stem().string());
}

}  // namespace

FiniteGroup parse_group_spec(std::string_view spec, const GroupLimits& limits) {
  auto colon = spec.find(':');
  if (colon != std::string_view::npos) {
    auto kind = spec.substr(0, colon);
    auto arg = spec.substr(colon + 1);
    if (kind == "S") return build_symmetric(static_cast<int>(parse_uint(arg, spec)), limits);
    if (kind == "A") return build_alternating(static_cast<int>(parse_uint(arg, spec)), limits);
    if (kind == "PSL2") return build_psl2(parse_uint(arg, spec), limits);
    if (kind == "PSL3") return build_psl3(parse_uint(arg, spec), limits);
  }
  return from_generator_file(std::filesystem::path(std::string(spec)), limits);
}

bool is_simple_label(const std::string& label) {
  if (label.rfind("PSL(", 0) == 0) return true;
  if (label.size() == 2 && label[0] == 'A') return label[1] >= '5' && label[1] <= '9';
  return false;
}

GroupData analyze(FiniteGroup G, const DixonOptions& options) {
  GroupData D{std::move(G), {}, {}};
  D.CT = compute_classes(D.G);
  D.tab = compute_character_table(D.G, D.CT, options);
  return D;
}

GroupData analyze(std::string_view spec, const GroupLimits& limits, const DixonOptions& options) {
  return analyze(parse_group_spec(spec, limits), options);
}

}  // namespace normgrowth
