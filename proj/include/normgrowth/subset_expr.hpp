#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "normgrowth/group_spec.hpp"
#include "normgrowth/subset.hpp"

namespace normgrowth {

/// Subset expressions accepted on the command line:
///   class:i  classes:i,j,...  all-nonid  complement-real  word:<w>
struct SubsetExpr {
  enum class Kind { Class, Classes, AllNonIdentity, ComplementReal, WordImage };
  Kind kind = Kind::Class;
  std::vector<int> indices;
  std::string word;

  friend bool operator==(const SubsetExpr&, const SubsetExpr&) = default;
};

/// Throws ParseError.
SubsetExpr parse_subset_expr(std::string_view text);
std::string to_string(const SubsetExpr& expr);
Subset evaluate(const SubsetExpr& expr, const GroupData& D);

}  // namespace normgrowth
