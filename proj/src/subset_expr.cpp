#include "normgrowth/subset_expr.hpp"

#include <charconv>

#include "normgrowth/error.hpp"

namespace normgrowth {

namespace {

int parse_index(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v < 0)
    throw Error(ErrorCode::ParseError, "bad class index in subset expression '" + std::string(whole) + "'");
  return v;
}

}  // namespace

SubsetExpr parse_subset_expr(std::string_view text) {
  SubsetExpr e;
  if (text == "all-nonid") {
    e.kind = SubsetExpr::Kind::AllNonIdentity;
    return e;
  }
  if (text == "complement-real") {
    e.kind = SubsetExpr::Kind::ComplementReal;
    return e;
  }
  if (text.starts_with("class:")) {
    e.kind = SubsetExpr::Kind::Class;
    e.indices.push_back(parse_index(text.substr(6), text));
    return e;
  }
  if (text.starts_with("classes:")) {
    e.kind = SubsetExpr::Kind::Classes;
    auto rest = text.substr(8);
    for (;;) {
      auto comma = rest.find(',');
      e.indices.push_back(parse_index(rest.substr(0, comma), text));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return e;
  }
  if (text.starts_with("word:")) {
    e.kind = SubsetExpr::Kind::WordImage;
    e.word = std::string(text.substr(5));
    parse_word(e.word);
    return e;
  }
  throw Error(ErrorCode::ParseError, "unknown subset expression '" + std::string(text) + "'");
}

std::string to_string(const SubsetExpr& e) {
  switch (e.kind) {
    case SubsetExpr::Kind::Class: return "class:" + std::to_string(e.indices.at(0));
    case SubsetExpr::Kind::Classes: {
      std::string s = "classes:";
      for (std::size_t i = 0; i < e.indices.size(); ++i) s += (i ? "," : "") + std::to_string(e.indices[i]);
      return s;
    }
    case SubsetExpr::Kind::AllNonIdentity: return "all-nonid";
    case SubsetExpr::Kind::ComplementReal: return "complement-real";
    case SubsetExpr::Kind::WordImage: return "word:" + e.word;
  }
  return "";
}

Subset evaluate(const SubsetExpr& e, const GroupData& D) {
  std::vector<ClassIndex> cls;
  switch (e.kind) {
    case SubsetExpr::Kind::Class:
    case SubsetExpr::Kind::Classes:
      for (int i : e.indices) {
        if (static_cast<std::size_t>(i) >= D.CT.count())
          throw Error(ErrorCode::ParseError, "class index " + std::to_string(i) + " out of range");
        cls.push_back(i);
      }
      break;
    case SubsetExpr::Kind::AllNonIdentity:
      for (std::size_t c = 1; c < D.CT.count(); ++c) cls.push_back(static_cast<ClassIndex>(c));
      break;
    case SubsetExpr::Kind::ComplementReal:
      for (std::size_t c = 0; c < D.CT.count(); ++c)
        if (!D.CT.is_real[c]) cls.push_back(static_cast<ClassIndex>(c));
      break;
    case SubsetExpr::Kind::WordImage: return word_image(D.G, parse_word(e.word));
  }
  return NormalSubset::from_classes(D.CT, cls).elements();
}

}  // namespace normgrowth
