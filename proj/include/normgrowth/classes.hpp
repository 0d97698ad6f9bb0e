#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "normgrowth/group.hpp"
#include "normgrowth/subset.hpp"

namespace normgrowth {

using ClassIndex = int;

/// Conjugacy-class partition of a FiniteGroup.
///
/// Classes are ordered by (size, smallest element index), which puts the
/// identity class at index 0.
struct ClassTable {
  std::vector<ClassIndex> class_of;
  std::vector<std::vector<ElementIndex>> classes;
  std::vector<std::size_t> sizes;
  std::vector<ElementIndex> rep;
  std::vector<ClassIndex> inverse_class;
  std::vector<bool> is_real;
  std::vector<std::uint64_t> element_orders;  // order of the representative

  std::size_t count() const noexcept { return classes.size(); }
  std::size_t group_order() const noexcept { return class_of.size(); }
};

ClassTable compute_classes(const FiniteGroup& G);

struct RealReport {
  std::size_t real_classes = 0;
  std::size_t real_elements = 0;
  std::vector<ClassIndex> nonreal_classes;
  /// Set when the group carries a defining characteristic p; semisimple means
  /// element order coprime to p.
  std::optional<std::uint32_t> characteristic;
  std::vector<ClassIndex> nonreal_semisimple_classes;
  std::size_t semisimple_elements = 0;
};

/// With `require_characteristic`, throws NoCharacteristic for groups that
/// were not built by a Lie-type constructor.
RealReport real_census(const FiniteGroup& G, const ClassTable& CT, bool require_characteristic = false);

/// A union of conjugacy classes.
class NormalSubset {
public:
  NormalSubset() = default;
  static NormalSubset from_classes(const ClassTable& CT, std::vector<ClassIndex> classes);
  /// Throws NotNormal unless `s` is a union of classes.
  static NormalSubset from_subset(const ClassTable& CT, const Subset& s);

  const std::vector<ClassIndex>& classes() const noexcept { return classes_; }
  const Subset& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return classes_.empty(); }
  bool symmetric() const noexcept { return symmetric_; }
  bool contains_class(ClassIndex c) const;

private:
  std::vector<ClassIndex> classes_;
  Subset elements_;
  bool symmetric_ = true;
};

/// True iff `s` is closed under conjugation by every generator of G.
bool is_conjugation_closed(const FiniteGroup& G, const Subset& s);

// Word maps over the alphabet {x, y, X, Y}; capitals denote inverses.
struct Letter {
  int variable;  // 0 = x, 1 = y
  bool inverse;
};

struct Word {
  std::vector<Letter> letters;
  int arity = 0;
  std::string text;
};

/// Throws EmptyWord, NotReduced, or ParseError.
Word parse_word(std::string_view text);

/// {w(g1, ..., gk)}; throws CapExceeded when |G|^arity > eval_cap.
Subset word_image(const FiniteGroup& G, const Word& w, std::uint64_t eval_cap = 20'000'000);

}  // namespace normgrowth
