#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "normgrowth/group.hpp"

namespace normgrowth {

/// Element set of a group of order n, stored as a bitset.
class Subset {
public:
  Subset() = default;
  explicit Subset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static Subset full(std::size_t n);
  static Subset of(std::size_t n, const std::vector<ElementIndex>& elements);

  std::size_t universe() const noexcept { return n_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool contains(ElementIndex g) const {
    auto i = static_cast<std::size_t>(g);
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  void insert(ElementIndex g) {
    auto i = static_cast<std::size_t>(g);
    std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (!(words_[i >> 6] & bit)) {
      words_[i >> 6] |= bit;
      ++count_;
    }
  }

  std::vector<ElementIndex> elements() const;
  bool is_subset_of(const Subset& other) const;
  Subset complement() const;
  Subset& operator|=(const Subset& other);

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }
  friend bool operator==(const Subset& a, const Subset& b) { return a.n_ == b.n_ && a.words_ == b.words_; }

private:
  void recount();

  std::size_t n_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace normgrowth
