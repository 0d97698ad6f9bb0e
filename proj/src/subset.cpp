#include "normgrowth/subset.hpp"

namespace normgrowth {

Subset Subset::full(std::size_t n) {
  Subset s(n);
  for (std::size_t i = 0; i < n; ++i) s.words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  s.count_ = n;
  return s;
}

Subset Subset::of(std::size_t n, const std::vector<ElementIndex>& elements) {
  Subset s(n);
  for (auto g : elements) s.insert(g);
  return s;
}

std::vector<ElementIndex> Subset::elements() const {
  std::vector<ElementIndex> out;
  out.reserve(count_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(static_cast<ElementIndex>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool Subset::is_subset_of(const Subset& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

Subset Subset::complement() const {
  Subset c = full(n_);
  for (std::size_t w = 0; w < words_.size(); ++w) c.words_[w] &= ~words_[w];
  c.recount();
  return c;
}

Subset& Subset::operator|=(const Subset& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  recount();
  return *this;
}

void Subset::recount() {
  count_ = 0;
  for (auto w : words_) count_ += static_cast<std::size_t>(std::popcount(w));
}

}  // namespace normgrowth
