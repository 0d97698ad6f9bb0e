#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace normgrowth {

using Point = std::uint16_t;

/// A bijection on {0, ..., degree-1} stored as its image sequence.
///
/// Products compose left to right: (a * b)[i] == b[a[i]], i.e. apply `a`
/// first, then `b`.
class Permutation {
public:
  Permutation() = default;
  /// Throws Error(NotBijective) unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Parses cycle notation such as "(0 1 2)(3 4)"; "()" is the identity.
  /// Points not mentioned are fixed. Throws ParseError / NotBijective.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  std::uint64_t order() const;
  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<Point> images_;
};

/// Largest point mentioned in a cycle string plus one (0 for the identity).
std::size_t cycle_string_degree(std::string_view text);

}  // namespace normgrowth
