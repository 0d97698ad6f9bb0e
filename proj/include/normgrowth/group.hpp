#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "normgrowth/permutation.hpp"

namespace normgrowth {

using ElementIndex = std::int32_t;

struct GroupLimits {
  std::size_t order_cap = 25000;
  /// Groups up to this order get a precomputed n x n multiplication table.
  std::size_t table_cap = 4096;
};

/// A fully enumerated permutation group. Element 0 is the identity and the
/// element order is the breadth-first insertion order of the closure.
class FiniteGroup {
public:
  std::size_t order() const noexcept { return order_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  std::optional<std::uint32_t> characteristic() const noexcept { return characteristic_; }
  std::optional<std::uint32_t> field_order() const noexcept { return field_order_; }
  void set_lie_type(std::uint32_t p, std::uint32_t q) {
    characteristic_ = p;
    field_order_ = q;
  }

  std::span<const Point> images(ElementIndex g) const {
    return {points_.data() + static_cast<std::size_t>(g) * degree_, degree_};
  }
  Permutation permutation(ElementIndex g) const;
  const std::vector<ElementIndex>& generators() const noexcept { return generators_; }

  ElementIndex identity() const noexcept { return 0; }
  ElementIndex inverse(ElementIndex g) const { return inverse_[static_cast<std::size_t>(g)]; }
  const std::vector<ElementIndex>& inverse_map() const noexcept { return inverse_; }

  /// Product "a then b" (see Permutation). Uses the table when present.
  ElementIndex mul(ElementIndex a, ElementIndex b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + static_cast<std::size_t>(b)];
    return mul_slow(a, b);
  }
  /// x^-1 * y * x
  ElementIndex conjugate(ElementIndex y, ElementIndex x) const { return mul(mul(inverse(x), y), x); }
  /// Right multiplication by the i-th generator; always tabulated.
  ElementIndex mul_generator(ElementIndex a, std::size_t gen) const {
    return right_gen_[static_cast<std::size_t>(a) * generators_.size() + gen];
  }

  std::optional<ElementIndex> find(std::span<const Point> images) const;
  std::uint64_t element_order(ElementIndex g) const;
  bool has_table() const noexcept { return !table_.empty(); }

  friend FiniteGroup closure(const std::vector<Permutation>&, const GroupLimits&, std::string);

private:
  ElementIndex mul_slow(ElementIndex a, ElementIndex b) const;
  std::size_t hash_images(std::span<const Point> images) const;
  void insert_hash(ElementIndex g);

  std::string label_;
  std::size_t order_ = 0, degree_ = 0;
  std::vector<Point> points_;
  std::vector<ElementIndex> inverse_;
  std::vector<ElementIndex> generators_;
  std::vector<ElementIndex> right_gen_;
  std::vector<ElementIndex> table_;
  std::vector<ElementIndex> slots_;  // open-addressing hash over element indices
  std::optional<std::uint32_t> characteristic_, field_order_;
};

/// Breadth-first closure of `generators` under right multiplication.
/// Throws CapExceeded when more than `limits.order_cap` elements appear and
/// NotBijective when generator degrees differ.
FiniteGroup closure(const std::vector<Permutation>& generators, const GroupLimits& limits = {},
                    std::string label = "");

FiniteGroup build_symmetric(int m, const GroupLimits& limits = {});
FiniteGroup build_alternating(int m, const GroupLimits& limits = {});
/// PSL(2,q) acting on the q+1 points [1:0], [x:1] (x in field encoding order).
FiniteGroup build_psl2(std::uint32_t q, const GroupLimits& limits = {});
/// PSL(3,q), q in {2,3,4}, acting on the q^2+q+1 points of the projective plane.
FiniteGroup build_psl3(std::uint32_t q, const GroupLimits& limits = {});

/// Order formula |PSL(d,q)| used to cross-check the enumerations.
std::uint64_t psl_order_formula(int d, std::uint64_t q);

}  // namespace normgrowth
