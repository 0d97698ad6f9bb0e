#include "normgrowth/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "normgrowth/error.hpp"
#include "normgrowth/finite_field.hpp"

namespace normgrowth {

Permutation FiniteGroup::permutation(ElementIndex g) const {
  auto im = images(g);
  return Permutation(std::vector<Point>(im.begin(), im.end()));
}

std::size_t FiniteGroup::hash_images(std::span<const Point> images) const {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point p : images) {
    h ^= p;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

void FiniteGroup::insert_hash(ElementIndex g) {
  std::size_t mask = slots_.size() - 1;
  std::size_t s = hash_images(images(g)) & mask;
  while (slots_[s] >= 0) s = (s + 1) & mask;
  slots_[s] = g;
}

std::optional<ElementIndex> FiniteGroup::find(std::span<const Point> im) const {
  if (im.size() != degree_) return std::nullopt;
  std::size_t mask = slots_.size() - 1;
  std::size_t s = hash_images(im) & mask;
  while (slots_[s] >= 0) {
    auto cand = images(slots_[s]);
    if (std::equal(cand.begin(), cand.end(), im.begin())) return slots_[s];
    s = (s + 1) & mask;
  }
  return std::nullopt;
}

ElementIndex FiniteGroup::mul_slow(ElementIndex a, ElementIndex b) const {
  constexpr std::size_t kStack = 64;
  auto ia = images(a), ib = images(b);
  if (degree_ <= kStack) {
    std::array<Point, kStack> buf;
    for (std::size_t i = 0; i < degree_; ++i) buf[i] = ib[ia[i]];
    return *find({buf.data(), degree_});
  }
  std::vector<Point> buf(degree_);
  for (std::size_t i = 0; i < degree_; ++i) buf[i] = ib[ia[i]];
  return *find(buf);
}

std::uint64_t FiniteGroup::element_order(ElementIndex g) const {
  std::uint64_t k = 1;
  for (ElementIndex x = g; x != 0; x = mul(x, g)) ++k;
  return k;
}

FiniteGroup closure(const std::vector<Permutation>& generators, const GroupLimits& limits, std::string label) {
  FiniteGroup G;
  G.label_ = std::move(label);
  G.degree_ = generators.empty() ? 0 : generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != G.degree_) throw Error(ErrorCode::NotBijective, "generators have different degrees");

  const std::size_t deg = G.degree_;
  const std::size_t ngen = generators.size();
  auto id = Permutation::identity(deg);
  G.points_.assign(id.images().begin(), id.images().end());
  G.order_ = 1;
  G.slots_.assign(64, -1);
  G.insert_hash(0);

  std::vector<ElementIndex> parent{-1};
  std::vector<std::uint32_t> parent_gen{0};
  std::vector<Point> buf(deg);

  auto rehash = [&] {
    std::size_t cap = G.slots_.size();
    while (cap < 2 * (G.order_ + 1)) cap *= 2;
    if (cap == G.slots_.size()) return;
    G.slots_.assign(cap, -1);
    for (std::size_t i = 0; i < G.order_; ++i) G.insert_hash(static_cast<ElementIndex>(i));
  };

  for (std::size_t idx = 0; idx < G.order_; ++idx) {
    for (std::size_t k = 0; k < ngen; ++k) {
      auto gi = generators[k].images();
      const Point* cur = G.points_.data() + idx * deg;
      for (std::size_t i = 0; i < deg; ++i) buf[i] = gi[cur[i]];
      auto found = G.find(buf);
      ElementIndex target;
      if (found) {
        target = *found;
      } else {
        if (G.order_ >= limits.order_cap)
          throw Error(ErrorCode::CapExceeded, "closure exceeds order cap " + std::to_string(limits.order_cap));
        G.points_.insert(G.points_.end(), buf.begin(), buf.end());
        target = static_cast<ElementIndex>(G.order_++);
        parent.push_back(static_cast<ElementIndex>(idx));
        parent_gen.push_back(static_cast<std::uint32_t>(k));
        rehash();
        G.insert_hash(target);
      }
      G.right_gen_.push_back(target);
    }
  }

  const std::size_t n = G.order_;
  for (const auto& g : generators) G.generators_.push_back(*G.find(g.images()));

  G.inverse_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Point* cur = G.points_.data() + x * deg;
    for (std::size_t i = 0; i < deg; ++i) buf[cur[i]] = static_cast<Point>(i);
    G.inverse_[x] = *G.find(buf);
  }

  if (n <= limits.table_cap) {
    // Row x: x * e_j = (x * e_parent(j)) * gen(j); parents precede children.
    G.table_.resize(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      ElementIndex* row = G.table_.data() + x * n;
      row[0] = static_cast<ElementIndex>(x);
      for (std::size_t j = 1; j < n; ++j)
        row[j] = G.right_gen_[static_cast<std::size_t>(row[parent[j]]) * ngen + parent_gen[j]];
    }
  }
  return G;
}

namespace {

Permutation cycle_of(std::vector<Point> pts, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t k = 0; k < pts.size(); ++k) images[pts[k]] = pts[(k + 1) % pts.size()];
  return Permutation(std::move(images));
}

std::vector<Point> range_points(std::size_t from, std::size_t to) {
  std::vector<Point> v;
  for (std::size_t i = from; i < to; ++i) v.push_back(static_cast<Point>(i));
  return v;
}

}  // namespace

FiniteGroup build_symmetric(int m, const GroupLimits& limits) {
  if (m < 2 || m > 9) throw Error(ErrorCode::CapExceeded, "symmetric group degree must be in [2, 9]");
  auto d = static_cast<std::size_t>(m);
  return closure({cycle_of(range_points(0, d), d), cycle_of({0, 1}, d)}, limits, "S" + std::to_string(m));
}

FiniteGroup build_alternating(int m, const GroupLimits& limits) {
  if (m < 2 || m > 9) throw Error(ErrorCode::CapExceeded, "alternating group degree must be in [2, 9]");
  auto d = static_cast<std::size_t>(m);
  std::vector<Permutation> gens;
  if (m == 2) {
    gens.push_back(Permutation::identity(d));
  } else {
    gens.push_back(cycle_of({0, 1, 2}, d));
    if (m > 3) gens.push_back(cycle_of(m % 2 == 1 ? range_points(0, d) : range_points(1, d), d));
  }
  return closure(gens, limits, "A" + std::to_string(m));
}

FiniteGroup build_psl2(std::uint32_t q, const GroupLimits& limits) {
  FiniteField F(q);
  if (q < 4) throw Error(ErrorCode::CapExceeded, "PSL2 requires q >= 4");
  if (psl_order_formula(2, q) > limits.order_cap)
    throw Error(ErrorCode::CapExceeded, "PSL(2," + std::to_string(q) + ") exceeds order cap");

  const std::size_t npts = q + 1;
  auto point_index = [&](std::uint32_t a, std::uint32_t b) -> Point {
    if (b == 0) return 0;
    return static_cast<Point>(1 + F.mul(a, F.inv(b)));
  };
  auto coords = [&](std::size_t idx) -> std::array<std::uint32_t, 2> {
    if (idx == 0) return {1, 0};
    return {static_cast<std::uint32_t>(idx - 1), 1};
  };
  // Row-vector action v -> v A with A = [[a, b], [c, d]].
  auto matrix_perm = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
    std::vector<Point> images(npts);
    for (std::size_t i = 0; i < npts; ++i) {
      auto v = coords(i);
      images[i] = point_index(F.add(F.mul(v[0], a), F.mul(v[1], c)), F.add(F.mul(v[0], b), F.mul(v[1], d)));
    }
    return Permutation(std::move(images));
  };

  std::vector<Permutation> gens;
  for (auto t : F.additive_basis()) {
    gens.push_back(matrix_perm(1, t, 0, 1));
    gens.push_back(matrix_perm(1, 0, t, 1));
  }
  auto G = closure(gens, limits, "PSL(2," + std::to_string(q) + ")");
  G.set_lie_type(F.characteristic(), q);
  return G;
}

FiniteGroup build_psl3(std::uint32_t q, const GroupLimits& limits) {
  FiniteField F(q);
  if (q < 2 || q > 4) throw Error(ErrorCode::CapExceeded, "PSL3 is supported for q in {2, 3, 4}");
  if (psl_order_formula(3, q) > limits.order_cap)
    throw Error(ErrorCode::CapExceeded, "PSL(3," + std::to_string(q) + ") exceeds order cap");

  const std::size_t npts = q * q + q + 1;
  using Vec = std::array<std::uint32_t, 3>;
  auto point_index = [&](Vec v) -> Point {
    if (v[2] != 0) {
      auto s = F.inv(v[2]);
      return static_cast<Point>(1 + q + F.mul(v[1], s) * q + F.mul(v[0], s));
    }
    if (v[1] != 0) return static_cast<Point>(1 + F.mul(v[0], F.inv(v[1])));
    return 0;
  };
  auto coords = [&](std::size_t idx) -> Vec {
    if (idx == 0) return {1, 0, 0};
    if (idx <= q) return {static_cast<std::uint32_t>(idx - 1), 1, 0};
    auto r = static_cast<std::uint32_t>(idx - 1 - q);
    return {r % q, r / q, 1};
  };
  // Transvection I + t E_{row,col}, acting on row vectors: (v A)_col += v_row * t.
  auto transvection = [&](int row, int col, std::uint32_t t) {
    std::vector<Point> images(npts);
    for (std::size_t i = 0; i < npts; ++i) {
      auto v = coords(i);
      auto w = v;
      w[col] = F.add(w[col], F.mul(v[row], t));
      images[i] = point_index(w);
    }
    return Permutation(std::move(images));
  };

  std::vector<Permutation> gens;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (r != c)
        for (auto t : F.additive_basis()) gens.push_back(transvection(r, c, t));
  auto G = closure(gens, limits, "PSL(3," + std::to_string(q) + ")");
  G.set_lie_type(F.characteristic(), q);
  return G;
}

std::uint64_t psl_order_formula(int d, std::uint64_t q) {
  if (d == 2) return q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1);
  if (d == 3) return q * q * q * (q * q * q - 1) * (q * q - 1) / std::gcd<std::uint64_t>(3, q - 1);
  return 0;
}

}  // namespace normgrowth
