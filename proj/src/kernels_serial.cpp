#include "normgrowth/kernels.hpp"

namespace normgrowth::kernels::serial {

Subset product_set(const FiniteGroup& G, const Subset& A, const Subset& B) {
  Subset out(G.order());
  auto bs = B.elements();
  for (auto a : A.elements())
    for (auto b : bs) out.insert(G.mul(a, b));
  return out;
}

std::vector<std::int64_t> pair_counts(const FiniteGroup& G, const Subset& A, const Subset& B) {
  std::vector<std::int64_t> counts(G.order(), 0);
  auto bs = B.elements();
  for (auto a : A.elements())
    for (auto b : bs) ++counts[static_cast<std::size_t>(G.mul(a, b))];
  return counts;
}

std::vector<double> convolve(const FiniteGroup& G, std::span<const double> X, std::span<const double> Y) {
  const std::size_t n = G.order();
  std::vector<double> out(n, 0.0);
  for (std::size_t g = 0; g < n; ++g) {
    if (X[g] == 0.0) continue;
    for (std::size_t t = 0; t < n; ++t) {
      if (Y[t] == 0.0) continue;
      // h = g t, so Y(g^-1 h) = Y(t)
      out[static_cast<std::size_t>(G.mul(static_cast<ElementIndex>(g), static_cast<ElementIndex>(t)))] += X[g] * Y[t];
    }
  }
  return out;
}

std::vector<std::int64_t> class_mult_tensor(const FiniteGroup& G, const ClassTable& CT) {
  const std::size_t k = CT.count();
  std::vector<std::int64_t> a(k * k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < k; ++c)
      for (auto x : CT.classes[i]) {
        ElementIndex y = G.mul(G.inverse(x), CT.rep[c]);
        ++a[tensor_index(k, i, static_cast<std::size_t>(CT.class_of[static_cast<std::size_t>(y)]), c)];
      }
  return a;
}

void gather_sum(std::span<const ElementIndex> index, std::size_t n, double scale, std::span<const double> in,
                std::span<double> out) {
  const std::size_t d = index.size() / n;
  for (std::size_t x = 0; x < n; ++x) {
    double acc = 0.0;
    for (std::size_t s = 0; s < d; ++s) acc += in[static_cast<std::size_t>(index[s * n + x])];
    out[x] = scale * acc;
  }
}

std::int64_t arc_count(const FiniteGroup& G, const Subset& A, const Subset& B, const Subset& S) {
  std::int64_t count = 0;
  auto bs = B.elements();
  for (auto a : A.elements()) {
    ElementIndex ainv = G.inverse(a);
    for (auto b : bs) count += S.contains(G.mul(ainv, b)) ? 1 : 0;
  }
  return count;
}

}  // namespace normgrowth::kernels::serial
