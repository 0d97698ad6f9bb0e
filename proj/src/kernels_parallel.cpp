#include "normgrowth/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace normgrowth::kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace parallel {

Subset product_set(const FiniteGroup& G, const Subset& A, const Subset& B) {
  const auto as = A.elements();
  const auto bs = B.elements();
  const auto na = static_cast<std::ptrdiff_t>(as.size());
  Subset out(G.order());
#pragma omp parallel
  {
    Subset local(G.order());
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < na; ++i)
      for (auto b : bs) local.insert(G.mul(as[static_cast<std::size_t>(i)], b));
#pragma omp critical
    out |= local;
  }
  return out;
}

std::vector<std::int64_t> pair_counts(const FiniteGroup& G, const Subset& A, const Subset& B) {
  const std::size_t n = G.order();
  const auto as = A.elements();
  const auto bs = B.elements();
  const auto na = static_cast<std::ptrdiff_t>(as.size());
  std::vector<std::int64_t> counts(n, 0);
#pragma omp parallel
  {
    std::vector<std::int64_t> local(n, 0);
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < na; ++i)
      for (auto b : bs) ++local[static_cast<std::size_t>(G.mul(as[static_cast<std::size_t>(i)], b))];
#pragma omp critical
    for (std::size_t g = 0; g < n; ++g) counts[g] += local[g];
  }
  return counts;
}

std::vector<double> convolve(const FiniteGroup& G, std::span<const double> X, std::span<const double> Y) {
  const std::size_t n = G.order();
  std::vector<double> out(n, 0.0);
  std::vector<ElementIndex> support;
  for (std::size_t g = 0; g < n; ++g)
    if (X[g] != 0.0) support.push_back(static_cast<ElementIndex>(g));
  // Gather form: (X*Y)(h) = sum_{g in supp X} X(g) Y(g^-1 h); no write races.
  const auto nh = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t h = 0; h < nh; ++h) {
    double acc = 0.0;
    for (auto g : support)
      acc += X[static_cast<std::size_t>(g)] * Y[static_cast<std::size_t>(G.mul(G.inverse(g), static_cast<ElementIndex>(h)))];
    out[static_cast<std::size_t>(h)] = acc;
  }
  return out;
}

std::vector<std::int64_t> class_mult_tensor(const FiniteGroup& G, const ClassTable& CT) {
  const std::size_t k = CT.count();
  std::vector<std::int64_t> a(k * k * k, 0);
  const auto pairs = static_cast<std::ptrdiff_t>(k * k);
  // Each (i, c) pair owns the disjoint slots a[i][*][c].
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t p = 0; p < pairs; ++p) {
    auto i = static_cast<std::size_t>(p) / k, c = static_cast<std::size_t>(p) % k;
    for (auto x : CT.classes[i]) {
      ElementIndex y = G.mul(G.inverse(x), CT.rep[c]);
      ++a[tensor_index(k, i, static_cast<std::size_t>(CT.class_of[static_cast<std::size_t>(y)]), c)];
    }
  }
  return a;
}

void gather_sum(std::span<const ElementIndex> index, std::size_t n, double scale, std::span<const double> in,
                std::span<double> out) {
  const std::size_t d = index.size() / n;
  const auto nx = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t x = 0; x < nx; ++x) {
    double acc = 0.0;
    for (std::size_t s = 0; s < d; ++s) acc += in[static_cast<std::size_t>(index[s * n + static_cast<std::size_t>(x)])];
    out[static_cast<std::size_t>(x)] = scale * acc;
  }
}

std::int64_t arc_count(const FiniteGroup& G, const Subset& A, const Subset& B, const Subset& S) {
  const auto as = A.elements();
  const auto bs = B.elements();
  const auto na = static_cast<std::ptrdiff_t>(as.size());
  std::int64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
  for (std::ptrdiff_t i = 0; i < na; ++i) {
    ElementIndex ainv = G.inverse(as[static_cast<std::size_t>(i)]);
    for (auto b : bs) count += S.contains(G.mul(ainv, b)) ? 1 : 0;
  }
  return count;
}

}  // namespace parallel
}  // namespace normgrowth::kernels
