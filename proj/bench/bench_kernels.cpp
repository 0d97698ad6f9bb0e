// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <map>
#include <memory>
#include <random>
#include <string>

#include "normgrowth/distribution.hpp"
#include "normgrowth/group_spec.hpp"
#include "normgrowth/kernels.hpp"

using namespace normgrowth;

namespace {

const char* const kGroups[] = {"A:5", "PSL2:7", "PSL2:13", "PSL3:3"};

const GroupData& group(std::int64_t i) {
  static std::map<std::int64_t, std::unique_ptr<GroupData>> cache;
  auto& slot = cache[i];
  if (!slot) slot = std::make_unique<GroupData>(analyze(kGroups[i]));
  return *slot;
}

struct Inputs {
  Subset A, B, S;
  Distribution X, Y;
};

Inputs inputs(const GroupData& D) {
  std::mt19937_64 rng(1);
  const std::size_t n = D.n();
  return {random_subset(n, rng, 0.3), random_subset(n, rng, 0.3), random_subset(n, rng, 0.02), random_distribution(n, rng),
          random_sparse_distribution(n, rng)};
}

template <bool Parallel>
void BM_ProductSet(benchmark::State& state) {
  const auto& D = group(state.range(0));
  auto in = inputs(D);
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::parallel::product_set(D.G, in.A, in.B));
    else
      benchmark::DoNotOptimize(kernels::serial::product_set(D.G, in.A, in.B));
  }
  state.SetLabel(D.label());
}

template <bool Parallel>
void BM_PairCounts(benchmark::State& state) {
  const auto& D = group(state.range(0));
  auto in = inputs(D);
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::parallel::pair_counts(D.G, in.A, in.B));
    else
      benchmark::DoNotOptimize(kernels::serial::pair_counts(D.G, in.A, in.B));
  }
  state.SetLabel(D.label());
}

template <bool Parallel>
void BM_Convolve(benchmark::State& state) {
  const auto& D = group(state.range(0));
  auto in = inputs(D);
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::parallel::convolve(D.G, in.X.weights(), in.Y.weights()));
    else
      benchmark::DoNotOptimize(kernels::serial::convolve(D.G, in.X.weights(), in.Y.weights()));
  }
  state.SetLabel(D.label());
}

template <bool Parallel>
void BM_ClassTensor(benchmark::State& state) {
  const auto& D = group(state.range(0));
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::parallel::class_mult_tensor(D.G, D.CT));
    else
      benchmark::DoNotOptimize(kernels::serial::class_mult_tensor(D.G, D.CT));
  }
  state.SetLabel(D.label());
}

template <bool Parallel>
void BM_ArcCount(benchmark::State& state) {
  const auto& D = group(state.range(0));
  auto in = inputs(D);
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(kernels::parallel::arc_count(D.G, in.A, in.B, in.S));
    else
      benchmark::DoNotOptimize(kernels::serial::arc_count(D.G, in.A, in.B, in.S));
  }
  state.SetLabel(D.label());
}

template <bool Parallel>
void BM_GatherSum(benchmark::State& state) {
  const auto& D = group(state.range(0));
  const std::size_t n = D.n(), k = 8;
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(n - 1));
  std::vector<ElementIndex> index(k * n);
  for (auto& i : index) i = pick(rng);
  std::vector<double> in(n, 1.0), out(n);
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::parallel::gather_sum(index, n, 0.125, in, out);
    else
      kernels::serial::gather_sum(index, n, 0.125, in, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetLabel(D.label());
}

}  // namespace

BENCHMARK(BM_ProductSet<false>)->DenseRange(0, 2)->Name("product_set/serial");
BENCHMARK(BM_ProductSet<true>)->DenseRange(0, 2)->Name("product_set/parallel");
BENCHMARK(BM_PairCounts<false>)->DenseRange(0, 2)->Name("pair_counts/serial");
BENCHMARK(BM_PairCounts<true>)->DenseRange(0, 2)->Name("pair_counts/parallel");
BENCHMARK(BM_Convolve<false>)->DenseRange(0, 2)->Name("convolve/serial");
BENCHMARK(BM_Convolve<true>)->DenseRange(0, 2)->Name("convolve/parallel");
BENCHMARK(BM_ClassTensor<false>)->DenseRange(0, 3)->Name("class_mult_tensor/serial");
BENCHMARK(BM_ClassTensor<true>)->DenseRange(0, 3)->Name("class_mult_tensor/parallel");
BENCHMARK(BM_ArcCount<false>)->DenseRange(0, 2)->Name("arc_count/serial");
BENCHMARK(BM_ArcCount<true>)->DenseRange(0, 2)->Name("arc_count/parallel");
BENCHMARK(BM_GatherSum<false>)->DenseRange(0, 3)->Name("gather_sum/serial");
BENCHMARK(BM_GatherSum<true>)->DenseRange(0, 3)->Name("gather_sum/parallel");

BENCHMARK_MAIN();
