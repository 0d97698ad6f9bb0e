#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "normgrowth/check.hpp"
#include "normgrowth/group.hpp"
#include "normgrowth/subset.hpp"

namespace normgrowth {

/// Probability distribution on the elements of a group, indexed by element.
class Distribution {
public:
  Distribution() = default;
  /// Throws InvalidDistribution for negative weights or a sum away from 1.
  explicit Distribution(std::vector<double> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t g) const { return weights_[g]; }
  std::span<const double> weights() const noexcept { return weights_; }

private:
  std::vector<double> weights_;
};

Distribution uniform(std::size_t n);
/// Uniform on B; throws EmptySubset.
Distribution from_subset(const Subset& B);
Distribution point_mass(std::size_t n, ElementIndex g);

/// (X*Y)(h) = sum_g X(g) Y(g^-1 h)
Distribution convolve(const FiniteGroup& G, const Distribution& X, const Distribution& Y);

/// ||X - U|| in the l2 norm.
double l2_dist_uniform(const Distribution& X);

/// ||X*Y - U|| <= sqrt(n/m) ||X - U|| ||Y - U||
CheckResult check_bnp_star(const FiniteGroup& G, int m, const Distribution& X, const Distribution& Y);

struct WeightedLambda {
  double lambda = 0.0;
  double bound = 0.0;  // sqrt(n/m) ||Y - U||
  bool bound_holds = true;
};

/// Spectral expansion of the complete Cayley digraph with arc weights
/// M_{x,y} = Y(x^-1 y), via M M^t = [D(x^-1 y)] with D = Y * Y^-1.
/// Throws CapExceeded above `dense_cap`.
WeightedLambda weighted_cayley_lambda(const FiniteGroup& G, const Distribution& Y, int m, std::size_t dense_cap = 2500);

/// |AB| > n / (1 + n^2/(m|A||B|)) >= min(n/2, m|A||B|/(2n)); the strict
/// inequality is decided in exact integer arithmetic.
CheckResult check_bnp_two_step(const FiniteGroup& G, int m, const Subset& A, const Subset& B);

/// Normalized i.i.d. uniform [0,1] weights.
Distribution random_distribution(std::size_t n, std::mt19937_64& rng);
/// Uniform on a random nonempty subset.
Distribution random_sparse_distribution(std::size_t n, std::mt19937_64& rng);
/// Each element kept with probability `density`; never empty.
Subset random_subset(std::size_t n, std::mt19937_64& rng, double density = 0.5);

}  // namespace normgrowth
