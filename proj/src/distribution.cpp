#include "normgrowth/distribution.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <numeric>

#include "normgrowth/error.hpp"
#include "normgrowth/kernels.hpp"

namespace normgrowth {

namespace {
constexpr double kSlack = 1e-9;
}

Distribution::Distribution(std::vector<double> weights) : weights_(std::move(weights)) {
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0)) throw Error(ErrorCode::InvalidDistribution, "negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12 * std::max<double>(1.0, static_cast<double>(weights_.size())))
    throw Error(ErrorCode::InvalidDistribution, "weights sum to " + std::to_string(sum));
}

Distribution uniform(std::size_t n) { return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n))); }

Distribution from_subset(const Subset& B) {
  if (B.empty()) throw Error(ErrorCode::EmptySubset, "from_subset needs a nonempty subset");
  std::vector<double> w(B.universe(), 0.0);
  const double v = 1.0 / static_cast<double>(B.size());
  for (auto g : B.elements()) w[static_cast<std::size_t>(g)] = v;
  return Distribution(std::move(w));
}

Distribution point_mass(std::size_t n, ElementIndex g) {
  std::vector<double> w(n, 0.0);
  w[static_cast<std::size_t>(g)] = 1.0;
  return Distribution(std::move(w));
}

Distribution convolve(const FiniteGroup& G, const Distribution& X, const Distribution& Y) {
  return Distribution(kernels::parallel::convolve(G, X.weights(), Y.weights()));
}

double l2_dist_uniform(const Distribution& X) {
  const double u = 1.0 / static_cast<double>(X.size());
  double s = 0.0;
  for (double w : X.weights()) s += (w - u) * (w - u);
  return std::sqrt(s);
}

CheckResult check_bnp_star(const FiniteGroup& G, int m, const Distribution& X, const Distribution& Y) {
  const double n = static_cast<double>(G.order());
  CheckResult r;
  r.check = "bnp_star";
  r.group = G.label();
  r.n = G.order();
  r.inputs = "m=" + std::to_string(m);
  r.lhs = l2_dist_uniform(convolve(G, X, Y));
  r.rhs = std::sqrt(n / m) * l2_dist_uniform(X) * l2_dist_uniform(Y);
  r.margin = r.rhs - r.lhs;
  r.status = r.lhs <= r.rhs + kSlack ? Status::Pass : Status::Fail;
  return r;
}

WeightedLambda weighted_cayley_lambda(const FiniteGroup& G, const Distribution& Y, int m, std::size_t dense_cap) {
  const std::size_t n = G.order();
  if (n > dense_cap) throw Error(ErrorCode::CapExceeded, "weighted Cayley spectrum needs n <= dense cap");
  std::vector<double> inv(n);
  for (std::size_t g = 0; g < n; ++g) inv[g] = Y[static_cast<std::size_t>(G.inverse(static_cast<ElementIndex>(g)))];
  auto D = kernels::parallel::convolve(G, Y.weights(), inv);

  const auto ni = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd K(ni, ni);
  const double u = 1.0 / static_cast<double>(n);
  for (std::size_t x = 0; x < n; ++x) {
    ElementIndex xinv = G.inverse(static_cast<ElementIndex>(x));
    for (std::size_t y = 0; y < n; ++y)
      K(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) =
          D[static_cast<std::size_t>(G.mul(xinv, static_cast<ElementIndex>(y)))] - u;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K, Eigen::EigenvaluesOnly);
  WeightedLambda out;
  out.lambda = std::sqrt(std::max(es.eigenvalues().maxCoeff(), 0.0));
  out.bound = std::sqrt(static_cast<double>(n) / m) * l2_dist_uniform(Y);
  out.bound_holds = out.lambda <= out.bound + kSlack;
  return out;
}

CheckResult check_bnp_two_step(const FiniteGroup& G, int m, const Subset& A, const Subset& B) {
  if (A.empty() || B.empty()) throw Error(ErrorCode::EmptySubset, "check_bnp_two_step needs nonempty subsets");
  const auto n = static_cast<std::int64_t>(G.order());
  const auto a = static_cast<std::int64_t>(A.size()), b = static_cast<std::int64_t>(B.size());
  const auto ab = static_cast<std::int64_t>(kernels::parallel::product_set(G, A, B).size());
  const std::int64_t mab = m * a * b;
  // |AB| > n mab / (mab + n^2)  <=>  |AB| (mab + n^2) > n mab
  const bool strict = static_cast<__int128>(ab) * (mab + n * n) > static_cast<__int128>(n) * mab;
  const double nd = static_cast<double>(n);
  const double bound = nd / (1.0 + nd * nd / static_cast<double>(mab));
  const double floor = std::min(nd / 2.0, static_cast<double>(mab) / (2.0 * nd));

  CheckResult r;
  r.check = "bnp_two_step";
  r.group = G.label();
  r.n = G.order();
  r.inputs = "m=" + std::to_string(m) + " |A|=" + std::to_string(a) + " |B|=" + std::to_string(b);
  r.lhs = static_cast<double>(ab);
  r.rhs = bound;
  r.margin = std::min(r.lhs - bound, bound - floor);
  r.status = strict && bound >= floor - kSlack ? Status::Pass : Status::Fail;
  return r;
}

Distribution random_distribution(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> w(n);
  double sum = 0.0;
  for (double& x : w) sum += (x = unif(rng));
  for (double& x : w) x /= sum;
  return Distribution(std::move(w));
}

Subset random_subset(std::size_t n, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution coin(density);
  Subset s(n);
  for (std::size_t g = 0; g < n; ++g)
    if (coin(rng)) s.insert(static_cast<ElementIndex>(g));
  if (s.empty()) s.insert(static_cast<ElementIndex>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)));
  return s;
}

Distribution random_sparse_distribution(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> density(0.0, 1.0);
  return from_subset(random_subset(n, rng, density(rng)));
}

}  // namespace normgrowth
