#include <doctest.h>

#include <cmath>
#include <random>

#include "normgrowth/distribution.hpp"
#include "normgrowth/error.hpp"
#include "normgrowth/growth.hpp"
#include "normgrowth/spectral.hpp"
#include "oracles.hpp"

using namespace normgrowth;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

// Direct double loop over raw permutation products.
std::vector<double> reference_convolve(const FiniteGroup& G, const Distribution& X, const Distribution& Y) {
  std::vector<double> out(G.order(), 0.0);
  for (std::size_t g = 0; g < G.order(); ++g)
    for (std::size_t h = 0; h < G.order(); ++h)
      out[static_cast<std::size_t>(oracle::product(G, static_cast<ElementIndex>(g), static_cast<ElementIndex>(h)))] += X[g] * Y[h];
  return out;
}

}  // namespace

TEST_CASE("distribution validation") {
  CHECK_NOTHROW(Distribution({0.25, 0.75}));
  CHECK(code_of([] { Distribution({0.5, 0.6}); }) == ErrorCode::InvalidDistribution);
  CHECK(code_of([] { Distribution({1.5, -0.5}); }) == ErrorCode::InvalidDistribution);
  CHECK(code_of([] { from_subset(Subset(5)); }) == ErrorCode::EmptySubset);
}

TEST_CASE("uniform and subset distributions") {
  auto one = uniform(1);
  CHECK(one.size() == 1);
  CHECK(one[0] == 1.0);
  auto u = uniform(60);
  double s = 0;
  for (std::size_t g = 0; g < 60; ++g) {
    CHECK(u[g] == doctest::Approx(1.0 / 60));
    s += u[g];
  }
  CHECK(s == doctest::Approx(1.0));
  CHECK(l2_dist_uniform(u) == doctest::Approx(0.0));

  auto full = from_subset(Subset::full(60));
  for (std::size_t g = 0; g < 60; ++g) CHECK(full[g] == doctest::Approx(1.0 / 60));
  auto id = from_subset(Subset::of(60, {0}));
  CHECK(id[0] == 1.0);
  CHECK(id[1] == 0.0);

  std::mt19937_64 rng(1);
  for (int t = 0; t < 10; ++t) {
    auto B = random_subset(60, rng, 0.3);
    CHECK(l2_dist_uniform(from_subset(B)) == doctest::Approx(std::sqrt(1.0 / B.size() - 1.0 / 60)));
  }
  CHECK(l2_dist_uniform(point_mass(2, 0)) == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("convolution") {
  auto D = analyze("A:5");
  std::mt19937_64 rng(2);
  auto X = random_distribution(60, rng), Y = random_distribution(60, rng), Z = random_sparse_distribution(60, rng);

  auto UY = convolve(D.G, uniform(60), Y);
  for (std::size_t g = 0; g < 60; ++g) CHECK(UY[g] == doctest::Approx(1.0 / 60));

  for (ElementIndex a : {3, 17})
    for (ElementIndex b : {5, 41}) {
      auto ab = convolve(D.G, point_mass(60, a), point_mass(60, b));
      CHECK(ab[static_cast<std::size_t>(oracle::product(D.G, a, b))] == 1.0);
    }

  auto XY = convolve(D.G, X, Y);
  auto ref = reference_convolve(D.G, X, Y);
  for (std::size_t g = 0; g < 60; ++g) CHECK(XY[g] == doctest::Approx(ref[g]).epsilon(1e-12));

  auto left = convolve(D.G, convolve(D.G, X, Y), Z);
  auto right = convolve(D.G, X, convolve(D.G, Y, Z));
  for (std::size_t g = 0; g < 60; ++g) CHECK(std::abs(left[g] - right[g]) <= 1e-10);

  auto A = random_subset(60, rng, 0.3), B = random_subset(60, rng, 0.3);
  auto AB = convolve(D.G, from_subset(A), from_subset(B));
  for (ElementIndex g = 0; g < 60; ++g) CHECK(std::abs(AB[static_cast<std::size_t>(g)] - pab_exact(D.G, A, B, g).value()) <= 1e-12);
}

TEST_CASE("convolution inequality") {
  auto A5 = analyze("A:5");
  const int m = min_nontrivial_degree(A5.tab);
  REQUIRE(m == 3);
  auto flat = check_bnp_star(A5.G, m, uniform(60), point_mass(60, 4));
  CHECK(flat.lhs == doctest::Approx(0.0));
  CHECK(flat.rhs == doctest::Approx(0.0));
  CHECK(flat.status == Status::Pass);

  auto pm = check_bnp_star(A5.G, m, point_mass(60, 7), point_mass(60, 9));
  CHECK(pm.lhs == doctest::Approx(std::sqrt(1.0 - 1.0 / 60)));
  CHECK(pm.rhs == doctest::Approx(std::sqrt(20.0) * (1.0 - 1.0 / 60)));
  CHECK(pm.status == Status::Pass);

  auto P = analyze("PSL2:7");
  std::mt19937_64 rng(3);
  for (int t = 0; t < 1000; ++t) {
    auto X = t % 2 ? random_sparse_distribution(168, rng) : random_distribution(168, rng);
    auto Y = t % 3 ? random_sparse_distribution(168, rng) : random_distribution(168, rng);
    REQUIRE(check_bnp_star(P.G, 3, X, Y).status == Status::Pass);
  }
}

TEST_CASE("weighted Cayley spectrum") {
  auto P = analyze("PSL2:7");
  const int m = 3;
  CHECK(weighted_cayley_lambda(P.G, uniform(168), m).lambda == doctest::Approx(0.0).epsilon(1e-7));
  CHECK(weighted_cayley_lambda(P.G, point_mass(168, 0), m).lambda == doctest::Approx(1.0));
  for (std::size_t c = 1; c < P.CT.count(); ++c) {
    auto S = NormalSubset::from_classes(P.CT, {static_cast<ClassIndex>(c)});
    double w = weighted_cayley_lambda(P.G, from_subset(S.elements()), m).lambda;
    double d = lambda_direct(make_cayley(P.G, P.CT, S)).lambda;
    CHECK(std::abs(w - d) <= 1e-8);
  }
  // The spectral form bounds every contraction ratio.
  std::mt19937_64 rng(4);
  for (int t = 0; t < 5; ++t) {
    auto Y = t % 2 ? random_sparse_distribution(168, rng) : random_distribution(168, rng);
    auto wl = weighted_cayley_lambda(P.G, Y, m);
    CHECK(wl.bound_holds);
    CHECK(wl.lambda <= wl.bound + 1e-9);
    double worst = 0.0;
    for (int s = 0; s < 200; ++s) {
      auto X = s % 2 ? random_sparse_distribution(168, rng) : random_distribution(168, rng);
      worst = std::max(worst, l2_dist_uniform(convolve(P.G, X, Y)) / l2_dist_uniform(X));
    }
    CHECK(worst <= wl.lambda + 1e-6);
  }
  CHECK(code_of([&] { weighted_cayley_lambda(P.G, uniform(168), m, 100); }) == ErrorCode::CapExceeded);
}

TEST_CASE("degree-based two-step growth") {
  auto D = analyze("A:5");
  auto whole = check_bnp_two_step(D.G, 3, Subset::full(60), Subset::full(60));
  CHECK(whole.lhs == 60);
  CHECK(whole.status == Status::Pass);
  auto ones = check_bnp_two_step(D.G, 3, Subset::of(60, {0}), Subset::of(60, {0}));
  CHECK(ones.lhs == 1);
  CHECK(ones.rhs == doctest::Approx(60.0 / 1201.0));
  CHECK(ones.status == Status::Pass);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    std::uniform_real_distribution<double> density(0, 1);
    auto A = random_subset(60, rng, density(rng)), B = random_subset(60, rng, density(rng));
    REQUIRE(check_bnp_two_step(D.G, 3, A, B).status == Status::Pass);
  }
  CHECK(code_of([&] { check_bnp_two_step(D.G, 3, Subset(60), Subset::full(60)); }) == ErrorCode::EmptySubset);
}

TEST_CASE("random generators") {
  std::mt19937_64 a(9), b(9);
  auto X = random_distribution(50, a), Y = random_distribution(50, b);
  for (std::size_t g = 0; g < 50; ++g) CHECK(X[g] == Y[g]);
  for (int t = 0; t < 100; ++t) {
    CHECK_FALSE(random_subset(10, a, 0.0).empty());
    auto s = random_sparse_distribution(10, a);
    double total = 0;
    for (std::size_t g = 0; g < 10; ++g) total += s[g];
    CHECK(total == doctest::Approx(1.0));
  }
}
