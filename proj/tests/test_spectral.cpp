#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "normgrowth/distribution.hpp"
#include "normgrowth/error.hpp"
#include "normgrowth/group_spec.hpp"
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

NormalSubset one_class(const GroupData& D, std::size_t c) {
  return NormalSubset::from_classes(D.CT, {static_cast<ClassIndex>(c)});
}

NormalSubset all_nonidentity(const GroupData& D) {
  std::vector<ClassIndex> cls;
  for (std::size_t c = 1; c < D.CT.count(); ++c) cls.push_back(static_cast<ClassIndex>(c));
  return NormalSubset::from_classes(D.CT, cls);
}

// Reference lambda: random-walk matrix from raw permutation products, then
// the top singular value of M restricted to the complement of the ones vector.
double reference_lambda(const FiniteGroup& G, const Subset& S) {
  const auto n = static_cast<Eigen::Index>(G.order());
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  const double d = static_cast<double>(S.size());
  for (Eigen::Index g = 0; g < n; ++g)
    for (auto s : S.elements()) M(g, oracle::product(G, static_cast<ElementIndex>(g), s)) += 1.0 / d;
  M.array() -= 1.0 / static_cast<double>(n);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  return svd.singularValues()(0);
}

}  // namespace

TEST_CASE("character eigenvalues") {
  auto D = analyze("A:5");
  std::vector<ClassIndex> all;
  for (std::size_t c = 0; c < D.CT.count(); ++c) all.push_back(static_cast<ClassIndex>(c));
  auto whole = eigenvalues_normal(D.tab, NormalSubset::from_classes(D.CT, all));
  CHECK(std::abs(whole[0] - Complex(1, 0)) < 1e-10);
  for (std::size_t r = 1; r < whole.size(); ++r) CHECK(std::abs(whole[r]) < 1e-10);

  auto id = eigenvalues_normal(D.tab, one_class(D, 0));
  for (auto z : id) CHECK(std::abs(z - Complex(1, 0)) < 1e-10);

  for (std::size_t c = 1; c < D.CT.count(); ++c) {
    auto ev = eigenvalues_normal(D.tab, one_class(D, c));
    for (std::size_t r = 0; r < ev.size(); ++r) CHECK(std::abs(ev[r] - D.tab.values[r][c] / D.tab.degrees[r]) < 1e-10);
    CHECK(lambda_normal(D.tab, one_class(D, c)) == doctest::Approx(character_ratio(D.tab, c)).epsilon(1e-12));
  }
}

TEST_CASE("closed forms for lambda") {
  auto D = analyze("A:5");
  CHECK(lambda_normal(D.tab, one_class(D, 0)) == doctest::Approx(1.0));
  CHECK(lambda_normal(D.tab, all_nonidentity(D)) == doctest::Approx(1.0 / 59.0).epsilon(1e-10));
  CHECK(lambda_direct(make_cayley(D.G, D.CT, all_nonidentity(D))).lambda == doctest::Approx(1.0 / 59.0).epsilon(1e-9));
  CHECK(lambda_direct(make_cayley(D.G, D.CT, Subset::full(60))).lambda == doctest::Approx(0.0).epsilon(1e-7));
  CHECK(lambda_direct(make_cayley(D.G, D.CT, one_class(D, 0))).lambda == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(code_of([&] { make_cayley(D.G, D.CT, Subset(60)); }) == ErrorCode::EmptySubset);
}

TEST_CASE("direct and character routes agree on every class") {
  for (const char* spec : {"A:5", "S:5", "PSL2:7", "PSL3:2"}) {
    CAPTURE(spec);
    auto D = analyze(spec);
    for (std::size_t c = 1; c < D.CT.count(); ++c) {
      auto cay = make_cayley(D.G, D.CT, one_class(D, c));
      auto direct = lambda_direct(cay);
      CHECK(direct.dense);
      CHECK(direct.commutator_residual <= 1e-10);
      CHECK(std::abs(direct.lambda - lambda_normal(D.tab, cay)) <= 1e-6);
      CHECK(direct.lambda <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("direct route matches an independent SVD") {
  auto D = analyze("PSL2:7");
  std::mt19937_64 rng(3);
  for (int t = 0; t < 4; ++t) {
    auto S = random_subset(D.n(), rng, 0.1);
    auto cay = make_cayley(D.G, D.CT, S);
    CHECK_FALSE(cay.normal());
    auto direct = lambda_direct(cay);
    CHECK(std::isnan(direct.commutator_residual));
    CHECK(direct.lambda == doctest::Approx(reference_lambda(D.G, S)).epsilon(1e-9));
  }
  auto S = one_class(D, 3);
  CHECK(lambda_direct(make_cayley(D.G, D.CT, S)).lambda == doctest::Approx(reference_lambda(D.G, S.elements())).epsilon(1e-9));
}

TEST_CASE("sparse path agrees with the dense path") {
  auto D = analyze("PSL2:7");
  SpectralOptions sparse;
  sparse.dense_cap = 10;
  for (std::size_t c = 1; c < D.CT.count(); ++c) {
    auto cay = make_cayley(D.G, D.CT, one_class(D, c));
    auto it = lambda_direct(cay, sparse);
    CHECK_FALSE(it.dense);
    CHECK(it.iterations > 0);
    CHECK(it.lambda == doctest::Approx(lambda_normal(D.tab, cay)).epsilon(1e-6));
  }
  SpectralOptions starved = sparse;
  starved.max_iterations = 2;
  CHECK(code_of([&] { lambda_direct(make_cayley(D.G, D.CT, one_class(D, 1)), starved); }) == ErrorCode::NoConvergence);
}

TEST_CASE("PSL(3,3) uses the iterative path" * doctest::timeout(600)) {
  auto D = analyze("PSL3:3");
  auto cay = make_cayley(D.G, D.CT, one_class(D, D.CT.count() - 1));
  auto it = lambda_direct(cay);
  CHECK_FALSE(it.dense);
  CHECK(std::abs(it.lambda - lambda_normal(D.tab, cay)) <= 1e-6);
}

TEST_CASE("lambda_normal rejects non-normal connection sets") {
  auto D = analyze("A:5");
  auto cay = make_cayley(D.G, D.CT, Subset::of(60, {1, 2}));
  CHECK(code_of([&] { lambda_normal(D.tab, cay); }) == ErrorCode::NotNormal);
  CHECK(code_of([&] { check_vertex_expansion(cay, Subset::of(60, {0}), D.tab); }) == ErrorCode::NotNormal);
  auto rep = spectral_report(cay, D.tab);
  CHECK(std::isnan(rep.lambda_char));
  CHECK(rep.eigenvalues.empty());
}

TEST_CASE("neighborhoods") {
  auto D = analyze("A:5");
  auto S = one_class(D, 3);
  auto cay = make_cayley(D.G, D.CT, S);
  CHECK(neighborhood(cay, Subset::full(60)).size() == 60);
  CHECK(neighborhood(cay, Subset::of(60, {0})) == S.elements());
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    auto B = random_subset(60, rng, 0.2);
    auto N = neighborhood(cay, B);
    CHECK(N == oracle::product_set(D.G, B, S.elements()));
    CHECK(N.size() >= B.size());
  }
}

TEST_CASE("vertex expansion") {
  auto D = analyze("A:5");
  std::mt19937_64 rng(17);
  for (std::size_t c = 1; c < D.CT.count(); ++c) {
    auto cay = make_cayley(D.G, D.CT, one_class(D, c));
    CHECK(check_vertex_expansion(cay, Subset::full(60), D.tab).status == Status::Pass);
    for (int t = 0; t < 250; ++t) {
      auto B = random_subset(60, rng, std::uniform_real_distribution<double>(0, 1)(rng));
      auto r = check_vertex_expansion(cay, B, D.tab);
      CHECK_MESSAGE(r.status == Status::Pass, r.inputs);
    }
  }
  auto P = analyze("PSL2:7");
  for (std::size_t c = 1; c < P.CT.count(); ++c)
    CHECK(check_vertex_expansion(make_cayley(P.G, P.CT, one_class(P, c)), Subset::of(168, {0}), P.tab).status == Status::Pass);
}

TEST_CASE("mixing lemma") {
  auto D = analyze("PSL2:7");
  std::mt19937_64 rng(23);
  for (std::size_t c = 1; c < D.CT.count(); ++c) {
    auto cay = make_cayley(D.G, D.CT, one_class(D, c));
    auto whole = mixing_discrepancy(cay, Subset::full(168), random_subset(168, rng), D.tab);
    CHECK(whole.lhs == doctest::Approx(0.0).epsilon(1e-12));
    auto empty = mixing_discrepancy(cay, random_subset(168, rng), Subset(168), D.tab);
    CHECK(empty.lhs == doctest::Approx(0.0));
    CHECK(empty.rhs == doctest::Approx(0.0));
    for (int t = 0; t < 100; ++t) {
      auto r = mixing_discrepancy(cay, random_subset(168, rng), random_subset(168, rng), D.tab);
      CHECK(r.status == Status::Pass);
    }
  }
}

TEST_CASE("spectral report") {
  auto D = analyze("PSL2:7");
  auto rep = spectral_report(make_cayley(D.G, D.CT, one_class(D, 1)), D.tab);
  CHECK(std::abs(rep.lambda_char - rep.lambda_direct) <= 1e-6);
  CHECK(rep.eigenvalues.size() == D.tab.rows());
  CHECK(rep.dense);
  CHECK(rep.commutator_residual <= 1e-10);
}
