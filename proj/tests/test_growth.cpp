#include <doctest.h>

#include <cmath>
#include <random>

#include "normgrowth/distribution.hpp"
#include "normgrowth/error.hpp"
#include "normgrowth/growth.hpp"
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

NormalSubset cls(const GroupData& D, std::vector<ClassIndex> c) { return NormalSubset::from_classes(D.CT, std::move(c)); }

NormalSubset everything(const GroupData& D) {
  std::vector<ClassIndex> c;
  for (std::size_t i = 0; i < D.CT.count(); ++i) c.push_back(static_cast<ClassIndex>(i));
  return cls(D, c);
}

NormalSubset nonidentity(const GroupData& D) {
  std::vector<ClassIndex> c;
  for (std::size_t i = 1; i < D.CT.count(); ++i) c.push_back(static_cast<ClassIndex>(i));
  return cls(D, c);
}

ClassIndex class_of_size(const GroupData& D, std::size_t size) {
  for (std::size_t c = 0; c < D.CT.count(); ++c)
    if (D.CT.sizes[c] == size) return static_cast<ClassIndex>(c);
  FAIL("no class of size " << size);
  return -1;
}

std::vector<NormalSubset> all_unions(const GroupData& D) {
  std::vector<NormalSubset> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << D.CT.count()); ++mask) {
    std::vector<ClassIndex> c;
    for (std::size_t i = 0; i < D.CT.count(); ++i)
      if (mask >> i & 1U) c.push_back(static_cast<ClassIndex>(i));
    out.push_back(cls(D, c));
  }
  return out;
}

bool no_failures(const GrowthReport& rep) { return rep.fail_count() == 0; }

}  // namespace

TEST_CASE("product sets") {
  auto D = analyze("A:5");
  std::mt19937_64 rng(1);
  auto B = random_subset(60, rng, 0.3);
  CHECK(product_set(D.G, Subset::of(60, {0}), B) == B);
  CHECK(product_set(D.G, Subset::full(60), Subset::full(60)).size() == 60);
  auto C20 = cls(D, {class_of_size(D, 20)});
  CHECK(product_set(D.G, C20.elements(), C20.elements()).size() == 60);
  for (int t = 0; t < 20; ++t) {
    auto X = random_subset(60, rng, 0.2), Y = random_subset(60, rng, 0.2);
    auto XY = product_set(D.G, X, Y);
    CHECK(XY == oracle::product_set(D.G, X, Y));
    CHECK(oracle::product_set(D.G, X, Subset::of(60, {Y.elements().front()})).is_subset_of(XY));
    CHECK(oracle::product_set(D.G, Subset::of(60, {X.elements().front()}), Y).is_subset_of(XY));
  }
  // Products of normal sets are normal.
  auto N = product_set(D.G, cls(D, {1}).elements(), cls(D, {3}).elements());
  CHECK(is_conjugation_closed(D.G, N));
}

TEST_CASE("exact decomposition probabilities") {
  auto D = analyze("A:5");
  auto G = Subset::full(60);
  for (ElementIndex g = 0; g < 60; ++g) {
    auto p = pab_exact(D.G, G, G, g);
    CHECK(p.count * 60 == p.total);
  }
  std::mt19937_64 rng(2);
  auto B = random_subset(60, rng, 0.4);
  for (ElementIndex g = 0; g < 60; ++g) {
    auto p = pab_exact(D.G, Subset::of(60, {0}), B, g);
    CHECK(p.count == (B.contains(g) ? 1 : 0));
    CHECK(p.total == static_cast<std::int64_t>(B.size()));
  }
  auto C20 = cls(D, {class_of_size(D, 20)}).elements();
  auto p = pab_exact(D.G, C20, C20, 0);
  CHECK(p.count == 20);
  CHECK(p.total == 400);
  // Counts sum to |A||B| and agree with the oracle.
  auto X = random_subset(60, rng, 0.3), Y = random_subset(60, rng, 0.3);
  auto counts = oracle::pair_counts(D.G, X, Y);
  std::int64_t total = 0;
  for (ElementIndex g = 0; g < 60; ++g) {
    auto q = pab_exact(D.G, X, Y, g);
    CHECK(q.count == counts[static_cast<std::size_t>(g)]);
    total += q.count;
  }
  CHECK(total == static_cast<std::int64_t>(X.size() * Y.size()));
}

TEST_CASE("Frobenius formula") {
  auto D = analyze("A:5");
  for (std::size_t k = 0; k < D.CT.count(); ++k)
    CHECK(pab_frobenius(D.tab, everything(D), everything(D), k) == doctest::Approx(1.0 / 60).epsilon(1e-10));
  CHECK(pab_frobenius(D.tab, cls(D, {class_of_size(D, 20)}), cls(D, {class_of_size(D, 15)}), 0) ==
        doctest::Approx(0.0).epsilon(1e-12));

  auto P = analyze("PSL2:7");
  const std::size_t k = P.CT.count();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto A = cls(P, {static_cast<ClassIndex>(i)}), B = cls(P, {static_cast<ClassIndex>(j)});
      auto counts = oracle::pair_counts(P.G, A.elements(), B.elements());
      for (std::size_t c = 0; c < k; ++c) {
        double f = pab_frobenius(P.tab, A, B, c) * static_cast<double>(A.size() * B.size());
        CHECK(std::llround(f) == counts[static_cast<std::size_t>(P.CT.rep[c])]);
        CHECK(std::abs(f - std::round(f)) <= 1e-8 * std::max(1.0, std::abs(f)));
      }
    }
}

TEST_CASE("two-step growth") {
  auto D = analyze("A:5");
  for (std::size_t c = 0; c < D.CT.count(); ++c) {
    auto r = check_2step(D, cls(D, {static_cast<ClassIndex>(c)}), Subset::full(60));
    CHECK(r.status == Status::Pass);
    CHECK(r.lhs == 60);
    CHECK(r.rhs == doctest::Approx(60));
  }
  // Class with the smallest R times {1}.
  std::size_t best = 1;
  for (std::size_t c = 2; c < D.CT.count(); ++c)
    if (character_ratio(D.tab, c) < character_ratio(D.tab, best)) best = c;
  auto A = cls(D, {static_cast<ClassIndex>(best)});
  auto r = check_2step(D, A, Subset::of(60, {0}));
  CHECK(r.status == Status::Pass);
  CHECK(r.lhs == static_cast<double>(A.size()));
  double R = character_ratio(D.tab, best);
  CHECK(r.rhs == doctest::Approx(60.0 / (1.0 + R * R * 59.0)));

  auto P = analyze("PSL2:7");
  std::mt19937_64 rng(3);
  for (std::size_t c = 0; c < P.CT.count(); ++c)
    for (int t = 0; t < 200; ++t) {
      auto rr = check_2step(P, cls(P, {static_cast<ClassIndex>(c)}), random_subset(168, rng, 0.1 + 0.8 * (t % 5) / 4.0));
      REQUIRE_MESSAGE(rr.status == Status::Pass, rr.inputs);
    }
  CHECK(code_of([&] { check_2step(D, A, Subset(60)); }) == ErrorCode::EmptySubset);
}

TEST_CASE("Gowers criterion for two subsets") {
  auto D = analyze("A:5");
  for (std::size_t k = 1; k < D.CT.count(); ++k) {
    auto r = check_gowers2(D, everything(D), everything(D), k);
    CHECK(r.status == Status::Pass);
  }
  auto unions = all_unions(D);
  std::size_t skipped = 0, passed = 0;
  for (const auto& A : unions)
    for (const auto& B : unions)
      for (std::size_t k = 1; k < D.CT.count(); ++k) {
        auto r = check_gowers2(D, A, B, k);
        REQUIRE(r.status != Status::Fail);
        (r.status == Status::Skipped ? skipped : passed) += 1;
      }
  CHECK(skipped > 0);
  CHECK(passed > 0);
  auto P = analyze("PSL2:7");
  for (std::size_t i = 0; i < P.CT.count(); ++i)
    for (std::size_t j = 0; j < P.CT.count(); ++j)
      for (std::size_t k = 1; k < P.CT.count(); ++k)
        REQUIRE(check_gowers2(P, cls(P, {static_cast<ClassIndex>(i)}), cls(P, {static_cast<ClassIndex>(j)}), k).status !=
                Status::Fail);
  CHECK(code_of([&] { check_gowers2(D, everything(D), everything(D), 0); }) == ErrorCode::ParseError);
}

TEST_CASE("product distribution near uniform") {
  auto D = analyze("A:5");
  auto whole = check_asymp(D, everything(D), everything(D));
  REQUIRE(whole.records.size() == D.CT.count());
  for (const auto& r : whole.records) {
    CHECK(r.lhs == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r.status == Status::Pass);
  }
  auto C12 = cls(D, {class_of_size(D, 12)});
  auto rep = check_asymp(D, C12, C12);
  CHECK(no_failures(rep));
  CHECK(rep.records[0].rhs == doctest::Approx(1.0 / 12.0));
  auto p = pab_exact(D.G, C12.elements(), C12.elements(), 0);
  CHECK(rep.records[0].lhs == doctest::Approx(std::abs(p.value() - 1.0 / 60)));

  auto unions = all_unions(D);
  for (const auto& A : unions)
    for (const auto& B : unions) REQUIRE(no_failures(check_asymp(D, A, B)));
}

TEST_CASE("square growth dichotomy") {
  auto P = analyze("PSL2:7");
  auto r = dichotomy_check(P, nonidentity(P));
  CHECK(r.note == "branch=cover");
  CHECK(r.status == Status::Pass);

  auto D = analyze("A:5");
  for (const auto& A : all_unions(D)) {
    if (A.size() == 1) continue;
    REQUIRE(dichotomy_check(D, A).status == Status::Pass);
  }
  CHECK(code_of([&] { dichotomy_check(D, cls(D, {0})); }) == ErrorCode::TrivialSubset);
  CHECK(code_of([&] { dichotomy_check(D, NormalSubset{}); }) == ErrorCode::TrivialSubset);

  auto Q = analyze("PSL2:11");
  std::size_t smallest = 1;
  for (std::size_t c = 2; c < Q.CT.count(); ++c)
    if (Q.CT.sizes[c] < Q.CT.sizes[smallest]) smallest = c;
  CHECK(Q.CT.sizes[smallest] == 55);
  const double Rq = max_nonidentity_ratio(Q.tab);
  std::size_t checked = 0;
  for (std::size_t c = 1; c < Q.CT.count(); ++c) {
    if (c != smallest && Q.CT.sizes[c] != 110) continue;
    CAPTURE(c);
    auto A = cls(Q, {static_cast<ClassIndex>(c)});
    const double a = static_cast<double>(A.size());
    auto rq = dichotomy_check(Q, A);
    const bool big = a >= Rq * 660.0;
    CHECK(rq.note == (big ? "branch=cover" : "branch=growth"));
    CHECK(rq.status == Status::Pass);
    auto A2 = oracle::product_set(Q.G, A.elements(), A.elements());
    if (big) {
      CHECK(A2.size() + (A2.contains(0) ? 0 : 1) == 660);
    } else {
      CHECK(static_cast<double>(A2.size()) >= a / (2.0 * Rq));
    }
    ++checked;
  }
  CHECK(checked == 3);
}

TEST_CASE("Gluck measurement") {
  for (const char* spec : {"PSL2:5", "PSL2:7", "PSL2:9", "PSL3:2"}) {
    CAPTURE(spec);
    auto g = gluck_report(analyze(spec));
    CHECK(g.nineteen_twentieths_ok);
    CHECK(g.scaled == doctest::Approx(std::sqrt(static_cast<double>(g.q)) * g.r_max));
  }
  CHECK(gluck_report(analyze("PSL2:7")).q == 7);
  CHECK(code_of([] { gluck_report(analyze("A:5")); }) == ErrorCode::NotLieType);
}

TEST_CASE("normal subset enumeration") {
  auto sets = enumerate_normal_subsets(5);
  CHECK(sets.size() == 30);  // 2^5 - 2: everything but the empty set and {1}
  for (const auto& s : sets) CHECK_FALSE((s.size() == 1 && s[0] == 0));
  SweepOptions small;
  small.exhaustive_cap = 4;
  small.random_unions = 50;
  auto random = enumerate_normal_subsets(6, small);
  CHECK(random.size() == 50);
  CHECK(random == enumerate_normal_subsets(6, small));
}

TEST_CASE("square growth survey") {
  for (const char* spec : {"A:5", "PSL2:7"}) {
    CAPTURE(spec);
    auto D = analyze(spec);
    auto rep = square_growth_survey(D);
    CHECK(no_failures(rep));
    CHECK(rep.records.size() == (std::size_t{1} << D.CT.count()) - 2 + 1);
    CHECK(rep.records.back().check == "survey_min_epsilon");
    CHECK(rep.records.back().status == Status::Info);
  }
  auto D = analyze("A:5");
  auto rep = square_growth_survey(D);
  // A = G \ {1} is the mask with every nonidentity class.
  bool found = false;
  for (const auto& r : rep.records)
    if (r.inputs == "A=[1,2,3,4]") {
      found = true;
      CHECK(r.note == "coverage");
    }
  CHECK(found);
}

TEST_CASE("large symmetric normal sets") {
  auto D = analyze("A:5");
  auto rep = pyber_report(D);
  CHECK_FALSE(rep.records.empty());
  for (const auto& r : rep.records) CHECK(r.status == Status::Info);
  bool whole = false;
  for (const auto& r : rep.records)
    if (r.inputs.rfind("A=[0,1,2,3,4] ", 0) == 0) {
      whole = true;
      CHECK(r.note == "A^2=G");
    }
  CHECK(whole);
  auto P = analyze("PSL2:13");
  auto rp = pyber_report(P);
  // Independent census: symmetric unions above n / log2 n.
  std::size_t expected = 0;
  const double threshold = 1092.0 / std::log2(1092.0);
  for (const auto& s : enumerate_normal_subsets(P.CT.count())) {
    auto A = cls(P, s);
    bool symmetric = true;
    for (auto c : s) symmetric = symmetric && A.contains_class(P.CT.inverse_class[static_cast<std::size_t>(c)]);
    if (symmetric && static_cast<double>(A.size()) > threshold) ++expected;
  }
  CHECK(rp.records.size() == expected);
  CHECK(expected > 0);
}

TEST_CASE("word growth") {
  auto D = analyze("A:5");
  auto x = parse_word("x");
  auto same = word_growth_report(D, x, x);
  for (const auto& r : same.records)
    if (r.check == "words") CHECK(r.lhs == doctest::Approx(0.0).epsilon(1e-12));

  auto sq = parse_word("xx");
  auto rep = word_growth_report(D, sq, sq);
  CHECK(no_failures(rep));
  CHECK(rep.records[0].check == "word_image");
  CHECK(rep.records[0].lhs == 45);

  auto P = analyze("PSL2:7");
  CHECK(no_failures(word_growth_report(P, sq, parse_word("xyXY"))));
}
