#include "normgrowth/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fmt/format.h>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <random>

#include "normgrowth/distribution.hpp"
#include "normgrowth/error.hpp"
#include "normgrowth/growth.hpp"
#include "normgrowth/spectral.hpp"

namespace normgrowth {

Profile parse_profile(std::string_view text) {
  if (text == "quick") return Profile::Quick;
  if (text == "full") return Profile::Full;
  throw Error(ErrorCode::ParseError, "profile must be quick or full");
}

std::string_view to_string(Profile p) { return p == Profile::Quick ? "quick" : "full"; }

bool AcceptanceRun::passed() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.pass; });
}

namespace {

// Pinned thresholds.
constexpr double kSpecchiEqualityTol = 1e-6;
constexpr double kSpecchiInequalityTol = 1e-6;
constexpr double kFrobeniusRelTol = 1e-6;
constexpr double kOrthogonalityTol = 1e-8;
constexpr double kDegreeTol = 1e-6;
constexpr double kWeightedLambdaTol = 1e-8;
constexpr double kCriterion1Seconds = 300.0;

class GroupCache {
public:
  const GroupData& get(const std::string& spec) {
    auto it = cache_.find(spec);
    if (it == cache_.end()) it = cache_.emplace(spec, std::make_unique<GroupData>(analyze(spec))).first;
    return *it->second;
  }

private:
  std::map<std::string, std::unique_ptr<GroupData>> cache_;
};

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::string detail;
  std::vector<CheckResult> records;

  void add(CheckResult r) {
    ++checks;
    if (r.failed()) pass = false;
    records.push_back(std::move(r));
  }
  void add_all(const GrowthReport& rep) {
    for (const auto& r : rep.records) add(r);
  }
  void require(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

CheckResult make_record(const GroupData& D, std::string check, std::string inputs, double lhs, double rhs, bool ok) {
  CheckResult r;
  r.check = std::move(check);
  r.group = D.label();
  r.n = D.n();
  r.inputs = std::move(inputs);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.status = ok ? Status::Pass : Status::Fail;
  return r;
}

NormalSubset random_union(const ClassTable& CT, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    std::vector<ClassIndex> cls;
    for (std::size_t c = 0; c < CT.count(); ++c)
      if (coin(rng)) cls.push_back(static_cast<ClassIndex>(c));
    if (!cls.empty()) return NormalSubset::from_classes(CT, cls);
  }
}

std::vector<NormalSubset> all_unions(const ClassTable& CT) {
  std::vector<NormalSubset> out;
  const std::uint64_t limit = std::uint64_t{1} << CT.count();
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    std::vector<ClassIndex> cls;
    for (std::size_t c = 0; c < CT.count(); ++c)
      if (mask >> c & 1U) cls.push_back(static_cast<ClassIndex>(c));
    out.push_back(NormalSubset::from_classes(CT, cls));
  }
  return out;
}

Subset random_nonempty_subset(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> density(0.0, 1.0);
  return random_subset(n, rng, density(rng));
}

std::string fmt_multiset(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

class Runner {
public:
  Runner(Profile profile, std::uint64_t seed) : profile_(profile), seed_(seed) {}

  std::vector<std::string> select(std::vector<std::string> specs) const {
    if (profile_ == Profile::Full) return specs;
    static const std::vector<std::string> quick = {"A:5", "S:5", "PSL2:7"};
    std::erase_if(specs, [](const std::string& s) { return std::find(quick.begin(), quick.end(), s) == quick.end(); });
    return specs;
  }

  std::mt19937_64 rng_for(int criterion, const std::string& spec) const {
    std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                      static_cast<std::uint32_t>(criterion), static_cast<std::uint32_t>(std::hash<std::string>{}(spec))};
    return std::mt19937_64(seq);
  }

  const GroupData& group(const std::string& spec) { return cache_.get(spec); }

  // 1. lambda_direct == lambda_normal on every nonidentity class.
  Outcome specchi_equality() {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const auto& spec : select({"A:5", "S:5", "PSL2:7", "PSL2:11"})) {
      const auto& D = group(spec);
      for (std::size_t c = 1; c < D.CT.count(); ++c) {
        auto S = NormalSubset::from_classes(D.CT, {static_cast<ClassIndex>(c)});
        auto cay = make_cayley(D.G, D.CT, S);
        double direct = lambda_direct(cay).lambda;
        double chi = lambda_normal(D.tab, S);
        double dev = std::abs(direct - chi);
        worst = std::max(worst, dev);
        o.add(make_record(D, "specchi_equality", "class=" + std::to_string(c), dev, kSpecchiEqualityTol,
                          dev <= kSpecchiEqualityTol));
      }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs <= kCriterion1Seconds, fmt::format("runtime {:.1f}s exceeds {:.0f}s", secs, kCriterion1Seconds));
    o.detail += fmt::format("{}max |direct - character| = {:.3e}", o.detail.empty() ? "" : "; ", worst);
    return o;
  }

  // 2. lambda_direct <= max_{g in S} R(g) on random unions.
  Outcome specchi_inequality() {
    Outcome o;
    double worst = -1.0;
    SpectralOptions opts;
    opts.check_commutation = false;
    for (const auto& spec : select({"A:5", "S:5", "PSL2:7", "PSL2:11"})) {
      const auto& D = group(spec);
      auto rng = rng_for(2, spec);
      for (int t = 0; t < 200; ++t) {
        auto S = random_union(D.CT, rng);
        double direct = lambda_direct(make_cayley(D.G, D.CT, S), opts).lambda;
        double bound = r_extremes(D.tab, S).max;
        worst = std::max(worst, direct - bound);
        o.add(make_record(D, "specchi_inequality", "trial=" + std::to_string(t), direct, bound + kSpecchiInequalityTol,
                          direct <= bound + kSpecchiInequalityTol));
      }
    }
    o.detail = fmt::format("max (direct - bound) = {:.3e}", worst);
    return o;
  }

  // 3. Two-step growth for every normal A and 100 random B.
  Outcome two_step() {
    Outcome o;
    for (const auto& spec : select({"A:5", "PSL2:7"})) {
      const auto& D = group(spec);
      auto rng = rng_for(3, spec);
      for (const auto& A : all_unions(D.CT))
        for (int t = 0; t < 100; ++t) o.add(check_2step(D, A, random_nonempty_subset(D.n(), rng)));
    }
    return o;
  }

  // 4. Gowers' trick for two subsets.
  Outcome gowers2() {
    Outcome o;
    std::size_t applied = 0;
    auto run = [&](const GroupData& D, const std::vector<NormalSubset>& sets) {
      for (const auto& A : sets)
        for (const auto& B : sets)
          for (std::size_t k = 1; k < D.CT.count(); ++k) {
            auto r = check_gowers2(D, A, B, k);
            if (r.status != Status::Skipped) ++applied;
            o.add(std::move(r));
          }
    };
    for (const auto& spec : select({"A:5"})) run(group(spec), all_unions(group(spec).CT));
    for (const auto& spec : select({"PSL2:7", "PSL2:11"})) {
      const auto& D = group(spec);
      std::vector<NormalSubset> single;
      for (std::size_t c = 0; c < D.CT.count(); ++c) single.push_back(NormalSubset::from_classes(D.CT, {static_cast<ClassIndex>(c)}));
      run(D, single);
    }
    o.detail = fmt::format("{} triples met the size condition", applied);
    return o;
  }

  // 5. |P_{A,B}(g) - 1/n| < R(g)/sqrt(|A||B|).
  Outcome asymp() {
    Outcome o;
    std::size_t equalities = 0;
    auto tally = [&](const GrowthReport& rep) {
      for (const auto& r : rep.records) equalities += r.note == "equality" ? 1 : 0;
      o.add_all(rep);
    };
    for (const auto& spec : select({"A:5"})) {
      const auto& D = group(spec);
      auto sets = all_unions(D.CT);
      for (const auto& A : sets)
        for (const auto& B : sets) tally(check_asymp(D, A, B));
    }
    for (const auto& spec : select({"PSL2:7"})) {
      const auto& D = group(spec);
      auto rng = rng_for(5, spec);
      for (int t = 0; t < 1000; ++t) {
        auto A = random_union(D.CT, rng);
        auto B = random_union(D.CT, rng);
        tally(check_asymp(D, A, B));
      }
    }
    o.detail = fmt::format("{} exact-equality hits", equalities);
    return o;
  }

  // 6. Frobenius formula against brute-force pair counts.
  Outcome frobenius() {
    Outcome o;
    double worst = 0.0;
    std::vector<std::string> groups;
    for (const auto& spec : select({"A:5", "S:5", "PSL2:7", "PSL2:9", "PSL2:11", "PSL2:13", "PSL3:2", "PSL3:3"}))
      if (group(spec).n() <= 700) groups.push_back(spec);
    for (const auto& spec : groups) {
      const auto& D = group(spec);
      const std::size_t k = D.CT.count();
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          auto A = NormalSubset::from_classes(D.CT, {static_cast<ClassIndex>(i)});
          auto B = NormalSubset::from_classes(D.CT, {static_cast<ClassIndex>(j)});
          const double total = static_cast<double>(A.size() * B.size());
          for (std::size_t c = 0; c < k; ++c) {
            auto exact = pab_exact(D.G, A.elements(), B.elements(), D.CT.rep[c]);
            double count = pab_frobenius(D.tab, A, B, c) * total;
            double rel = std::abs(count - static_cast<double>(exact.count)) / std::max<double>(1.0, static_cast<double>(exact.count));
            bool ok = std::llround(count) == exact.count && rel <= kFrobeniusRelTol;
            worst = std::max(worst, rel);
            o.add(make_record(D, "frobenius", fmt::format("i={} j={} k={}", i, j, c), rel, kFrobeniusRelTol, ok));
          }
        }
    }
    o.detail = fmt::format("{} groups, max relative deviation {:.3e}", groups.size(), worst);
    return o;
  }

  // 7. Character-table certification.
  Outcome certification() {
    Outcome o;
    for (const auto& spec : select({"A:5", "S:5", "PSL2:7", "PSL2:9", "PSL2:11", "PSL2:13", "PSL3:2", "PSL3:3"})) {
      const auto& D = group(spec);
      o.add(make_record(D, "orthogonality", "residual", D.tab.residual, kOrthogonalityTol, D.tab.residual <= kOrthogonalityTol));
      o.add(make_record(D, "degree_integrality", "deviation", D.tab.degree_deviation, kDegreeTol,
                        D.tab.degree_deviation <= kDegreeTol));
      long long sum = 0;
      std::vector<int> degs;
      for (std::size_t r = 0; r < D.tab.rows(); ++r) {
        degs.push_back(D.tab.degree(r));
        sum += static_cast<long long>(degs.back()) * degs.back();
      }
      o.add(make_record(D, "sum_degree_squares", fmt_multiset(degs), static_cast<double>(sum), static_cast<double>(D.n()),
                        sum == static_cast<long long>(D.n())));
      if (spec == "A:5") o.require(fmt_multiset(degs) == "{1,3,3,4,5}", "A5 degrees " + fmt_multiset(degs));
      if (spec == "PSL2:7") o.require(fmt_multiset(degs) == "{1,3,3,6,7,8}", "PSL(2,7) degrees " + fmt_multiset(degs));
    }
    return o;
  }

  // 8. Gluck measurement: R_max <= 19/20; sqrt(q) R_max reported.
  Outcome gluck() {
    Outcome o;
    std::string table;
    for (const auto& spec : select({"PSL2:5", "PSL2:7", "PSL2:9", "PSL2:11", "PSL2:13", "PSL3:2"})) {
      const auto& D = group(spec);
      auto g = gluck_report(D);
      auto r = make_record(D, "gluck", fmt::format("q={} sqrt(q)*R_max={:.6f}", g.q, g.scaled), g.r_max, 19.0 / 20.0,
                           g.nineteen_twentieths_ok);
      o.add(std::move(r));
      table += fmt::format("{}{}: R_max={:.6f} sqrt(q)R_max={:.6f}", table.empty() ? "" : "; ", D.label(), g.r_max, g.scaled);
    }
    o.detail = table;
    return o;
  }

  // 9. Dichotomy over nontrivial normal subsets.
  Outcome dichotomy() {
    Outcome o;
    std::size_t cover = 0;
    for (const auto& spec : select({"A:5", "PSL2:7"})) {
      const auto& D = group(spec);
      for (const auto& A : all_unions(D.CT)) {
        if (A.size() == 1 && A.contains_class(0)) continue;
        auto r = dichotomy_check(D, A);
        cover += r.note == "branch=cover" ? 1 : 0;
        o.add(std::move(r));
      }
    }
    o.detail = fmt::format("{} subsets took the covering branch", cover);
    return o;
  }

  // 10. Convolution inequality, its spectral form, and the class-indicator cross-check.
  Outcome convolution() {
    Outcome o;
    double worst_cross = 0.0;
    for (const auto& spec : select({"A:5", "PSL2:7"})) {
      const auto& D = group(spec);
      const int m = min_nontrivial_degree(D.tab);
      o.require(m == 3, fmt::format("{} minimal degree {}", D.label(), m));
      auto rng = rng_for(10, spec);
      for (int t = 0; t < 1000; ++t) {
        bool sparse = t % 2 == 1;
        auto X = sparse ? random_sparse_distribution(D.n(), rng) : random_distribution(D.n(), rng);
        auto Y = sparse ? random_sparse_distribution(D.n(), rng) : random_distribution(D.n(), rng);
        o.add(check_bnp_star(D.G, m, X, Y));
      }
      for (int t = 0; t < 100; ++t) {
        auto Y = t % 2 ? random_sparse_distribution(D.n(), rng) : random_distribution(D.n(), rng);
        auto w = weighted_cayley_lambda(D.G, Y, m);
        o.add(make_record(D, "bnp_star_prime", "trial=" + std::to_string(t), w.lambda, w.bound, w.bound_holds));
      }
      for (std::size_t c = 1; c < D.CT.count(); ++c) {
        auto S = NormalSubset::from_classes(D.CT, {static_cast<ClassIndex>(c)});
        double weighted = weighted_cayley_lambda(D.G, from_subset(S.elements()), m).lambda;
        double direct = lambda_direct(make_cayley(D.G, D.CT, S)).lambda;
        double dev = std::abs(weighted - direct);
        worst_cross = std::max(worst_cross, dev);
        o.add(make_record(D, "weighted_vs_direct", "class=" + std::to_string(c), dev, kWeightedLambdaTol, dev <= kWeightedLambdaTol));
      }
    }
    o.detail = fmt::format("max |weighted - direct| = {:.3e}", worst_cross);
    return o;
  }

  // 11. Alternative two-step proposition.
  Outcome bnp_two_step() {
    Outcome o;
    for (const auto& spec : select({"A:5", "PSL2:7"})) {
      const auto& D = group(spec);
      const int m = min_nontrivial_degree(D.tab);
      auto rng = rng_for(11, spec);
      for (int t = 0; t < 500; ++t) {
        auto A = random_nonempty_subset(D.n(), rng);
        auto B = random_nonempty_subset(D.n(), rng);
        o.add(check_bnp_two_step(D.G, m, A, B));
      }
    }
    return o;
  }

  // 12. Real census.
  Outcome real_elements() {
    Outcome o;
    for (const auto& spec : select({"PSL2:5", "PSL2:7", "PSL2:9", "PSL2:11", "PSL2:13"})) {
      const auto& D = group(spec);
      auto rep = real_census(D.G, D.CT, true);
      o.add(make_record(D, "semisimple_real", "nonreal semisimple classes",
                        static_cast<double>(rep.nonreal_semisimple_classes.size()), 0.0,
                        rep.nonreal_semisimple_classes.empty()));
    }
    for (const auto& spec : select({"PSL3:3"})) {
      const auto& D = group(spec);
      auto rep = real_census(D.G, D.CT, true);
      // Independent route: search a conjugator for every element.
      std::size_t brute_real = 0;
      bool agree = true;
      for (std::size_t g = 0; g < D.n(); ++g) {
        auto gi = static_cast<ElementIndex>(g);
        ElementIndex target = D.G.inverse(gi);
        bool found = false;
        for (std::size_t h = 0; h < D.n() && !found; ++h) found = D.G.conjugate(gi, static_cast<ElementIndex>(h)) == target;
        brute_real += found ? 1 : 0;
        agree = agree && found == static_cast<bool>(D.CT.is_real[static_cast<std::size_t>(D.CT.class_of[g])]);
      }
      o.add(make_record(D, "real_census_brute_force", "real elements", static_cast<double>(rep.real_elements),
                        static_cast<double>(brute_real), agree && brute_real == rep.real_elements));
      o.add(make_record(D, "real_fraction_below_one", fmt::format("nonreal classes={}", rep.nonreal_classes.size()),
                        static_cast<double>(rep.real_elements), static_cast<double>(D.n()), rep.real_elements < D.n()));
      o.detail = fmt::format("{}: {} of {} elements real, {} nonreal classes", D.label(), rep.real_elements, D.n(),
                             rep.nonreal_classes.size());
    }
    return o;
  }

  // 13. Expander mixing lemma on every class.
  Outcome mixing() {
    Outcome o;
    for (const auto& spec : select({"A:5", "PSL2:7"})) {
      const auto& D = group(spec);
      auto rng = rng_for(13, spec);
      for (std::size_t c = 1; c < D.CT.count(); ++c) {
        auto cay = make_cayley(D.G, D.CT, NormalSubset::from_classes(D.CT, {static_cast<ClassIndex>(c)}));
        for (int t = 0; t < 500; ++t) {
          auto A = random_nonempty_subset(D.n(), rng);
          auto B = random_nonempty_subset(D.n(), rng);
          o.add(mixing_discrepancy(cay, A, B, D.tab));
        }
      }
    }
    return o;
  }

private:
  Profile profile_;
  std::uint64_t seed_;
  GroupCache cache_;
};

struct Criterion {
  int id;
  const char* title;
  Outcome (Runner::*run)();
};

const std::vector<Criterion>& criteria_list() {
  static const std::vector<Criterion> list = {
      {1, "class Cayley graphs: direct lambda equals character ratio", &Runner::specchi_equality},
      {2, "normal Cayley graphs: direct lambda <= max ratio", &Runner::specchi_inequality},
      {3, "two-step growth of a normal set times any set", &Runner::two_step},
      {4, "two-subset Gowers criterion covers the class", &Runner::gowers2},
      {5, "product distribution close to uniform", &Runner::asymp},
      {6, "Frobenius formula matches brute-force counts", &Runner::frobenius},
      {7, "character tables certified", &Runner::certification},
      {8, "character ratio bound 19/20 for PSL", &Runner::gluck},
      {9, "square growth dichotomy", &Runner::dichotomy},
      {10, "convolution inequality and spectral form", &Runner::convolution},
      {11, "degree-based two-step growth", &Runner::bnp_two_step},
      {12, "real census", &Runner::real_elements},
      {13, "expander mixing lemma", &Runner::mixing},
  };
  return list;
}

AcceptanceRun run_once(const AcceptanceOptions& options) {
  Runner runner(options.profile, options.seed);
  AcceptanceRun run;
  run.report.header.command = "acceptance:" + std::string(to_string(options.profile));
  run.report.header.group_label = "suite";
  run.report.header.seed = options.seed;
  for (const auto& c : criteria_list()) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = (runner.*c.run)();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("error: ") + e.what();
    }
    CriterionResult res{c.id, c.title, o.pass, o.checks, o.detail,
                        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()};
    if (options.progress)
      *options.progress << fmt::format("[{}] criterion {:2d}: {} ({} checks, {:.1f}s){}\n", res.pass ? "PASS" : "FAIL", res.id,
                                       res.title, res.checks, res.seconds, res.detail.empty() ? "" : " -- " + res.detail)
                        << std::flush;
    run.criteria.push_back(std::move(res));
    for (auto& r : o.records) run.report.records.push_back(std::move(r));
  }
  return run;
}

}  // namespace

AcceptanceRun run_acceptance(const AcceptanceOptions& options) {
  auto first = run_once(options);
  first.report.header.timestamp = current_timestamp();
  if (!options.check_determinism) return first;

  auto start = std::chrono::steady_clock::now();
  AcceptanceOptions again = options;
  again.progress = nullptr;
  auto second = run_once(again);
  bool same = body_text(first.report) == body_text(second.report);
  CriterionResult res{14, "identical report bodies for identical seeds", same, first.report.records.size(),
                      same ? "" : "report bodies differ between runs",
                      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()};
  if (options.progress)
    *options.progress << fmt::format("[{}] criterion {:2d}: {} ({} records compared, {:.1f}s){}\n", res.pass ? "PASS" : "FAIL",
                                     res.id, res.title, res.checks, res.seconds, res.detail.empty() ? "" : " -- " + res.detail)
                      << std::flush;
  first.criteria.push_back(std::move(res));
  return first;
}

}  // namespace normgrowth
