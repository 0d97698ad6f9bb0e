#include "normgrowth/growth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "normgrowth/error.hpp"
#include "normgrowth/kernels.hpp"

namespace normgrowth {

namespace {

constexpr double kSlack = 1e-9;
constexpr double kStrictSlack = 1e-12;

std::string classes_str(const NormalSubset& S) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < S.classes().size(); ++i) os << (i ? "," : "") << S.classes()[i];
  os << "]";
  return os.str();
}

std::string subset_str(const Subset& s) {
  std::ostringstream os;
  os << "|B|=" << s.size() << " {";
  bool first = true;
  for (auto g : s.elements()) {
    os << (first ? "" : ",") << g;
    first = false;
  }
  os << "}";
  return os.str();
}

CheckResult record(const GroupData& D, std::string check, std::string inputs) {
  CheckResult r;
  r.check = std::move(check);
  r.group = D.label();
  r.n = D.n();
  r.inputs = std::move(inputs);
  return r;
}

bool covers_nonidentity(const Subset& s) {
  for (std::size_t g = 1; g < s.universe(); ++g)
    if (!s.contains(static_cast<ElementIndex>(g))) return false;
  return true;
}

}  // namespace

Subset product_set(const FiniteGroup& G, const Subset& A, const Subset& B) {
  return kernels::parallel::product_set(G, A, B);
}

Probability pab_exact(const FiniteGroup& G, const Subset& A, const Subset& B, ElementIndex g) {
  Probability p;
  p.total = static_cast<std::int64_t>(A.size()) * static_cast<std::int64_t>(B.size());
  // ab = g  <=>  b = a^-1 g
  for (auto a : A.elements()) p.count += B.contains(G.mul(G.inverse(a), g)) ? 1 : 0;
  return p;
}

double pab_frobenius(const CharacterTable& tab, const NormalSubset& A, const NormalSubset& B, std::size_t k) {
  if (A.empty() || B.empty()) throw Error(ErrorCode::EmptySubset, "pab_frobenius needs nonempty subsets");
  const double n = static_cast<double>(tab.n);
  double total = 0.0;
  for (auto i : A.classes())
    for (auto j : B.classes()) {
      auto ii = static_cast<std::size_t>(i), jj = static_cast<std::size_t>(j);
      Complex acc = 0.0;
      for (std::size_t r = 0; r < tab.rows(); ++r)
        acc += tab.values[r][ii] * tab.values[r][jj] * std::conj(tab.values[r][k]) / tab.degrees[r];
      total += static_cast<double>(tab.class_sizes[ii] * tab.class_sizes[jj]) / n * acc.real();
    }
  return total / (static_cast<double>(A.size()) * static_cast<double>(B.size()));
}

CheckResult check_2step(const GroupData& D, const NormalSubset& A, const Subset& B) {
  if (A.empty() || B.empty()) throw Error(ErrorCode::EmptySubset, "check_2step needs nonempty subsets");
  const double n = static_cast<double>(D.n());
  const double R = r_extremes(D.tab, A).min;
  const double b = static_cast<double>(B.size());
  const double ab = static_cast<double>(product_set(D.G, A.elements(), B).size());
  const double bound = n / (1.0 + R * R * (n / b - 1.0));
  const double floor = std::min(n / 2.0, b / (2.0 * R * R));

  auto r = record(D, "2step", "A=" + classes_str(A) + " " + subset_str(B));
  r.lhs = ab;
  r.rhs = bound;
  r.margin = std::min(ab - bound, bound - floor);
  r.status = (ab >= bound - kSlack && bound >= floor - kSlack) ? Status::Pass : Status::Fail;
  r.note = "R=" + std::to_string(R) + " min_bound=" + std::to_string(floor);
  return r;
}

CheckResult check_gowers2(const GroupData& D, const NormalSubset& A, const NormalSubset& B, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::ParseError, "check_gowers2 needs a nonidentity class");
  const double n = static_cast<double>(D.n());
  const double R = character_ratio(D.tab, k);
  const double sizes = static_cast<double>(A.size()) * static_cast<double>(B.size());
  const double need = R * R * n * n;

  auto r = record(D, "gowers2", "A=" + classes_str(A) + " B=" + classes_str(B) + " k=" + std::to_string(k));
  r.lhs = sizes;
  r.rhs = need;
  r.margin = sizes - need;
  if (sizes < need * (1.0 - kSlack)) {
    r.status = Status::Skipped;
    r.note = "size condition not met";
    return r;
  }
  auto AB = product_set(D.G, A.elements(), B.elements());
  bool covered = std::all_of(D.CT.classes[k].begin(), D.CT.classes[k].end(), [&](ElementIndex g) { return AB.contains(g); });
  r.status = covered ? Status::Pass : Status::Fail;
  r.note = covered ? "class covered" : "class not covered";
  return r;
}

GrowthReport check_asymp(const GroupData& D, const NormalSubset& A, const NormalSubset& B) {
  if (A.empty() || B.empty()) throw Error(ErrorCode::EmptySubset, "check_asymp needs nonempty subsets");
  GrowthReport rep;
  rep.name = "asymp";
  const double n = static_cast<double>(D.n());
  const double total = static_cast<double>(A.size()) * static_cast<double>(B.size());
  auto counts = kernels::parallel::pair_counts(D.G, A.elements(), B.elements());
  for (std::size_t k = 0; k < D.CT.count(); ++k) {
    const double p = static_cast<double>(counts[static_cast<std::size_t>(D.CT.rep[k])]) / total;
    auto r = record(D, "asymp", "A=" + classes_str(A) + " B=" + classes_str(B) + " k=" + std::to_string(k));
    r.lhs = std::abs(p - 1.0 / n);
    r.rhs = character_ratio(D.tab, k) / std::sqrt(total);
    r.margin = r.rhs - r.lhs;
    r.status = r.lhs < r.rhs + kStrictSlack ? Status::Pass : Status::Fail;
    if (std::abs(r.lhs - r.rhs) <= kStrictSlack) r.note = "equality";
    rep.records.push_back(std::move(r));
  }
  return rep;
}

CheckResult dichotomy_check(const GroupData& D, const NormalSubset& A) {
  if (A.empty() || (A.size() == 1 && A.contains_class(0)))
    throw Error(ErrorCode::TrivialSubset, "dichotomy needs a nontrivial normal subset");
  const double n = static_cast<double>(D.n());
  const double R = max_nonidentity_ratio(D.tab);
  const double a = static_cast<double>(A.size());
  auto A2 = product_set(D.G, A.elements(), A.elements());

  auto r = record(D, "dichotomy", "A=" + classes_str(A));
  if (a >= R * n) {
    std::size_t hit = A2.size() - (A2.contains(0) ? 1 : 0);
    r.lhs = static_cast<double>(hit);
    r.rhs = n - 1.0;
    r.margin = r.lhs - r.rhs;
    r.status = covers_nonidentity(A2) ? Status::Pass : Status::Fail;
    r.note = "branch=cover";
  } else {
    r.lhs = static_cast<double>(A2.size());
    r.rhs = a / (2.0 * R);
    r.margin = r.lhs - r.rhs;
    r.status = r.lhs >= r.rhs - kSlack ? Status::Pass : Status::Fail;
    r.note = "branch=growth";
  }
  return r;
}

GluckReport gluck_report(const GroupData& D) {
  if (!D.G.field_order()) throw Error(ErrorCode::NotLieType, D.label() + " was not built by a PSL constructor");
  GluckReport g;
  g.q = *D.G.field_order();
  g.r_max = max_nonidentity_ratio(D.tab);
  g.scaled = std::sqrt(static_cast<double>(g.q)) * g.r_max;
  g.nineteen_twentieths_ok = g.r_max <= 19.0 / 20.0 + kSlack;
  return g;
}

std::vector<std::vector<ClassIndex>> enumerate_normal_subsets(std::size_t class_count, const SweepOptions& options) {
  std::vector<std::vector<ClassIndex>> out;
  if (class_count == 0) return out;
  auto from_mask = [&](std::uint64_t mask) {
    std::vector<ClassIndex> cls;
    for (std::size_t c = 0; c < class_count; ++c)
      if (mask >> c & 1U) cls.push_back(static_cast<ClassIndex>(c));
    return cls;
  };
  const bool exhaustive = class_count - 1 < 63 && (std::uint64_t{1} << (class_count - 1)) <= options.exhaustive_cap;
  if (exhaustive) {
    const std::uint64_t limit = std::uint64_t{1} << class_count;
    for (std::uint64_t mask = 2; mask < limit; ++mask) out.push_back(from_mask(mask));
    return out;
  }
  std::mt19937_64 rng(options.seed);
  std::bernoulli_distribution coin(0.5);
  while (out.size() < options.random_unions) {
    std::vector<ClassIndex> cls;
    for (std::size_t c = 0; c < class_count; ++c)
      if (coin(rng)) cls.push_back(static_cast<ClassIndex>(c));
    if (cls.empty() || (cls.size() == 1 && cls[0] == 0)) continue;
    out.push_back(std::move(cls));
  }
  return out;
}

GrowthReport square_growth_survey(const GroupData& D, const SweepOptions& options) {
  GrowthReport rep;
  rep.name = "survey";
  double min_eps = std::numeric_limits<double>::infinity();
  for (const auto& cls : enumerate_normal_subsets(D.CT.count(), options)) {
    auto A = NormalSubset::from_classes(D.CT, cls);
    auto A2 = product_set(D.G, A.elements(), A.elements());
    auto r = record(D, "survey", "A=" + classes_str(A));
    r.rhs = 0.0;
    if (covers_nonidentity(A2)) {
      r.lhs = 0.0;
      r.margin = 0.0;
      r.status = Status::Pass;
      r.note = "coverage";
    } else {
      const double a = static_cast<double>(A.size());
      const double eps = a > 1.0 ? std::log(static_cast<double>(A2.size())) / std::log(a) - 1.0
                                 : (A2.size() > 1 ? std::numeric_limits<double>::infinity() : 0.0);
      min_eps = std::min(min_eps, eps);
      r.lhs = eps;
      r.margin = eps;
      r.status = eps > 0.0 ? Status::Pass : Status::Fail;
      r.note = "epsilon";
    }
    rep.records.push_back(std::move(r));
  }
  auto summary = record(D, "survey_min_epsilon", is_simple_label(D.label()) ? "simple" : "not on simple-group whitelist");
  summary.lhs = min_eps;
  summary.margin = min_eps;
  summary.status = Status::Info;
  rep.records.push_back(std::move(summary));
  return rep;
}

GrowthReport pyber_report(const GroupData& D, const SweepOptions& options) {
  GrowthReport rep;
  rep.name = "pyber";
  const double n = static_cast<double>(D.n());
  const double threshold = n / std::log2(n);
  for (const auto& cls : enumerate_normal_subsets(D.CT.count(), options)) {
    auto A = NormalSubset::from_classes(D.CT, cls);
    if (!A.symmetric() || static_cast<double>(A.size()) <= threshold) continue;
    auto A2 = product_set(D.G, A.elements(), A.elements());
    auto r = record(D, "pyber", "A=" + classes_str(A) + " |A|=" + std::to_string(A.size()));
    r.lhs = static_cast<double>(A2.size());
    r.rhs = n;
    r.margin = r.lhs - r.rhs;
    r.status = Status::Info;
    r.note = A2.size() == D.n() ? "A^2=G" : "A^2!=G";
    rep.records.push_back(std::move(r));
  }
  return rep;
}

GrowthReport word_growth_report(const GroupData& D, const Word& w1, const Word& w2, std::uint64_t eval_cap) {
  GrowthReport rep;
  rep.name = "words";
  const double n = static_cast<double>(D.n());
  auto I1 = NormalSubset::from_subset(D.CT, word_image(D.G, w1, eval_cap));
  auto I2 = NormalSubset::from_subset(D.CT, word_image(D.G, w2, eval_cap));
  auto image_record = [&](const Word& w, const NormalSubset& img) {
    auto r = record(D, "word_image", "w=" + w.text);
    r.lhs = static_cast<double>(img.size());
    r.rhs = n;
    r.margin = r.lhs / n;
    r.status = Status::Info;
    r.note = "ratio=" + std::to_string(r.lhs / n);
    rep.records.push_back(std::move(r));
  };
  image_record(w1, I1);
  image_record(w2, I2);
  const double total = static_cast<double>(I1.size()) * static_cast<double>(I2.size());
  auto counts = kernels::parallel::pair_counts(D.G, I1.elements(), I2.elements());
  for (std::size_t k = 1; k < D.CT.count(); ++k) {
    const double p = static_cast<double>(counts[static_cast<std::size_t>(D.CT.rep[k])]) / total;
    auto r = record(D, "words", "w1=" + w1.text + " w2=" + w2.text + " k=" + std::to_string(k));
    r.lhs = std::abs(p * n - 1.0);
    r.rhs = n * character_ratio(D.tab, k) / std::sqrt(total);
    r.margin = r.rhs - r.lhs;
    r.status = r.lhs < r.rhs + n * kStrictSlack ? Status::Pass : Status::Fail;
    if (std::abs(r.lhs - r.rhs) <= n * kStrictSlack) r.note = "equality";
    rep.records.push_back(std::move(r));
  }
  return rep;
}

}  // namespace normgrowth
