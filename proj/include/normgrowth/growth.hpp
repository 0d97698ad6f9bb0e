#pragma once

#include <cstdint>
#include <vector>

#include "normgrowth/check.hpp"
#include "normgrowth/group_spec.hpp"
#include "normgrowth/subset.hpp"

namespace normgrowth {

Subset product_set(const FiniteGroup& G, const Subset& A, const Subset& B);

/// Exact P_{A,B}(g) = count / total with total = |A||B|.
struct Probability {
  std::int64_t count = 0;
  std::int64_t total = 1;
  double value() const { return static_cast<double>(count) / static_cast<double>(total); }
};

Probability pab_exact(const FiniteGroup& G, const Subset& A, const Subset& B, ElementIndex g);

/// P_{A,B} on a representative of class k via the Frobenius formula:
/// (1/|A||B|) sum_{i in A, j in B} |C_i||C_j|/n sum_chi chi(g_i) chi(g_j) conj(chi(g_k)) / chi(1).
double pab_frobenius(const CharacterTable& tab, const NormalSubset& A, const NormalSubset& B, std::size_t k);

/// |AB| >= n / (1 + R^2 (n/|B| - 1)) >= min(n/2, |B| / (2R^2)), R = min_{g in A} R(g).
CheckResult check_2step(const GroupData& D, const NormalSubset& A, const Subset& B);

/// If |A||B| >= R(g_k)^2 n^2 then the class of g_k lies in AB; SKIPPED when
/// the size condition does not hold. `k` must not be the identity class.
CheckResult check_gowers2(const GroupData& D, const NormalSubset& A, const NormalSubset& B, std::size_t k);

/// |P_{A,B}(g) - 1/n| < R(g) / sqrt(|A||B|), one record per class.
/// Exact equality hits are flagged in the note instead of failing.
GrowthReport check_asymp(const GroupData& D, const NormalSubset& A, const NormalSubset& B);

/// With R = max_{g != 1} R(g): if |A| >= R n then G \ {1} lies in A^2, else
/// |A^2| >= |A| / (2R). Throws TrivialSubset for A empty or {1}.
CheckResult dichotomy_check(const GroupData& D, const NormalSubset& A);

struct GluckReport {
  double r_max = 0.0;
  std::uint32_t q = 0;
  double scaled = 0.0;  // sqrt(q) * r_max
  bool nineteen_twentieths_ok = false;
};

/// Throws NotLieType for groups without a defining field.
GluckReport gluck_report(const GroupData& D);

struct SweepOptions {
  std::size_t exhaustive_cap = 4096;
  std::size_t random_unions = 10000;
  std::uint64_t seed = 1;
};

/// Class-index sets of nontrivial normal subsets: every union (with and
/// without the identity class) when 2^(k-1) <= exhaustive_cap, otherwise
/// `random_unions` seeded random unions.
std::vector<std::vector<ClassIndex>> enumerate_normal_subsets(std::size_t class_count, const SweepOptions& options = {});

/// For each nontrivial normal A: coverage of G \ {1} by A^2, or
/// eps(A) = log|A^2| / log|A| - 1 which must be positive.
GrowthReport square_growth_survey(const GroupData& D, const SweepOptions& options = {});

/// Symmetric normal A with |A| > n / log2 n: records whether A^2 = G.
/// Report only (INFO records).
GrowthReport pyber_report(const GroupData& D, const SweepOptions& options = {});

/// Word images w1(G), w2(G) and, for every nonidentity class, the deviation
/// |P(g) n - 1| against n R(g) / sqrt(|w1(G)||w2(G)|).
GrowthReport word_growth_report(const GroupData& D, const Word& w1, const Word& w2, std::uint64_t eval_cap = 20'000'000);

}  // namespace normgrowth
