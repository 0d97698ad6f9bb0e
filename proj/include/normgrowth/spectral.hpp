#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "normgrowth/character_table.hpp"
#include "normgrowth/check.hpp"
#include "normgrowth/classes.hpp"
#include "normgrowth/group.hpp"
#include "normgrowth/subset.hpp"

namespace normgrowth {

/// Cayley digraph Cay(G, S): arc g -> h iff g^-1 h in S. Arcs are never
/// materialized; membership in S decides them.
struct CayleySpec {
  const FiniteGroup* group = nullptr;
  Subset connection;
  std::optional<NormalSubset> normal_set;  // present iff S is a union of classes

  bool normal() const noexcept { return normal_set.has_value(); }
  std::size_t valency() const noexcept { return connection.size(); }
};

/// Throws EmptySubset for an empty connection set.
CayleySpec make_cayley(const FiniteGroup& G, const ClassTable& CT, const Subset& S);
CayleySpec make_cayley(const FiniteGroup& G, const ClassTable& CT, const NormalSubset& S);

/// lambda_chi = sum_{j in S} |C_j| chi(g_j) / (chi(1) |S|), one per row.
std::vector<Complex> eigenvalues_normal(const CharacterTable& tab, const NormalSubset& S);
/// max over nontrivial chi of |lambda_chi|.
double lambda_normal(const CharacterTable& tab, const NormalSubset& S);
/// Throws NotNormal when the connection set is not a union of classes.
double lambda_normal(const CharacterTable& tab, const CayleySpec& spec);

struct SpectralOptions {
  std::size_t dense_cap = 2500;
  double tolerance = 1e-9;
  int max_iterations = 100000;
  std::uint64_t seed = 1;
  /// Dense path only: measure max |MM^t - M^tM| for normal connection sets.
  bool check_commutation = true;
};

struct DirectLambda {
  double lambda = 0.0;
  bool dense = true;
  int iterations = 0;
  /// NaN unless the commutation check ran.
  double commutator_residual = 0.0;
};

/// sqrt of the second largest eigenvalue of MM^t for the random-walk matrix
/// M. Dense symmetric eigensolve up to `dense_cap` vertices, otherwise power
/// iteration on the complement of the all-ones vector (NoConvergence when the
/// iteration limit is hit).
DirectLambda lambda_direct(const CayleySpec& spec, const SpectralOptions& options = {});

/// N(B) = B S.
Subset neighborhood(const CayleySpec& spec, const Subset& B);

/// |N(B)| >= |B| / ((1 - alpha) lambda^2 + alpha), alpha = |B|/n.
CheckResult check_vertex_expansion(const CayleySpec& spec, const Subset& B, const CharacterTable& tab);

/// |e(A,B)/(dn) - alpha beta| <= lambda sqrt(alpha(1-alpha) beta(1-beta)).
CheckResult mixing_discrepancy(const CayleySpec& spec, const Subset& A, const Subset& B, const CharacterTable& tab);

struct SpectralReport {
  /// NaN (and no eigenvalues) when the connection set is not normal.
  double lambda_char = 0.0;
  double lambda_direct = 0.0;
  std::vector<Complex> eigenvalues;
  bool dense = true;
  int iterations = 0;
  double commutator_residual = 0.0;
};

SpectralReport spectral_report(const CayleySpec& spec, const CharacterTable& tab, const SpectralOptions& options = {});

}  // namespace normgrowth
