#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "normgrowth/classes.hpp"
#include "normgrowth/group.hpp"

namespace normgrowth {

using Complex = std::complex<double>;

/// a[i][j][k] = number of pairs (x, y) in C_i x C_j with xy = rep(C_k).
struct ClassMultTensor {
  std::size_t k = 0;
  std::vector<std::int64_t> a;

  std::int64_t operator()(std::size_t i, std::size_t j, std::size_t c) const { return a[(i * k + j) * k + c]; }
};

ClassMultTensor class_mult_tensor(const FiniteGroup& G, const ClassTable& CT);

/// Irreducible characters evaluated on class representatives. Row 0 is the
/// trivial character; rows are ordered by degree, then by real parts.
struct CharacterTable {
  std::string group_label;
  std::size_t n = 0;
  std::vector<std::size_t> class_sizes;
  std::vector<std::uint64_t> class_orders;
  std::vector<std::vector<Complex>> values;
  std::vector<double> degrees;
  double residual = 0.0;
  /// Largest distance of a raw (pre-rounding) degree from an integer.
  double degree_deviation = 0.0;

  std::size_t rows() const noexcept { return values.size(); }
  std::size_t classes() const noexcept { return class_sizes.size(); }
  int degree(std::size_t r) const { return static_cast<int>(std::lround(degrees[r])); }
};

struct DixonOptions {
  std::uint64_t seed = 1;
  int max_retries = 20;
  double collision_tol = 1e-6;
  double integrality_tol = 1e-4;
};

/// Numeric Burnside–Dixon: diagonalizes a random real combination of the
/// class matrices (M_i)_{jk} = a[i][j][k]. Each eigenvector, scaled so its
/// identity coordinate is 1, is the central character omega(C_j) of one
/// irreducible; then chi(1)^2 = n / sum_j |omega_j|^2 / |C_j| and
/// chi(rep_j) = chi(1) omega_j / |C_j|.
///
/// Throws DegenerateSpectrum when every attempt has colliding eigenvalues and
/// NonIntegralDegree when a recovered degree is not close to an integer.
CharacterTable burnside_dixon_numeric(const ClassMultTensor& T, const std::vector<std::size_t>& sizes, std::size_t n,
                                      const DixonOptions& options = {});

/// Convenience: tensor + Burnside–Dixon + class metadata from G.
CharacterTable compute_character_table(const FiniteGroup& G, const ClassTable& CT, const DixonOptions& options = {});

/// Maximum deviation over all row and column orthogonality relations.
double verify_orthogonality(const CharacterTable& tab);

int min_nontrivial_degree(const CharacterTable& tab);

/// R(g) for g in class j: max over nontrivial rows of |chi(g)| / chi(1).
double character_ratio(const CharacterTable& tab, std::size_t j);

struct RatioExtremes {
  double min = 0.0;
  double max = 0.0;
};
RatioExtremes r_extremes(const CharacterTable& tab, const NormalSubset& S);

/// max of R(g) over nonidentity classes.
double max_nonidentity_ratio(const CharacterTable& tab);

void save_table(const CharacterTable& tab, const std::filesystem::path& path);
/// Throws SchemaError for malformed documents and OrthogonalityError when the
/// recomputed residual exceeds `max_residual`.
CharacterTable load_table(const std::filesystem::path& path, double max_residual = 1e-6);

std::string table_to_json(const CharacterTable& tab);
CharacterTable table_from_json(const std::string& text, double max_residual = 1e-6);

}  // namespace normgrowth
