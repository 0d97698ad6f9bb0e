#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "normgrowth/classes.hpp"
#include "normgrowth/group.hpp"
#include "normgrowth/subset.hpp"

// Data-parallel inner loops. `serial` is the reference implementation the
// tests compare against; `parallel` is the OpenMP version used by the library.
namespace normgrowth::kernels {

/// Flat index of a[i][j][k] in a class multiplication tensor with `k` classes.
inline std::size_t tensor_index(std::size_t k, std::size_t i, std::size_t j, std::size_t c) {
  return (i * k + j) * k + c;
}

namespace serial {

Subset product_set(const FiniteGroup& G, const Subset& A, const Subset& B);
/// counts[g] = |{(a, b) in A x B : ab = g}|
std::vector<std::int64_t> pair_counts(const FiniteGroup& G, const Subset& A, const Subset& B);
/// (X*Y)(h) = sum_g X(g) Y(g^-1 h)
std::vector<double> convolve(const FiniteGroup& G, std::span<const double> X, std::span<const double> Y);
/// a[i][j][k] = |{x in C_i : x^-1 rep_k in C_j}|
std::vector<std::int64_t> class_mult_tensor(const FiniteGroup& G, const ClassTable& CT);
/// out[x] = scale * sum_s in[index[s * n + x]]
void gather_sum(std::span<const ElementIndex> index, std::size_t n, double scale, std::span<const double> in,
                std::span<double> out);
/// |{(a, b) in A x B : a^-1 b in S}|, the arc count e(A, B) of Cay(G, S).
std::int64_t arc_count(const FiniteGroup& G, const Subset& A, const Subset& B, const Subset& S);

}  // namespace serial

namespace parallel {

Subset product_set(const FiniteGroup& G, const Subset& A, const Subset& B);
std::vector<std::int64_t> pair_counts(const FiniteGroup& G, const Subset& A, const Subset& B);
std::vector<double> convolve(const FiniteGroup& G, std::span<const double> X, std::span<const double> Y);
std::vector<std::int64_t> class_mult_tensor(const FiniteGroup& G, const ClassTable& CT);
void gather_sum(std::span<const ElementIndex> index, std::size_t n, double scale, std::span<const double> in,
                std::span<double> out);
std::int64_t arc_count(const FiniteGroup& G, const Subset& A, const Subset& B, const Subset& S);

}  // namespace parallel

/// Number of OpenMP threads available (1 when built without OpenMP).
int max_threads();

}  // namespace normgrowth::kernels
