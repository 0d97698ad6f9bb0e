#pragma once

#include <cstdint>
#include <vector>

namespace normgrowth {

/// GF(q) with q = p^e. Elements are encoded as integers 0..q-1 whose base-p
/// digits are the coefficients of a polynomial in the generator x (lowest
/// degree first), reduced modulo a fixed Conway polynomial. For e == 1 this is
/// plain arithmetic mod p.
class FiniteField {
public:
  using Elem = std::uint32_t;

  /// Throws Error(NotPrimePower) if q is not a prime power, and
  /// Error(CapExceeded) for prime powers without a hard-coded polynomial.
  explicit FiniteField(std::uint32_t q);

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return e_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  /// Multiplicative inverse; a must be nonzero.
  Elem inv(Elem a) const { return inv_[a]; }

  /// Basis {1, x, ..., x^(e-1)} of GF(q) over GF(p).
  std::vector<Elem> additive_basis() const;

  /// Monic reduction polynomial, lowest coefficient first (length e+1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

private:
  std::uint32_t q_, p_, e_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_;
};

/// Returns (p, e) with q = p^e, or (0, 0) when q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power_decomposition(std::uint32_t q);

}  // namespace normgrowth
