#include "normgrowth/finite_field.hpp"

#include <map>
#include <string>

#include "normgrowth/error.hpp"

namespace normgrowth {

namespace {

// Conway polynomials, lowest coefficient first, leading 1 included.
const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>& conway_table() {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{5, 2}, {2, 4, 1}},
      {{7, 2}, {3, 6, 1}},
  };
  return table;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::pair<std::uint32_t, std::uint32_t> prime_power_decomposition(std::uint32_t q) {
  if (q < 2) return {0, 0};
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  if (!is_prime(p)) return {0, 0};
  std::uint32_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return {0, 0};
  return {p, e};
}

FiniteField::FiniteField(std::uint32_t q) : q_(q) {
  auto [p, e] = prime_power_decomposition(q);
  if (p == 0) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  p_ = p;
  e_ = e;
  if (e == 1) {
    modulus_ = {0, 1};
  } else {
    auto it = conway_table().find({p, e});
    if (it == conway_table().end())
      throw Error(ErrorCode::CapExceeded, "no reduction polynomial for GF(" + std::to_string(q) + ")");
    modulus_ = it->second;
  }

  auto digits = [&](Elem a) {
    std::vector<std::uint32_t> d(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  };
  auto encode = [&](const std::vector<std::uint32_t>& d) {
    Elem a = 0;
    for (std::uint32_t i = e_; i-- > 0;) a = a * p_ + d[i];
    return a;
  };

  add_.resize(std::size_t{q_} * q_);
  mul_.resize(std::size_t{q_} * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (Elem a = 0; a < q_; ++a) {
    auto da = digits(a);
    std::vector<std::uint32_t> dn(e_);
    for (std::uint32_t i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = encode(dn);
    for (Elem b = 0; b < q_; ++b) {
      auto db = digits(b);
      std::vector<std::uint32_t> s(e_);
      for (std::uint32_t i = 0; i < e_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = encode(s);

      std::vector<std::uint32_t> prod(2 * e_, 0);
      for (std::uint32_t i = 0; i < e_; ++i)
        for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (std::uint32_t k = 2 * e_; k-- > e_;) {
        std::uint32_t c = prod[k];
        if (c == 0) continue;
        // x^e = -(m_0 + m_1 x + ... + m_{e-1} x^{e-1})
        for (std::uint32_t i = 0; i < e_; ++i)
          prod[k - e_ + i] = (prod[k - e_ + i] + (p_ - c) * modulus_[i]) % p_;
        prod[k] = 0;
      }
      prod.resize(e_);
      mul_[a * q_ + b] = encode(prod);
    }
  }
  for (Elem a = 1; a < q_; ++a)
    for (Elem b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
}

std::vector<FiniteField::Elem> FiniteField::additive_basis() const {
  std::vector<Elem> basis;
  Elem b = 1;
  for (std::uint32_t i = 0; i < e_; ++i, b *= p_) basis.push_back(b);
  return basis;
}

}  // namespace normgrowth
