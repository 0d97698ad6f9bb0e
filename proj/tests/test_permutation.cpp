#include <doctest.h>

#include "normgrowth/error.hpp"
#include "normgrowth/finite_field.hpp"
#include "normgrowth/permutation.hpp"

using namespace normgrowth;

TEST_CASE("permutation construction validates bijectivity") {
  CHECK_NOTHROW(Permutation({2, 0, 1}));
  try {
    Permutation({0, 0, 1});
    FAIL("expected NotBijective");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotBijective);
  }
  try {
    Permutation({0, 3, 1});
    FAIL("expected NotBijective");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotBijective);
  }
}

TEST_CASE("products apply the left factor first") {
  auto a = Permutation::from_cycles("(0 1)", 3);
  auto b = Permutation::from_cycles("(1 2)", 3);
  auto ab = a * b;
  // 0 -> 1 under a, then 1 -> 2 under b.
  CHECK(ab[0] == 2);
  CHECK(ab[1] == 0);
  CHECK(ab[2] == 1);
  CHECK(ab == Permutation::from_cycles("(0 2 1)", 3));
}

TEST_CASE("inverse, identity and order") {
  auto p = Permutation::from_cycles("(0 1 2)(3 4)", 6);
  CHECK((p * p.inverse()).is_identity());
  CHECK((p.inverse() * p).is_identity());
  CHECK(p.order() == 6);
  CHECK(Permutation::identity(4).order() == 1);
  CHECK(Permutation::from_cycles("()", 3).is_identity());
}

TEST_CASE("composition is associative") {
  auto a = Permutation::from_cycles("(0 1 2 3 4)", 5);
  auto b = Permutation::from_cycles("(0 2)(1 4)", 5);
  auto c = Permutation::from_cycles("(1 2 3)", 5);
  CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("cycle notation round trip") {
  for (const char* text : {"(0 1 2)(3 4)", "(0 5)", "(1 3 2)"}) {
    auto p = Permutation::from_cycles(text, 6);
    CHECK(Permutation::from_cycles(p.to_cycles(), 6) == p);
  }
  CHECK(cycle_string_degree("(0 1)(2 7)") == 8);
  CHECK(cycle_string_degree("()") == 0);
}

TEST_CASE("malformed cycle strings") {
  for (const char* text : {"(0 1", "0 1)", "(0 x)"}) {
    try {
      Permutation::from_cycles(text, 4);
      FAIL("expected ParseError for " << text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
  try {
    Permutation::from_cycles("(0 1 0)", 3);
    FAIL("repeated point");
  } catch (const Error& e) {
    CHECK((e.code() == ErrorCode::NotBijective || e.code() == ErrorCode::ParseError));
  }
  try {
    Permutation::from_cycles("(0 5)", 3);
    FAIL("point out of range");
  } catch (const Error& e) {
    CHECK((e.code() == ErrorCode::NotBijective || e.code() == ErrorCode::ParseError));
  }
}

TEST_CASE("prime power decomposition") {
  CHECK(prime_power_decomposition(9) == std::pair<std::uint32_t, std::uint32_t>{3, 2});
  CHECK(prime_power_decomposition(13) == std::pair<std::uint32_t, std::uint32_t>{13, 1});
  CHECK(prime_power_decomposition(32) == std::pair<std::uint32_t, std::uint32_t>{2, 5});
  CHECK(prime_power_decomposition(12) == std::pair<std::uint32_t, std::uint32_t>{0, 0});
  CHECK(prime_power_decomposition(1) == std::pair<std::uint32_t, std::uint32_t>{0, 0});
}

TEST_CASE("finite fields satisfy the field axioms") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 49u}) {
    CAPTURE(q);
    FiniteField F(q);
    CHECK(F.order() == q);
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(F.add(a, 0) == a);
      CHECK(F.mul(a, 1) == a);
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        CHECK(F.sub(F.add(a, b), b) == a);
        // No zero divisors: the reduction polynomial is irreducible.
        if (a != 0 && b != 0) CHECK(F.mul(a, b) != 0);
        for (std::uint32_t c = 0; c < q; c += 1 + q / 5) CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
  }
}

TEST_CASE("field construction errors") {
  try {
    FiniteField F(6);
    FAIL("6 is not a prime power");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPrimePower);
  }
  try {
    FiniteField F(81);
    FAIL("no polynomial for 81");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}
