#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cuboid/exact_arith.hpp"
#include "oracles.hpp"

using cuboid::BigInteger;
using cuboid::DomainError;
using cuboid::Rational;

namespace {

BigInteger big(const char* s) { return BigInteger::parse(s); }

BigInteger random_big(std::mt19937_64& rng, int limbs) {
  BigInteger v(0);
  for (int i = 0; i < limbs; ++i) {
    v = v * BigInteger(1L << 31) * BigInteger(1L << 31) + BigInteger(static_cast<long>(rng() >> 2));
  }
  return v;
}

}  // namespace

TEST_CASE("integer_sqrt examples") {
  CHECK(cuboid::integer_sqrt(0) == BigInteger(0));
  // 267 * 267 = 71289
  CHECK(BigInteger(267) * BigInteger(267) == BigInteger(71289));
  CHECK(cuboid::integer_sqrt(71289) == BigInteger(267));
  // 270^2 = 72900 <= 73225 < 73441 = 271^2
  CHECK(oracle::isqrt_bisect(73225) == 270);
  CHECK(cuboid::integer_sqrt(73225) == BigInteger(270));
  CHECK(cuboid::integer_sqrt(1) == BigInteger(1));
  CHECK(cuboid::integer_sqrt(3) == BigInteger(1));
  CHECK(cuboid::integer_sqrt(4) == BigInteger(2));
}

TEST_CASE("integer_sqrt rejects negative input") {
  CHECK_THROWS_AS(cuboid::integer_sqrt(-1), DomainError);
}

TEST_CASE("integer_sqrt bracket property and GMP oracle") {
  std::mt19937_64 rng(20240101);
  for (int i = 0; i < 2000; ++i) {
    const BigInteger n = random_big(rng, 1 + i % 7);
    const BigInteger r = cuboid::integer_sqrt(n);
    CHECK(r * r <= n);
    CHECK(n < (r + 1) * (r + 1));
    mpz_class expected;
    mpz_sqrt(expected.get_mpz_t(), n.mpz().get_mpz_t());
    CHECK(r == BigInteger(expected));
  }
  for (std::int64_t n = 0; n < 5000; ++n) {
    CHECK(cuboid::integer_sqrt(BigInteger(static_cast<long>(n))).to_int64() == oracle::isqrt_bisect(n));
  }
}

TEST_CASE("is_perfect_square examples") {
  CHECK(cuboid::is_perfect_square(71289));
  CHECK_FALSE(cuboid::is_perfect_square(73225));
  CHECK_FALSE(cuboid::is_perfect_square(-4));
  CHECK(cuboid::is_perfect_square(0));
  CHECK(cuboid::is_perfect_square(1));
}

TEST_CASE("residue filter never changes the answer") {
  using cuboid::SquareFilter;
  for (long n = -10; n < 200000; ++n) {
    const BigInteger v(n);
    const bool with = cuboid::is_perfect_square(v, SquareFilter::kEnabled);
    REQUIRE(with == cuboid::is_perfect_square(v, SquareFilter::kDisabled));
    REQUIRE(with == oracle::is_square(n));
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const BigInteger k = random_big(rng, 3);
    for (const BigInteger& v : {k * k, k * k + BigInteger(1), k * k - BigInteger(1)}) {
      CHECK(cuboid::is_perfect_square(v, SquareFilter::kEnabled) ==
            cuboid::is_perfect_square(v, SquareFilter::kDisabled));
    }
    CHECK(cuboid::is_perfect_square(k * k));
  }
}

TEST_CASE("BigInteger is exact beyond 64 bits") {
  const BigInteger two100 = big("1267650600228229401496703205376");
  CHECK((two100 + 1) * (two100 - 1) ==
        big("1606938044258990275541962092341162602522202993782792835301375"));
  CHECK(BigInteger(0).sign() == 0);
  CHECK((two100 - two100).is_zero());
  CHECK((-two100).sign() == -1);
  CHECK_THROWS_AS(BigInteger::parse("12a"), DomainError);
  CHECK_THROWS_AS(BigInteger::parse(""), DomainError);
  CHECK_THROWS_AS(BigInteger::parse("-"), DomainError);
}

TEST_CASE("Rational canonical form") {
  const Rational r(BigInteger(6), BigInteger(-4));
  CHECK(r.num() == BigInteger(-3));
  CHECK(r.den() == BigInteger(2));
  CHECK(r.to_string() == "-3/2");
  CHECK(Rational(BigInteger(0), BigInteger(-7)).den() == BigInteger(1));
  CHECK(Rational(BigInteger(10), BigInteger(5)).to_string() == "2");
  CHECK_THROWS_AS(Rational(BigInteger(1), BigInteger(0)), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("Rational parse and print") {
  CHECK(Rational::parse("7").to_string() == "7");
  CHECK(Rational::parse("-3/4").to_string() == "-3/4");
  CHECK(Rational::parse("4/6").to_string() == "2/3");
  CHECK_THROWS_AS(Rational::parse("3/-4"), DomainError);
  CHECK_THROWS_AS(Rational::parse("3/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("1.5"), DomainError);
  CHECK_THROWS_AS(Rational::parse("/2"), DomainError);
}

TEST_CASE("Rational field operations agree with cross-multiplication") {
  std::mt19937_64 rng(99);
  const auto draw = [&](std::int64_t range) {
    return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - range;
  };
  for (int i = 0; i < 10000; ++i) {
    const std::int64_t a = draw(1000), c = draw(1000);
    std::int64_t b = draw(1000), d = draw(1000);
    if (b == 0) b = 1;
    if (d == 0) d = -1;
    const Rational x(BigInteger(static_cast<long>(a)), BigInteger(static_cast<long>(b)));
    const Rational y(BigInteger(static_cast<long>(c)), BigInteger(static_cast<long>(d)));

    // value p/q equals n/m iff p*m == n*q
    const auto same = [](const Rational& r, oracle::i128 n, oracle::i128 m) {
      const auto p = static_cast<oracle::i128>(r.num().to_int64());
      const auto q = static_cast<oracle::i128>(r.den().to_int64());
      return q > 0 && p * m == n * q;
    };
    REQUIRE(same(x + y, oracle::i128(a) * d + oracle::i128(c) * b, oracle::i128(b) * d));
    REQUIRE(same(x - y, oracle::i128(a) * d - oracle::i128(c) * b, oracle::i128(b) * d));
    REQUIRE(same(x * y, oracle::i128(a) * c, oracle::i128(b) * d));
    if (c != 0) REQUIRE(same(x / y, oracle::i128(a) * d, oracle::i128(b) * c));

    const Rational s = x + y;
    REQUIRE(cuboid::gcd(s.num(), s.den()) == BigInteger(1));
    // canonicalising an already reduced value is the identity
    const Rational again(s.num(), s.den());
    REQUIRE(again.num() == s.num());
    REQUIRE(again.den() == s.den());
  }
}

TEST_CASE("Rational ordering") {
  CHECK(Rational::parse("1/3") < Rational::parse("1/2"));
  CHECK(Rational::parse("-1/2") < Rational::parse("-1/3"));
  CHECK(Rational(2) > Rational::parse("3/2"));
  CHECK(Rational::parse("2/4") == Rational::parse("1/2"));
}
