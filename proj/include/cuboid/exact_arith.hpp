#pragma once

// Exact integer and rational scalars.
//
// BigInteger wraps a GMP integer; Rational keeps a reduced fraction with a
// strictly positive denominator, so equal values have equal representations.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cuboid {

/// Thrown when an operation is called outside its domain (negative sqrt
/// argument, missing space diagonal, unknown polynomial name, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class BigInteger {
 public:
  BigInteger() = default;
  BigInteger(int v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  BigInteger(long v) : value_(v) {}                    // NOLINT(google-explicit-constructor)
  BigInteger(long long v);                             // NOLINT(google-explicit-constructor)
  BigInteger(unsigned long v) : value_(v) {}           // NOLINT(google-explicit-constructor)
  explicit BigInteger(mpz_class v) : value_(std::move(v)) {}

  /// Parses an optionally signed decimal literal. Throws DomainError.
  static BigInteger parse(std::string_view text);

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  std::size_t bit_length() const;
  bool fits_int64() const;
  std::int64_t to_int64() const;
  std::string to_string() const { return value_.get_str(); }

  const mpz_class& mpz() const { return value_; }

  BigInteger operator-() const { return BigInteger(mpz_class(-value_)); }
  BigInteger& operator+=(const BigInteger& o) { value_ += o.value_; return *this; }
  BigInteger& operator-=(const BigInteger& o) { value_ -= o.value_; return *this; }
  BigInteger& operator*=(const BigInteger& o) { value_ *= o.value_; return *this; }

  friend BigInteger operator+(BigInteger a, const BigInteger& b) { return a += b; }
  friend BigInteger operator-(BigInteger a, const BigInteger& b) { return a -= b; }
  friend BigInteger operator*(BigInteger a, const BigInteger& b) { return a *= b; }

  friend bool operator==(const BigInteger& a, const BigInteger& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const BigInteger& a, const BigInteger& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInteger& v);

 private:
  mpz_class value_;
};

BigInteger abs(const BigInteger& v);
BigInteger gcd(const BigInteger& a, const BigInteger& b);
BigInteger lcm(const BigInteger& a, const BigInteger& b);
/// Quotient truncated toward zero; throws DomainError on a zero divisor.
BigInteger trunc_div(const BigInteger& a, const BigInteger& b);
/// Division that must leave no remainder; throws std::logic_error otherwise.
BigInteger exact_div(const BigInteger& a, const BigInteger& b);

/// floor(sqrt(n)) by Newton iteration. Throws DomainError for n < 0.
BigInteger integer_sqrt(const BigInteger& n);

enum class SquareFilter { kEnabled, kDisabled };

/// True iff n = k*k for some integer k >= 0. The residue pre-filter only
/// rejects early; results are identical with it disabled.
bool is_perfect_square(const BigInteger& n, SquareFilter filter = SquareFilter::kEnabled);

/// Quadratic-residue tables modulo 64, 63, 65 and 11.
bool passes_square_residue_filter(std::uint64_t low_bits, std::uint64_t mod_63_65_11);

class Rational {
 public:
  Rational() : den_(1) {}
  Rational(int v) : num_(v), den_(1) {}        // NOLINT(google-explicit-constructor)
  Rational(long v) : num_(v), den_(1) {}       // NOLINT(google-explicit-constructor)
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInteger v) : num_(std::move(v)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Reduces to canonical form. Throws DomainError when den == 0.
  Rational(BigInteger num, BigInteger den);

  /// Accepts "n" or "n/d" (d > 0, optional leading '-').
  static Rational parse(std::string_view text);

  const BigInteger& num() const { return num_; }
  const BigInteger& den() const { return den_; }
  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == BigInteger(1); }

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& v);

 private:
  struct Reduced {};
  Rational(BigInteger num, BigInteger den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  BigInteger num_;
  BigInteger den_;
};

Rational abs(const Rational& v);
Rational square(const Rational& v);

}  // namespace cuboid
