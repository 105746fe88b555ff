#include "cuboid/exact_arith.hpp"

#include <array>
#include <cctype>
#include <limits>
#include <ostream>
#include <utility>

namespace cuboid {

namespace {

template <std::size_t Mod>
constexpr std::array<bool, Mod> square_residues() {
  std::array<bool, Mod> table{};
  for (std::size_t k = 0; k < Mod; ++k) table[(k * k) % Mod] = true;
  return table;
}

constexpr auto kSquaresMod64 = square_residues<64>();
constexpr auto kSquaresMod63 = square_residues<63>();
constexpr auto kSquaresMod65 = square_residues<65>();
constexpr auto kSquaresMod11 = square_residues<11>();
constexpr unsigned long kFilterModulus = 63UL * 65UL * 11UL;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BigInteger::BigInteger(long long v) : value_(static_cast<long>(v)) {
  static_assert(sizeof(long) == sizeof(long long), "LP64 platform expected");
}

BigInteger BigInteger::parse(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits)) {
    throw DomainError("not an integer literal: '" + std::string(text) + "'");
  }
  return BigInteger(mpz_class(std::string(text), 10));
}

std::size_t BigInteger::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(value_.get_mpz_t(), 2);
}

bool BigInteger::fits_int64() const { return value_.fits_slong_p(); }

std::int64_t BigInteger::to_int64() const {
  if (!fits_int64()) throw DomainError("integer does not fit in 64 bits: " + to_string());
  return value_.get_si();
}

std::ostream& operator<<(std::ostream& os, const BigInteger& v) { return os << v.to_string(); }

BigInteger abs(const BigInteger& v) { return BigInteger(mpz_class(::abs(v.mpz()))); }

BigInteger gcd(const BigInteger& a, const BigInteger& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigInteger(std::move(g));
}

BigInteger lcm(const BigInteger& a, const BigInteger& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigInteger(std::move(l));
}

BigInteger trunc_div(const BigInteger& a, const BigInteger& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigInteger(std::move(q));
}

BigInteger exact_div(const BigInteger& a, const BigInteger& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  mpz_class q;
  mpz_class r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  if (sgn(r) != 0) throw std::logic_error("exact_div: non-zero remainder");
  return BigInteger(std::move(q));
}

BigInteger integer_sqrt(const BigInteger& n) {
  if (n.sign() < 0) throw DomainError("integer_sqrt of negative value " + n.to_string());
  if (n.is_zero()) return BigInteger(0);

  // 2^ceil(bits/2) is never below the root, so the iterates decrease
  // monotonically until they reach floor(sqrt(n)).
  mpz_class start;
  mpz_ui_pow_ui(start.get_mpz_t(), 2, (n.bit_length() + 1) / 2);
  BigInteger x(std::move(start));
  const BigInteger two(2);
  while (true) {
    BigInteger y = trunc_div(x + trunc_div(n, x), two);
    if (y >= x) return x;
    x = std::move(y);
  }
}

bool passes_square_residue_filter(std::uint64_t low_bits, std::uint64_t mod_63_65_11) {
  return kSquaresMod64[low_bits & 63U] && kSquaresMod63[mod_63_65_11 % 63] &&
         kSquaresMod65[mod_63_65_11 % 65] && kSquaresMod11[mod_63_65_11 % 11];
}

bool is_perfect_square(const BigInteger& n, SquareFilter filter) {
  if (n.sign() < 0) return false;
  if (filter == SquareFilter::kEnabled) {
    const mpz_srcptr z = n.mpz().get_mpz_t();
    const std::uint64_t low = mpz_fdiv_ui(z, 64);
    const std::uint64_t mixed = mpz_fdiv_ui(z, kFilterModulus);
    if (!passes_square_residue_filter(low, mixed)) return false;
  }
  const BigInteger root = integer_sqrt(n);
  return root * root == n;
}

// ---------------------------------------------------------------------------

Rational::Rational(BigInteger num, BigInteger den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational with zero denominator");
  canonicalize();
}

void Rational::canonicalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInteger(1);
    return;
  }
  const BigInteger g = gcd(num_, den_);
  if (g != BigInteger(1)) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(BigInteger::parse(text));
  const std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw DomainError("bad denominator in rational literal: '" + std::string(text) + "'");
  }
  return Rational(BigInteger::parse(text.substr(0, slash)), BigInteger::parse(den_text));
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::operator-() const { return Rational(-num_, den_, Reduced{}); }

Rational& Rational::operator+=(const Rational& o) {
  if (is_integer() && o.is_integer()) {
    num_ += o.num_;
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (is_integer() && o.is_integer()) {
    num_ -= o.num_;
    return *this;
  }
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  if (is_integer() && o.is_integer()) return *this;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.is_integer() && b.is_integer()) return a.num_ <=> b.num_;
  return (a.num_ * b.den_) <=> (b.num_ * a.den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

Rational abs(const Rational& v) { return v.sign() < 0 ? -v : v; }

Rational square(const Rational& v) { return v * v; }

}  // namespace cuboid
