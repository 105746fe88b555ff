#pragma once

// Sparse multivariate polynomials over Q in the seven cuboid variables.
//
// Terms live in a map keyed by monomial under graded lexicographic order
// (x1 > x2 > x3 > d1 > d2 > d3 > L) and zero coefficients are never stored,
// so two polynomials are equal iff their term maps are equal.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cuboid/cuboid_core.hpp"
#include "cuboid/exact_arith.hpp"

namespace cuboid {

enum class Var : std::uint8_t { x1, x2, x3, d1, d2, d3, L };
inline constexpr std::size_t kNumVars = 7;

class Monomial {
 public:
  using Exponents = std::array<std::uint16_t, kNumVars>;

  Monomial() : exps_{} {}
  explicit Monomial(const Exponents& exps) : exps_(exps) {}
  static Monomial of(Var v, std::uint16_t power = 1);

  const Exponents& exponents() const { return exps_; }
  std::uint16_t operator[](Var v) const { return exps_[static_cast<std::size_t>(v)]; }
  unsigned total_degree() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded lexicographic: total degree first, then exponents in variable order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  Exponents exps_;
};

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, std::greater<>>;

  MultiPoly() = default;
  MultiPoly(Rational constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(int constant) : MultiPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  static MultiPoly var(Var v);
  static MultiPoly term(Rational coeff, Monomial m);

  /// Terms in descending graded lexicographic order.
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  bool involves(Var v) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned exponent);

/// Exact symbolic form of the named polynomial, assembled term by term from
/// the fully expanded right-hand sides (no polynomial multiplication).
MultiPoly poly_template(PolyName name);

/// Substitutes x_i -> x_{sigma i}, d_i -> d_{sigma i}, L -> L.
MultiPoly apply_sigma(const Permutation3& sigma, const MultiPoly& p);

/// Invariant under all six elements of S3.
bool is_multisymmetric(const MultiPoly& p);

/// Exact value at t; throws DomainError when p involves L and t has none.
Rational eval_poly(const MultiPoly& p, const CuboidTuple& t);

/// Ideal-membership witness: target = c0*p0 + c1*p1 + c2*p2 + c3*p3, where
/// c0 only participates when `p0_cofactor` is set.
struct CofactorCertificate {
  std::string name;  // informational, not part of the identity
  MultiPoly target;
  std::array<MultiPoly, 3> cofactors;
  std::optional<MultiPoly> p0_cofactor;
};

bool verify_certificate(const CofactorCertificate& c);

/// The eight certificates for tp1..tp8: tp1 = 1*p0, and for tp2..tp8 the
/// cofactor triples (1,1,1), (d), (x), (x d), (x^2), (d^2), (x^2 d^2).
std::vector<CofactorCertificate> builtin_certificates();

}  // namespace cuboid
