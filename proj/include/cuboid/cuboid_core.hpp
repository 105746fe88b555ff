#pragma once

// The seven cuboid variables (x1,x2,x3,d1,d2,d3,L), the S3 action on them,
// and exact evaluation of the cuboid polynomials p0..p3 and the factor
// polynomials tp1..tp8.
//
// Variable order is fixed everywhere as (x1,x2,x3,d1,d2,d3,L). The face
// diagonal di belongs to the face that does not contain the edge xi.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

#include "cuboid/exact_arith.hpp"

namespace cuboid {

struct CuboidTuple {
  std::array<Rational, 3> x;  // edges
  std::array<Rational, 3> d;  // face diagonals
  std::optional<Rational> L;  // space diagonal

  /// Tuple from six (Euler) or seven (perfect) values in the fixed order.
  static CuboidTuple from_values(std::initializer_list<Rational> values);

  /// Requires L; throws DomainError naming `what` otherwise.
  const Rational& space_diagonal(std::string_view what) const;

  friend bool operator==(const CuboidTuple&, const CuboidTuple&) = default;
};

std::string to_string(const CuboidTuple& t);

/// An element of S3 stored as the images of (1,2,3), zero-based.
class Permutation3 {
 public:
  constexpr Permutation3() : images_{0, 1, 2} {}
  /// `one_based` holds sigma(1), sigma(2), sigma(3). Throws DomainError unless
  /// it is a bijection of {1,2,3}.
  static Permutation3 from_images(std::array<int, 3> one_based);
  /// All six elements, identity first, in lexicographic order of images.
  static const std::array<Permutation3, 6>& all();

  /// Zero-based image of the zero-based index i.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  std::array<int, 3> images() const;  // one-based
  bool is_identity() const { return *this == Permutation3{}; }

  Permutation3 inverse() const;
  /// (a * b)(i) = a(b(i)).
  friend Permutation3 operator*(const Permutation3& a, const Permutation3& b);
  friend bool operator==(const Permutation3&, const Permutation3&) = default;

 private:
  std::array<std::uint8_t, 3> images_;
};

/// x_i -> x_{sigma i}, d_i -> d_{sigma i}, L unchanged.
CuboidTuple act(const Permutation3& sigma, const CuboidTuple& t);

/// p0 = x1^2+x2^2+x3^2-L^2, p1 = x2^2+x3^2-d1^2, p2 = x3^2+x1^2-d2^2,
/// p3 = x1^2+x2^2-d3^2. Index 0 needs L.
Rational eval_p(int index, const CuboidTuple& t);

/// Factor polynomials tp1..tp8. tp1 = p0 (needs L); tp2..tp8 are
/// sum_i c_i p_i with c_i = 1, d_i, x_i, x_i d_i, x_i^2, d_i^2, x_i^2 d_i^2.
Rational eval_factor(int index, const CuboidTuple& t);

/// tp_k (k in 2..8) from already-evaluated p1..p3.
Rational factor_from_p(int k, const std::array<Rational, 3>& p, const CuboidTuple& t);
std::array<Rational, 7> factors_from_p(const std::array<Rational, 3>& p, const CuboidTuple& t);

struct ResidualVector {
  std::optional<Rational> p0;
  std::array<Rational, 3> p;    // p1, p2, p3
  std::optional<Rational> tp1;
  std::array<Rational, 7> tp;   // tp2 .. tp8

  const Rational& factor(int k) const;  // k in 2..8
};

/// All p and tp values in one pass; perfect=false skips p0 and tp1.
ResidualVector residuals(const CuboidTuple& t, bool perfect);

/// The twelve named polynomials, usable by both the numeric and symbolic
/// evaluators.
enum class PolyName { p0, p1, p2, p3, tp1, tp2, tp3, tp4, tp5, tp6, tp7, tp8 };

PolyName parse_poly_name(std::string_view name);
std::string_view to_string(PolyName name);
bool needs_space_diagonal(PolyName name);
Rational evaluate(PolyName name, const CuboidTuple& t);

}  // namespace cuboid
