#pragma once

// Exact rank analysis of the 3x7 matrix N whose i-th row is
// (1, d_i, x_i, x_i d_i, x_i^2, d_i^2, x_i^2 d_i^2), and of its column
// submatrices N1 = [1 d] and N2 = [1 x].
//
// A factor solution that is not a cuboid solution forces rank N <= 2; the
// possible rank profiles of (N, N1, N2) are then
//
//   rank N = 1                      -> x and d both constant
//   rank N1 = 2, rank N2 = 1        -> x constant, d takes two values
//   rank N1 = 1, rank N2 = 2        -> d constant, x takes two values
//   rank N1 = 2, rank N2 = 2        -> both take two values, repeated in the
//                                      same two positions
//
// and classify() reports which one a concrete tuple falls into together with
// the linear-combination coefficients and quadratic roots that realise it.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "cuboid/cuboid_core.hpp"
#include "cuboid/eigen_scalar.hpp"
#include "cuboid/exact_arith.hpp"

namespace cuboid {

template <typename Scalar>
using ExactMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using ExactVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = ExactMatrix<Rational>;
using IntegerMatrix = ExactMatrix<BigInteger>;

RationalMatrix build_N(const CuboidTuple& t);
/// Columns (1, d).
RationalMatrix build_N1(const CuboidTuple& t);
/// Columns (1, x).
RationalMatrix build_N2(const CuboidTuple& t);

/// The 7x3 coefficient matrix multiplying (p1,p2,p3); equals N transposed.
RationalMatrix factor_matrix(const CuboidTuple& t);

enum class PivotOrder { kForward, kReversed };

/// Exact rank by fraction-free (Bareiss) elimination. Rows are first scaled
/// to integers by their denominators' lcm. kReversed walks columns from the
/// right and searches pivot rows from the bottom; the result must agree.
Eigen::Index rank(const RationalMatrix& m, PivotOrder order = PivotOrder::kForward);
Eigen::Index rank(const IntegerMatrix& m, PivotOrder order = PivotOrder::kForward);

/// (tp2..tp8) as the product factor_matrix(t) * (p1,p2,p3).
std::array<Rational, 7> apply_matrix_equation(const CuboidTuple& t);

enum class CaseLabel { Rank1, Case_N1_2_N2_1, Case_N1_1_N2_2, Case_N1_2_N2_2, FullRank };
inline constexpr std::array<CaseLabel, 5> kAllCaseLabels = {
    CaseLabel::Rank1, CaseLabel::Case_N1_2_N2_1, CaseLabel::Case_N1_1_N2_2, CaseLabel::Case_N1_2_N2_2,
    CaseLabel::FullRank};

std::string_view to_string(CaseLabel label);

struct RankProfile {
  int rank_N = 0;
  int rank_N1 = 0;
  int rank_N2 = 0;
  CaseLabel label = CaseLabel::FullRank;

  friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

/// Coefficients and roots realising a case. Absent fields do not apply to the
/// case (or are underdetermined, e.g. the quadratic for a constant triple).
///
///   x = alpha*(1,1,1), d = beta*(1,1,1)            rank N = 1 (beta reused)
///   d_i^2 = beta*d_i + gamma, roots s1 (repeated), s2
///   d = delta*(1,1,1)
///   x_i^2 = epsilon*x_i + zeta, roots r1 (repeated), r2
///   theta = |r2| = |s1| when r1 = s2 = 0
///
/// `normalizing` reorders the triples so the repeated value sits in positions
/// 1 and 2: act(normalizing, t) has d = (s1,s1,s2) and/or x = (r1,r1,r2).
struct CaseWitness {
  std::optional<Rational> alpha, beta, gamma, delta, epsilon, zeta;
  std::optional<Rational> s1, s2, r1, r2;
  std::optional<Rational> theta;
  std::optional<Permutation3> normalizing;

  bool empty() const;
  friend bool operator==(const CaseWitness&, const CaseWitness&) = default;
};

struct Classification {
  RankProfile profile;
  CaseWitness witness;
};

/// Raised when the computed ranks and the extracted witness contradict each
/// other (e.g. the repeated positions of d and x differ while rank N <= 2).
class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RankProfile rank_profile(const CuboidTuple& t);
Classification classify(const CuboidTuple& t);

}  // namespace cuboid
