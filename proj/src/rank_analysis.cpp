#include "cuboid/rank_analysis.hpp"

#include <utility>
#include <vector>

namespace cuboid {

namespace {

// Position of the value that occurs exactly once in a triple holding exactly
// two distinct values, or nullopt for any other pattern.
std::optional<std::size_t> singleton_position(const std::array<Rational, 3>& v) {
  if (v[0] == v[1] && v[1] != v[2]) return 2;
  if (v[0] == v[2] && v[0] != v[1]) return 1;
  if (v[1] == v[2] && v[0] != v[1]) return 0;
  return std::nullopt;
}

// Sends the singleton to position 3 and keeps the other two in order.
Permutation3 normalizing_permutation(std::size_t singleton) {
  switch (singleton) {
    case 0: return Permutation3::from_images({2, 3, 1});
    case 1: return Permutation3::from_images({1, 3, 2});
    default: return Permutation3{};
  }
}

struct QuadraticWitness {
  Rational repeated, single, linear, constant;
  std::size_t singleton;
};

QuadraticWitness two_valued(const std::array<Rational, 3>& v, std::string_view what) {
  const auto pos = singleton_position(v);
  if (!pos) {
    throw ClassificationError(std::string(what) +
                              " must take exactly two distinct values for a rank-2 submatrix under rank N <= 2");
  }
  QuadraticWitness w;
  w.singleton = *pos;
  w.single = v[*pos];
  w.repeated = v[(*pos + 1) % 3];
  // v^2 = linear*v + constant has roots repeated, single
  w.linear = w.repeated + w.single;
  w.constant = -(w.repeated * w.single);
  for (const auto& value : v) {
    if (square(value) != w.linear * value + w.constant) {
      throw ClassificationError(std::string(what) + " violates its quadratic relation");
    }
  }
  return w;
}

IntegerMatrix clear_denominators(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    BigInteger scale(1);
    for (Eigen::Index c = 0; c < m.cols(); ++c) scale = lcm(scale, m(r, c).den());
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out(r, c) = m(r, c).num() * exact_div(scale, m(r, c).den());
    }
  }
  return out;
}

}  // namespace

RationalMatrix build_N(const CuboidTuple& t) {
  RationalMatrix n(3, 7);
  for (Eigen::Index i = 0; i < 3; ++i) {
    const Rational& x = t.x[static_cast<std::size_t>(i)];
    const Rational& d = t.d[static_cast<std::size_t>(i)];
    const Rational x2 = square(x);
    const Rational d2 = square(d);
    n.row(i) << Rational(1), d, x, x * d, x2, d2, x2 * d2;
  }
  return n;
}

RationalMatrix build_N1(const CuboidTuple& t) {
  RationalMatrix n(3, 2);
  for (Eigen::Index i = 0; i < 3; ++i) n.row(i) << Rational(1), t.d[static_cast<std::size_t>(i)];
  return n;
}

RationalMatrix build_N2(const CuboidTuple& t) {
  RationalMatrix n(3, 2);
  for (Eigen::Index i = 0; i < 3; ++i) n.row(i) << Rational(1), t.x[static_cast<std::size_t>(i)];
  return n;
}

RationalMatrix factor_matrix(const CuboidTuple& t) { return build_N(t).transpose(); }

Eigen::Index rank(const IntegerMatrix& input, PivotOrder order) {
  IntegerMatrix m = input;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  const bool reversed = order == PivotOrder::kReversed;
  // Logical row/column r maps to a physical index, so both orders share the
  // same elimination loop.
  const auto col_at = [&](Eigen::Index c) { return reversed ? cols - 1 - c : c; };
  const auto row_at = [&](Eigen::Index r) { return reversed ? rows - 1 - r : r; };

  Eigen::Index rank = 0;
  BigInteger previous_pivot(1);
  for (Eigen::Index lc = 0; lc < cols && rank < rows; ++lc) {
    const Eigen::Index c = col_at(lc);
    Eigen::Index pivot_row = -1;
    for (Eigen::Index lr = rank; lr < rows; ++lr) {
      if (!m(row_at(lr), c).is_zero()) {
        pivot_row = lr;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != rank) m.row(row_at(pivot_row)).swap(m.row(row_at(rank)));

    const Eigen::Index pr = row_at(rank);
    const BigInteger pivot = m(pr, c);
    for (Eigen::Index lr = rank + 1; lr < rows; ++lr) {
      const Eigen::Index r = row_at(lr);
      const BigInteger factor = m(r, c);
      for (Eigen::Index lk = lc; lk < cols; ++lk) {
        const Eigen::Index k = col_at(lk);
        // Each entry stays a minor of the input, so the division is exact.
        m(r, k) = exact_div(m(r, k) * pivot - factor * m(pr, k), previous_pivot);
      }
    }
    previous_pivot = pivot;
    ++rank;
  }
  return rank;
}

Eigen::Index rank(const RationalMatrix& m, PivotOrder order) { return rank(clear_denominators(m), order); }

std::array<Rational, 7> apply_matrix_equation(const CuboidTuple& t) {
  ExactVector<Rational> p(3);
  p << eval_p(1, t), eval_p(2, t), eval_p(3, t);
  const ExactVector<Rational> product = factor_matrix(t) * p;
  std::array<Rational, 7> out;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = product(static_cast<Eigen::Index>(k));
  return out;
}

std::string_view to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::Rank1: return "Rank1";
    case CaseLabel::Case_N1_2_N2_1: return "Case_N1_2_N2_1";
    case CaseLabel::Case_N1_1_N2_2: return "Case_N1_1_N2_2";
    case CaseLabel::Case_N1_2_N2_2: return "Case_N1_2_N2_2";
    case CaseLabel::FullRank: return "FullRank";
  }
  return "?";
}

bool CaseWitness::empty() const { return *this == CaseWitness{}; }

RankProfile rank_profile(const CuboidTuple& t) {
  RankProfile profile;
  profile.rank_N = static_cast<int>(rank(build_N(t)));
  profile.rank_N1 = static_cast<int>(rank(build_N1(t)));
  profile.rank_N2 = static_cast<int>(rank(build_N2(t)));
  if (profile.rank_N == 3) {
    profile.label = CaseLabel::FullRank;
  } else if (profile.rank_N == 1) {
    profile.label = CaseLabel::Rank1;
  } else if (profile.rank_N1 == 2 && profile.rank_N2 == 1) {
    profile.label = CaseLabel::Case_N1_2_N2_1;
  } else if (profile.rank_N1 == 1 && profile.rank_N2 == 2) {
    profile.label = CaseLabel::Case_N1_1_N2_2;
  } else if (profile.rank_N1 == 2 && profile.rank_N2 == 2) {
    profile.label = CaseLabel::Case_N1_2_N2_2;
  } else {
    throw ClassificationError("rank N = 2 with rank N1 = rank N2 = 1 at " + to_string(t));
  }
  return profile;
}

Classification classify(const CuboidTuple& t) {
  Classification out;
  out.profile = rank_profile(t);
  CaseWitness& w = out.witness;
  switch (out.profile.label) {
    case CaseLabel::FullRank:
      break;
    case CaseLabel::Rank1:
      w.alpha = t.x[0];
      w.beta = t.d[0];
      break;
    case CaseLabel::Case_N1_2_N2_1: {
      w.alpha = t.x[0];
      const auto q = two_valued(t.d, "d");
      w.beta = q.linear;
      w.gamma = q.constant;
      w.s1 = q.repeated;
      w.s2 = q.single;
      w.normalizing = normalizing_permutation(q.singleton);
      break;
    }
    case CaseLabel::Case_N1_1_N2_2: {
      w.delta = t.d[0];
      const auto q = two_valued(t.x, "x");
      w.epsilon = q.linear;
      w.zeta = q.constant;
      w.r1 = q.repeated;
      w.r2 = q.single;
      w.normalizing = normalizing_permutation(q.singleton);
      break;
    }
    case CaseLabel::Case_N1_2_N2_2: {
      const auto qd = two_valued(t.d, "d");
      const auto qx = two_valued(t.x, "x");
      if (qd.singleton != qx.singleton) {
        throw ClassificationError("repeated d-values and repeated x-values are not paired at " + to_string(t) +
                                  " although rank N <= 2");
      }
      w.beta = qd.linear;
      w.gamma = qd.constant;
      w.s1 = qd.repeated;
      w.s2 = qd.single;
      w.epsilon = qx.linear;
      w.zeta = qx.constant;
      w.r1 = qx.repeated;
      w.r2 = qx.single;
      w.normalizing = normalizing_permutation(qd.singleton);
      if (w.r1->is_zero() && w.s2->is_zero() && abs(*w.r2) == abs(*w.s1)) w.theta = abs(*w.r2);
      break;
    }
  }
  return out;
}

}  // namespace cuboid
