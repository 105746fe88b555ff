#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library evaluation paths: polynomials are written out fully
// expanded, ranks come from minors, and searches are plain nested loops.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using i128 = __int128;

inline i128 sq(i128 v) { return v * v; }

/// Integer tuple (x1,x2,x3,d1,d2,d3).
struct IntTuple {
  std::array<std::int64_t, 3> x;
  std::array<std::int64_t, 3> d;
};

// p1, p2, p3 expanded directly.
inline std::array<i128, 3> p_values(const IntTuple& t) {
  const i128 x1 = t.x[0], x2 = t.x[1], x3 = t.x[2], d1 = t.d[0], d2 = t.d[1], d3 = t.d[2];
  return {x2 * x2 + x3 * x3 - d1 * d1, x3 * x3 + x1 * x1 - d2 * d2, x1 * x1 + x2 * x2 - d3 * d3};
}

// tp2..tp8 from their fully expanded monomial forms.
inline std::array<i128, 7> tp_values(const IntTuple& t) {
  const i128 x1 = t.x[0], x2 = t.x[1], x3 = t.x[2], d1 = t.d[0], d2 = t.d[1], d3 = t.d[2];
  std::array<i128, 7> out{};
  out[0] = 2 * x1 * x1 + 2 * x2 * x2 + 2 * x3 * x3 - d1 * d1 - d2 * d2 - d3 * d3;
  out[1] = d1 * x2 * x2 + d1 * x3 * x3 - d1 * d1 * d1 + d2 * x3 * x3 + d2 * x1 * x1 - d2 * d2 * d2 +
           d3 * x1 * x1 + d3 * x2 * x2 - d3 * d3 * d3;
  out[2] = x1 * x2 * x2 + x1 * x3 * x3 - x1 * d1 * d1 + x2 * x3 * x3 + x2 * x1 * x1 - x2 * d2 * d2 +
           x3 * x1 * x1 + x3 * x2 * x2 - x3 * d3 * d3;
  out[3] = x1 * d1 * x2 * x2 + x1 * d1 * x3 * x3 - x1 * d1 * d1 * d1 + x2 * d2 * x3 * x3 + x2 * d2 * x1 * x1 -
           x2 * d2 * d2 * d2 + x3 * d3 * x1 * x1 + x3 * d3 * x2 * x2 - x3 * d3 * d3 * d3;
  out[4] = 2 * x1 * x1 * x2 * x2 + 2 * x1 * x1 * x3 * x3 + 2 * x2 * x2 * x3 * x3 - x1 * x1 * d1 * d1 -
           x2 * x2 * d2 * d2 - x3 * x3 * d3 * d3;
  out[5] = d1 * d1 * x2 * x2 + d1 * d1 * x3 * x3 - d1 * d1 * d1 * d1 + d2 * d2 * x3 * x3 + d2 * d2 * x1 * x1 -
           d2 * d2 * d2 * d2 + d3 * d3 * x1 * x1 + d3 * d3 * x2 * x2 - d3 * d3 * d3 * d3;
  out[6] = x1 * x1 * d1 * d1 * x2 * x2 + x1 * x1 * d1 * d1 * x3 * x3 - x1 * x1 * d1 * d1 * d1 * d1 +
           x2 * x2 * d2 * d2 * x3 * x3 + x2 * x2 * d2 * d2 * x1 * x1 - x2 * x2 * d2 * d2 * d2 * d2 +
           x3 * x3 * d3 * d3 * x1 * x1 + x3 * x3 * d3 * d3 * x2 * x2 - x3 * x3 * d3 * d3 * d3 * d3;
  return out;
}

/// floor(sqrt(n)) by bisection with the multiplication check r*r <= n.
inline std::int64_t isqrt_bisect(i128 n) {
  std::int64_t lo = 0;
  std::int64_t hi = 1;
  while (sq(hi) <= n) hi *= 2;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (sq(mid) <= n ? lo : hi) = mid;
  }
  return lo;
}

inline bool is_square(i128 n) { return n >= 0 && sq(isqrt_bisect(n)) == n; }

/// Naive O(n^3) Euler brick search, edges ascending.
inline std::vector<std::array<std::int64_t, 6>> naive_bricks(std::int64_t max_edge) {
  std::vector<std::array<std::int64_t, 6>> out;
  for (std::int64_t a = 1; a <= max_edge; ++a) {
    for (std::int64_t b = a + 1; b <= max_edge; ++b) {
      if (!is_square(sq(a) + sq(b))) continue;
      for (std::int64_t c = b + 1; c <= max_edge; ++c) {
        if (is_square(sq(b) + sq(c)) && is_square(sq(a) + sq(c))) {
          out.push_back({a, b, c, isqrt_bisect(sq(b) + sq(c)), isqrt_bisect(sq(c) + sq(a)),
                         isqrt_bisect(sq(a) + sq(b))});
        }
      }
    }
  }
  return out;
}

/// Determinant of a k x k integer matrix by cofactor expansion.
inline i128 det(const std::vector<std::vector<i128>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  i128 sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<i128>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<i128> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    const i128 term = m[0][c] * det(minor);
    sum += (c % 2 == 0) ? term : -term;
  }
  return sum;
}

/// Rank as the largest k with a nonzero k x k minor.
inline int rank_by_minors(const std::vector<std::vector<i128>>& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  int best = 0;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    bool found = false;
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
      do {
        std::vector<std::vector<i128>> sub;
        for (std::size_t r = 0; r < rows; ++r) {
          if (!rsel[r]) continue;
          std::vector<i128> row;
          for (std::size_t c = 0; c < cols; ++c) {
            if (csel[c]) row.push_back(m[r][c]);
          }
          sub.push_back(row);
        }
        if (det(sub) != 0) found = true;
      } while (!found && std::prev_permutation(csel.begin(), csel.end()));
    } while (!found && std::prev_permutation(rsel.begin(), rsel.end()));
    if (!found) break;
    best = static_cast<int>(k);
  }
  return best;
}

/// Rows (1, d, x, xd, x^2, d^2, x^2 d^2) by direct substitution.
inline std::vector<std::vector<i128>> n_matrix(const IntTuple& t) {
  std::vector<std::vector<i128>> m;
  for (std::size_t i = 0; i < 3; ++i) {
    const i128 x = t.x[i], d = t.d[i];
    m.push_back({1, d, x, x * d, x * x, d * d, x * x * d * d});
  }
  return m;
}

/// Solves [[a, b], [c, d]] (u, v) = (e, f) by Cramer's rule; returns
/// numerators and the common determinant.
struct Cramer2 {
  i128 u_num, v_num, den;
};
inline Cramer2 cramer(i128 a, i128 b, i128 c, i128 d, i128 e, i128 f) {
  return {e * d - b * f, a * f - e * c, a * d - b * c};
}

}  // namespace oracle
