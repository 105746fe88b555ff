#include "cuboid/brick_search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace cuboid {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("64-bit overflow in brick search");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("64-bit overflow in brick search");
  return out;
}

std::int64_t sq(std::int64_t v) { return checked_mul(v, v); }

void check_edge_bound(std::int64_t max_edge) {
  if (max_edge < 1) throw DomainError("max_edge must be at least 1");
  if (max_edge > kMaxSearchEdge) {
    throw DomainError("max_edge " + std::to_string(max_edge) + " exceeds the 64-bit search bound " +
                      std::to_string(kMaxSearchEdge) + "; use the BigInteger evaluators for larger edges");
  }
}

Brick make_brick(std::int64_t x1, std::int64_t x2, std::int64_t x3) {
  Brick b;
  b.edges = {x1, x2, x3};
  b.diagonals = {isqrt64(checked_add(sq(x2), sq(x3))), isqrt64(checked_add(sq(x3), sq(x1))),
                 isqrt64(checked_add(sq(x1), sq(x2)))};
  b.primitive = std::gcd(std::gcd(x1, x2), x3) == 1;
  return b;
}

}  // namespace

CuboidTuple Brick::to_tuple() const {
  CuboidTuple t;
  for (std::size_t i = 0; i < 3; ++i) {
    t.x[i] = Rational(static_cast<long>(edges[i]));
    t.d[i] = Rational(static_cast<long>(diagonals[i]));
  }
  return t;
}

std::int64_t isqrt64(std::int64_t n) {
  if (n < 0) throw DomainError("isqrt64 of negative value");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  // r*r <= n  iff  r <= n / r, which cannot overflow near 2^63
  while (r > 0 && r > n / r) --r;
  while (r + 1 <= n / (r + 1)) ++r;
  return r;
}

bool is_square64(std::int64_t n) {
  if (n < 0) return false;
  const auto u = static_cast<std::uint64_t>(n);
  if (!passes_square_residue_filter(u & 63U, u % (63U * 65U * 11U))) return false;
  const std::int64_t r = isqrt64(n);
  return r * r == n;
}

std::vector<std::array<std::int64_t, 2>> pythagorean_pairs(std::int64_t max_edge) {
  check_edge_bound(max_edge);
  std::vector<std::array<std::int64_t, 2>> pairs;
  // Legs m^2 - n^2 and 2mn. The longer leg is at least 2(sqrt 2 - 1) m^2 > 0.82 m^2.
  for (std::int64_t m = 2; 41 * m * m <= 50 * max_edge; ++m) {
    for (std::int64_t n = (m % 2 == 0) ? 1 : 2; n < m; n += 2) {
      if (std::gcd(m, n) != 1) continue;
      const std::int64_t a = m * m - n * n;
      const std::int64_t b = 2 * m * n;
      const std::int64_t lo = std::min(a, b);
      const std::int64_t hi = std::max(a, b);
      for (std::int64_t k = 1; k * hi <= max_edge; ++k) pairs.push_back({k * lo, k * hi});
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

SearchReport search_bricks(std::int64_t max_edge, bool primitive_only, unsigned jobs) {
  check_edge_bound(max_edge);
  const auto start = std::chrono::steady_clock::now();

  const auto pairs = pythagorean_pairs(max_edge);
  // lower[x] = sorted y < x with x^2 + y^2 square
  std::vector<std::vector<std::int64_t>> lower(static_cast<std::size_t>(max_edge) + 1);
  for (const auto& [a, b] : pairs) lower[static_cast<std::size_t>(b)].push_back(a);

  jobs = std::max(1U, jobs);
  std::vector<std::vector<Brick>> partial(jobs);
  const auto scan = [&](std::size_t begin, std::size_t end, std::vector<Brick>& out) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const auto [x2, x3] = pairs[idx];
      const std::int64_t x2_sq = sq(x2);
      for (const std::int64_t x1 : lower[static_cast<std::size_t>(x3)]) {
        if (x1 >= x2) break;
        if (!is_square64(checked_add(sq(x1), x2_sq))) continue;
        Brick b = make_brick(x1, x2, x3);
        if (!primitive_only || b.primitive) out.push_back(b);
      }
    }
  };
  const std::size_t chunk = pairs.size() / jobs;
  const std::size_t extra = pairs.size() % jobs;
  std::vector<std::thread> workers;
  std::size_t begin = 0;
  for (unsigned j = 0; j < jobs; ++j) {
    const std::size_t end = begin + chunk + (j < extra ? 1 : 0);
    if (jobs == 1) {
      scan(begin, end, partial[j]);
    } else {
      workers.emplace_back([&scan, &partial, j, begin, end] { scan(begin, end, partial[j]); });
    }
    begin = end;
  }
  for (auto& w : workers) w.join();

  SearchReport report;
  report.max_edge = max_edge;
  report.primitive_only = primitive_only;
  report.scanned_pairs = pairs.size();
  for (auto& p : partial) report.bricks.insert(report.bricks.end(), p.begin(), p.end());
  std::sort(report.bricks.begin(), report.bricks.end());
  for (const auto& b : report.bricks) {
    if (!check_perfect_absence(std::vector<Brick>{b}).absent) report.perfect_found.push_back(b);
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

PerfectAbsence check_perfect_absence(const std::vector<Brick>& bricks) {
  PerfectAbsence out;
  for (const auto& b : bricks) {
    ++out.bricks_checked;
    BigInteger sum;
    for (const auto e : b.edges) sum += BigInteger(static_cast<long>(e)) * BigInteger(static_cast<long>(e));
    if (is_perfect_square(sum)) {
      out.absent = false;
      out.witness = b;
      return out;
    }
  }
  return out;
}

PerfectAbsence check_perfect_absence(std::int64_t max_edge, unsigned jobs) {
  return check_perfect_absence(search_bricks(max_edge, false, jobs).bricks);
}

}  // namespace cuboid
