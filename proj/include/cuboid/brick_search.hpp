#pragma once

// Exhaustive Euler brick search with Pythagorean-pair pruning.
//
// All arithmetic runs on 64-bit integers. For max_edge <= 10^6 every
// intermediate (sums of three squared edges) stays below 3*10^12, far from
// 2^63; larger bounds are rejected.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cuboid/cuboid_core.hpp"

namespace cuboid {

inline constexpr std::int64_t kMaxSearchEdge = 1'000'000;

/// Edges ascending; d_i is the diagonal of the face not containing x_i.
struct Brick {
  std::array<std::int64_t, 3> edges{};
  std::array<std::int64_t, 3> diagonals{};
  bool primitive = false;

  CuboidTuple to_tuple() const;
  friend auto operator<=>(const Brick&, const Brick&) = default;
};

struct SearchReport {
  std::int64_t max_edge = 0;
  bool primitive_only = false;
  std::vector<Brick> bricks;  // sorted by edges
  /// Bricks whose space diagonal is an integer too.
  std::vector<Brick> perfect_found;
  /// Pythagorean (x2, x3) pairs examined as the two longer edges.
  std::uint64_t scanned_pairs = 0;
  double wall_time_ms = 0.0;
};

/// floor(sqrt(n)) for 0 <= n < 2^63.
std::int64_t isqrt64(std::int64_t n);
/// Exact square test for 0 <= n < 2^63 with the same residue pre-filter as
/// the BigInteger version.
bool is_square64(std::int64_t n);

/// Sorted pairs (a, b), a < b <= max_edge, with a^2 + b^2 a perfect square,
/// generated from Euclid's parametrisation.
std::vector<std::array<std::int64_t, 2>> pythagorean_pairs(std::int64_t max_edge);

/// All bricks with x1 < x2 < x3 <= max_edge. Throws DomainError when
/// max_edge is outside [1, kMaxSearchEdge]. Output is identical for any job
/// count.
SearchReport search_bricks(std::int64_t max_edge, bool primitive_only, unsigned jobs = 1);

struct PerfectAbsence {
  bool absent = true;
  std::optional<Brick> witness;
  std::size_t bricks_checked = 0;
};

/// Checks x1^2 + x2^2 + x3^2 for every brick with x3 <= max_edge using the
/// exact BigInteger square test.
PerfectAbsence check_perfect_absence(std::int64_t max_edge, unsigned jobs = 1);
PerfectAbsence check_perfect_absence(const std::vector<Brick>& bricks);

}  // namespace cuboid
