#pragma once

// Empirical checks of the equivalence between the cuboid systems and their
// S3 factor systems on finite boxes of integer or rational tuples.
//
// Euler kind:   p1 = p2 = p3 = 0          vs  tp2 = ... = tp8 = 0
// Perfect kind: p0 = p1 = p2 = p3 = 0     vs  tp1 = ... = tp8 = 0
//
// Every cuboid solution is a factor solution. On boxes restricted to
// positive coordinates the converse must hold as well.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cuboid/cuboid_core.hpp"
#include "cuboid/rank_analysis.hpp"

namespace cuboid {

enum class SystemKind { Euler, Perfect };

std::string_view to_string(SystemKind kind);
SystemKind parse_system_kind(std::string_view text);

inline constexpr std::uint64_t kDefaultMaxTuples = 100'000'000;

bool satisfies_cuboid(const CuboidTuple& t, SystemKind kind);
bool satisfies_factor(const CuboidTuple& t, SystemKind kind);

/// Sorted reduced rationals n/d with |n| <= bound, 1 <= d <= denominator_cap
/// (strictly positive ones only when `positive`).
std::vector<Rational> box_values(std::int64_t bound, std::int64_t denominator_cap, bool positive);

struct ScanOptions {
  unsigned jobs = 1;
  std::uint64_t max_tuples = kDefaultMaxTuples;
};

using CaseHistogram = std::array<std::uint64_t, kAllCaseLabels.size()>;

struct EquivalenceReport {
  SystemKind kind = SystemKind::Euler;
  std::int64_t bound = 0;
  std::int64_t den_cap = 1;
  bool positive = false;
  std::uint64_t scanned = 0;
  std::vector<CuboidTuple> factor_solutions;
  std::vector<CuboidTuple> cuboid_solutions;
  /// Factor solutions that are not cuboid solutions.
  std::vector<CuboidTuple> mismatches;
  /// Cuboid solutions that fail the factor system; non-empty means a bug.
  std::vector<CuboidTuple> forward_violations;
  /// Mismatches with rank N = 3; non-empty means a bug.
  std::vector<CuboidTuple> dichotomy_violations;
  /// Rank-profile labels of the factor solutions.
  CaseHistogram case_histogram{};
  bool complete = true;

  /// The exit condition of the verification: no forward or dichotomy
  /// violations, and no mismatches on positive boxes.
  bool passed() const;
};

/// Scans every tuple of the box in lexicographic variable order (six
/// coordinates for Euler, seven for Perfect). Work is split into contiguous
/// index ranges; the report is identical for any job count. When the box holds
/// more than max_tuples tuples only the first max_tuples are scanned and the
/// report is marked incomplete.
EquivalenceReport verify_equivalence_box(std::int64_t bound, std::int64_t denominator_cap, SystemKind kind,
                                         bool positive, const ScanOptions& options = {});

struct CaseViolation {
  char assertion;  // 'a', 'b' or 'c'
  CuboidTuple tuple;
  std::string detail;
};

struct CaseTheoremReport {
  SystemKind kind = SystemKind::Euler;
  std::int64_t bound = 0;
  std::uint64_t scanned = 0;
  std::vector<CuboidTuple> factor_solutions;
  CaseHistogram case_histogram{};
  std::vector<CaseViolation> violations;
  /// Nonzero (s, a) with s^2 = 2 a^2 among box values or case witnesses.
  std::vector<std::array<Rational, 2>> sqrt2_counterexamples;
  bool complete = true;

  bool passed() const { return violations.empty() && sqrt2_counterexamples.empty(); }
};

/// Integer box |coordinate| <= bound. For each factor solution:
///  (a) the label is neither Case_N1_2_N2_1 nor Case_N1_1_N2_2,
///  (b) a Case_N1_2_N2_2 solution has some zero x_i or d_i,
///  (c) a Rank1 solution satisfies the cuboid system.
CaseTheoremReport verify_case_theorems(std::int64_t bound, SystemKind kind, const ScanOptions& options = {});

}  // namespace cuboid
