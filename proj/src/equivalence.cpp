#include "cuboid/equivalence.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <thread>

namespace cuboid {

namespace {

struct TupleEvaluation {
  bool cuboid = false;
  bool factor = false;
};

TupleEvaluation evaluate_systems(const CuboidTuple& t, SystemKind kind) {
  TupleEvaluation e;
  const std::array<Rational, 3> p = {eval_p(1, t), eval_p(2, t), eval_p(3, t)};
  bool p0_zero = true;
  if (kind == SystemKind::Perfect) p0_zero = eval_p(0, t).is_zero();  // p0 and tp1 coincide
  e.cuboid = p0_zero && std::all_of(p.begin(), p.end(), [](const Rational& v) { return v.is_zero(); });
  if (e.cuboid) {
    // Still evaluated: the forward implication is checked, not assumed.
    e.factor = std::ranges::all_of(factors_from_p(p, t), [](const Rational& v) { return v.is_zero(); });
    return e;
  }
  e.factor = p0_zero;
  for (int k = 2; k <= 8 && e.factor; ++k) e.factor = factor_from_p(k, p, t).is_zero();
  return e;
}

std::size_t dimension(SystemKind kind) { return kind == SystemKind::Perfect ? 7 : 6; }

std::uint64_t saturating_power(std::uint64_t base, std::size_t exponent) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= base;
  }
  return out;
}

// Walks tuple indices [begin, end) of values^dim in lexicographic order,
// last coordinate fastest.
template <typename Visit>
void walk_box(const std::vector<Rational>& values, std::size_t dim, std::uint64_t begin, std::uint64_t end,
              Visit&& visit) {
  if (begin >= end) return;
  const std::uint64_t base = values.size();
  std::vector<std::uint64_t> digits(dim);
  std::uint64_t rest = begin;
  for (std::size_t i = dim; i-- > 0;) {
    digits[i] = rest % base;
    rest /= base;
  }
  CuboidTuple t;
  const auto assign = [&](std::size_t i) {
    const Rational& v = values[digits[i]];
    if (i < 3) {
      t.x[i] = v;
    } else if (i < 6) {
      t.d[i - 3] = v;
    } else {
      t.L = v;
    }
  };
  for (std::size_t i = 0; i < dim; ++i) assign(i);
  for (std::uint64_t index = begin; index < end; ++index) {
    visit(t);
    for (std::size_t i = dim; i-- > 0;) {
      if (++digits[i] < base) {
        assign(i);
        break;
      }
      digits[i] = 0;
      assign(i);
    }
  }
}

// Runs `scan(begin, end)` over `jobs` contiguous slices of [0, count) and
// returns the partial results in slice order.
template <typename Partial, typename Scan>
std::vector<Partial> run_partitioned(std::uint64_t count, unsigned jobs, Scan scan) {
  jobs = std::max(1U, jobs);
  std::vector<Partial> partials(jobs);
  const std::uint64_t chunk = count / jobs;
  const std::uint64_t extra = count % jobs;
  std::vector<std::thread> workers;
  std::uint64_t begin = 0;
  for (unsigned j = 0; j < jobs; ++j) {
    const std::uint64_t end = begin + chunk + (j < extra ? 1 : 0);
    if (jobs == 1) {
      partials[j] = scan(begin, end);
    } else {
      workers.emplace_back([&partials, &scan, j, begin, end] { partials[j] = scan(begin, end); });
    }
    begin = end;
  }
  for (auto& w : workers) w.join();
  return partials;
}

template <typename T>
void append(std::vector<T>& into, std::vector<T>&& from) {
  into.insert(into.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
}

void add_histogram(CaseHistogram& into, const CaseHistogram& from) {
  for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
}

bool has_zero_coordinate(const CuboidTuple& t) {
  const auto zero = [](const Rational& v) { return v.is_zero(); };
  return std::ranges::any_of(t.x, zero) || std::ranges::any_of(t.d, zero);
}

bool is_sqrt2_pair(const Rational& s, const Rational& a) {
  return !s.is_zero() && !a.is_zero() && square(s) == Rational(2) * square(a);
}

}  // namespace

std::string_view to_string(SystemKind kind) { return kind == SystemKind::Perfect ? "perfect" : "euler"; }

SystemKind parse_system_kind(std::string_view text) {
  if (text == "euler") return SystemKind::Euler;
  if (text == "perfect") return SystemKind::Perfect;
  throw DomainError("unknown system kind: '" + std::string(text) + "'");
}

bool satisfies_cuboid(const CuboidTuple& t, SystemKind kind) {
  if (kind == SystemKind::Perfect) t.space_diagonal("perfect cuboid system");
  return evaluate_systems(t, kind).cuboid;
}

bool satisfies_factor(const CuboidTuple& t, SystemKind kind) {
  if (kind == SystemKind::Perfect) t.space_diagonal("perfect factor system");
  return evaluate_systems(t, kind).factor;
}

std::vector<Rational> box_values(std::int64_t bound, std::int64_t denominator_cap, bool positive) {
  if (bound < 0) throw DomainError("bound must be non-negative");
  if (denominator_cap < 1) throw DomainError("denominator cap must be at least 1");
  std::vector<Rational> values;
  for (std::int64_t den = 1; den <= denominator_cap; ++den) {
    for (std::int64_t num = positive ? 1 : -bound; num <= bound; ++num) {
      if (num == 0 && den != 1) continue;
      if (num != 0 && std::gcd(num, den) != 1) continue;
      values.emplace_back(BigInteger(num), BigInteger(den));
    }
  }
  std::sort(values.begin(), values.end());
  return values;
}

bool EquivalenceReport::passed() const {
  if (!forward_violations.empty() || !dichotomy_violations.empty()) return false;
  return !positive || mismatches.empty();
}

EquivalenceReport verify_equivalence_box(std::int64_t bound, std::int64_t denominator_cap, SystemKind kind,
                                         bool positive, const ScanOptions& options) {
  const std::vector<Rational> values = box_values(bound, denominator_cap, positive);
  const std::size_t dim = dimension(kind);
  const std::uint64_t total = saturating_power(values.size(), dim);
  const std::uint64_t limit = std::min(total, options.max_tuples);

  EquivalenceReport report;
  report.kind = kind;
  report.bound = bound;
  report.den_cap = denominator_cap;
  report.positive = positive;
  report.complete = limit == total;

  auto partials = run_partitioned<EquivalenceReport>(limit, options.jobs, [&](std::uint64_t b, std::uint64_t e) {
    EquivalenceReport part;
    walk_box(values, dim, b, e, [&](const CuboidTuple& t) {
      ++part.scanned;
      const TupleEvaluation eval = evaluate_systems(t, kind);
      if (eval.cuboid) part.cuboid_solutions.push_back(t);
      if (eval.cuboid && !eval.factor) part.forward_violations.push_back(t);
      if (!eval.factor) return;
      part.factor_solutions.push_back(t);
      ++part.case_histogram[static_cast<std::size_t>(rank_profile(t).label)];
      if (!eval.cuboid) {
        part.mismatches.push_back(t);
        if (rank(build_N(t)) == 3) part.dichotomy_violations.push_back(t);
      }
    });
    return part;
  });

  for (auto& part : partials) {
    report.scanned += part.scanned;
    append(report.factor_solutions, std::move(part.factor_solutions));
    append(report.cuboid_solutions, std::move(part.cuboid_solutions));
    append(report.mismatches, std::move(part.mismatches));
    append(report.forward_violations, std::move(part.forward_violations));
    append(report.dichotomy_violations, std::move(part.dichotomy_violations));
    add_histogram(report.case_histogram, part.case_histogram);
  }
  return report;
}

CaseTheoremReport verify_case_theorems(std::int64_t bound, SystemKind kind, const ScanOptions& options) {
  const std::vector<Rational> values = box_values(bound, 1, false);
  const std::size_t dim = dimension(kind);
  const std::uint64_t total = saturating_power(values.size(), dim);
  const std::uint64_t limit = std::min(total, options.max_tuples);

  CaseTheoremReport report;
  report.kind = kind;
  report.bound = bound;
  report.complete = limit == total;

  for (const auto& s : values) {
    for (const auto& a : values) {
      if (is_sqrt2_pair(s, a)) report.sqrt2_counterexamples.push_back({s, a});
    }
  }

  auto partials = run_partitioned<CaseTheoremReport>(limit, options.jobs, [&](std::uint64_t b, std::uint64_t e) {
    CaseTheoremReport part;
    walk_box(values, dim, b, e, [&](const CuboidTuple& t) {
      ++part.scanned;
      const TupleEvaluation eval = evaluate_systems(t, kind);
      if (!eval.factor) return;
      part.factor_solutions.push_back(t);
      Classification c;
      try {
        c = classify(t);
      } catch (const ClassificationError& err) {
        part.violations.push_back({'a', t, err.what()});
        return;
      }
      ++part.case_histogram[static_cast<std::size_t>(c.profile.label)];
      const CaseWitness& w = c.witness;
      switch (c.profile.label) {
        case CaseLabel::Case_N1_2_N2_1:
          part.violations.push_back({'a', t, "factor solution with rank N1 = 2, rank N2 = 1"});
          if (is_sqrt2_pair(*w.s1, *w.alpha)) part.sqrt2_counterexamples.push_back({*w.s1, *w.alpha});
          if (is_sqrt2_pair(*w.s2, *w.alpha)) part.sqrt2_counterexamples.push_back({*w.s2, *w.alpha});
          break;
        case CaseLabel::Case_N1_1_N2_2:
          part.violations.push_back({'a', t, "factor solution with rank N1 = 1, rank N2 = 2"});
          if (is_sqrt2_pair(*w.delta, *w.r1)) part.sqrt2_counterexamples.push_back({*w.delta, *w.r1});
          break;
        case CaseLabel::Case_N1_2_N2_2:
          if (!has_zero_coordinate(t)) {
            part.violations.push_back({'b', t, "rank N1 = rank N2 = 2 factor solution without a zero coordinate"});
          }
          if (is_sqrt2_pair(*w.s2, *w.r1)) part.sqrt2_counterexamples.push_back({*w.s2, *w.r1});
          break;
        case CaseLabel::Rank1:
          if (!eval.cuboid) part.violations.push_back({'c', t, "rank N = 1 factor solution is not a cuboid solution"});
          break;
        case CaseLabel::FullRank:
          break;
      }
    });
    return part;
  });

  for (auto& part : partials) {
    report.scanned += part.scanned;
    append(report.factor_solutions, std::move(part.factor_solutions));
    append(report.violations, std::move(part.violations));
    append(report.sqrt2_counterexamples, std::move(part.sqrt2_counterexamples));
    add_histogram(report.case_histogram, part.case_histogram);
  }
  return report;
}

}  // namespace cuboid
