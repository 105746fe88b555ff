#include "cuboid/cuboid_core.hpp"

#include <algorithm>
#include <sstream>

namespace cuboid {

namespace {

constexpr std::array<std::string_view, 12> kPolyNames = {"p0",  "p1",  "p2",  "p3",  "tp1", "tp2",
                                                         "tp3", "tp4", "tp5", "tp6", "tp7", "tp8"};

// Coefficient of p_{i+1} in tp_k, k in 2..8.
Rational coefficient(int k, std::size_t i, const CuboidTuple& t) {
  const Rational& x = t.x[i];
  const Rational& d = t.d[i];
  switch (k) {
    case 2: return Rational(1);
    case 3: return d;
    case 4: return x;
    case 5: return x * d;
    case 6: return square(x);
    case 7: return square(d);
    case 8: return square(x * d);
    default: throw DomainError("factor index out of range: " + std::to_string(k));
  }
}

Rational p_value(std::size_t i, const CuboidTuple& t) {
  // p_i = (sum of the other two squared edges) - d_i^2
  const std::size_t a = (i + 1) % 3;
  const std::size_t b = (i + 2) % 3;
  return square(t.x[a]) + square(t.x[b]) - square(t.d[i]);
}

Rational p0_value(const CuboidTuple& t, std::string_view what) {
  const Rational& L = t.space_diagonal(what);
  return square(t.x[0]) + square(t.x[1]) + square(t.x[2]) - square(L);
}

}  // namespace

CuboidTuple CuboidTuple::from_values(std::initializer_list<Rational> values) {
  if (values.size() != 6 && values.size() != 7) {
    throw DomainError("a cuboid tuple needs 6 or 7 values, got " + std::to_string(values.size()));
  }
  CuboidTuple t;
  auto it = values.begin();
  for (auto& v : t.x) v = *it++;
  for (auto& v : t.d) v = *it++;
  if (it != values.end()) t.L = *it;
  return t;
}

const Rational& CuboidTuple::space_diagonal(std::string_view what) const {
  if (!L) throw DomainError(std::string(what) + " requires the space diagonal L");
  return *L;
}

std::string to_string(const CuboidTuple& t) {
  std::ostringstream os;
  os << '(' << t.x[0] << ',' << t.x[1] << ',' << t.x[2] << ',' << t.d[0] << ',' << t.d[1] << ','
     << t.d[2];
  if (t.L) os << ',' << *t.L;
  os << ')';
  return os.str();
}

Permutation3 Permutation3::from_images(std::array<int, 3> one_based) {
  std::array<int, 3> sorted = one_based;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{1, 2, 3}) {
    throw DomainError("not a permutation of {1,2,3}");
  }
  Permutation3 p;
  for (std::size_t i = 0; i < 3; ++i) p.images_[i] = static_cast<std::uint8_t>(one_based[i] - 1);
  return p;
}

const std::array<Permutation3, 6>& Permutation3::all() {
  static const std::array<Permutation3, 6> elements = {
      from_images({1, 2, 3}), from_images({1, 3, 2}), from_images({2, 1, 3}),
      from_images({2, 3, 1}), from_images({3, 1, 2}), from_images({3, 2, 1}),
  };
  return elements;
}

std::array<int, 3> Permutation3::images() const {
  return {images_[0] + 1, images_[1] + 1, images_[2] + 1};
}

Permutation3 Permutation3::inverse() const {
  Permutation3 inv;
  for (std::uint8_t i = 0; i < 3; ++i) inv.images_[images_[i]] = i;
  return inv;
}

Permutation3 operator*(const Permutation3& a, const Permutation3& b) {
  Permutation3 c;
  for (std::size_t i = 0; i < 3; ++i) c.images_[i] = a.images_[b.images_[i]];
  return c;
}

CuboidTuple act(const Permutation3& sigma, const CuboidTuple& t) {
  CuboidTuple out;
  for (int i = 0; i < 3; ++i) {
    const auto src = static_cast<std::size_t>(sigma(i));
    out.x[static_cast<std::size_t>(i)] = t.x[src];
    out.d[static_cast<std::size_t>(i)] = t.d[src];
  }
  out.L = t.L;
  return out;
}

Rational eval_p(int index, const CuboidTuple& t) {
  if (index == 0) return p0_value(t, "p0");
  if (index < 1 || index > 3) throw DomainError("p index out of range: " + std::to_string(index));
  return p_value(static_cast<std::size_t>(index - 1), t);
}

Rational factor_from_p(int k, const std::array<Rational, 3>& p, const CuboidTuple& t) {
  if (k < 2 || k > 8) throw DomainError("factor index out of range: " + std::to_string(k));
  Rational sum;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!p[i].is_zero()) sum += coefficient(k, i, t) * p[i];
  }
  return sum;
}

std::array<Rational, 7> factors_from_p(const std::array<Rational, 3>& p, const CuboidTuple& t) {
  std::array<Rational, 7> out;
  for (int k = 2; k <= 8; ++k) out[static_cast<std::size_t>(k - 2)] = factor_from_p(k, p, t);
  return out;
}

Rational eval_factor(int index, const CuboidTuple& t) {
  if (index == 1) return p0_value(t, "tp1");
  if (index < 2 || index > 8) throw DomainError("factor index out of range: " + std::to_string(index));
  const std::array<Rational, 3> p = {p_value(0, t), p_value(1, t), p_value(2, t)};
  return factor_from_p(index, p, t);
}

const Rational& ResidualVector::factor(int k) const {
  if (k < 2 || k > 8) throw DomainError("factor index out of range: " + std::to_string(k));
  return tp[static_cast<std::size_t>(k - 2)];
}

ResidualVector residuals(const CuboidTuple& t, bool perfect) {
  ResidualVector r;
  if (perfect) {
    r.p0 = p0_value(t, "perfect residuals");
    r.tp1 = r.p0;
  }
  r.p = {p_value(0, t), p_value(1, t), p_value(2, t)};
  r.tp = factors_from_p(r.p, t);
  return r;
}

PolyName parse_poly_name(std::string_view name) {
  const auto it = std::find(kPolyNames.begin(), kPolyNames.end(), name);
  if (it == kPolyNames.end()) throw DomainError("unknown polynomial name: '" + std::string(name) + "'");
  return static_cast<PolyName>(it - kPolyNames.begin());
}

std::string_view to_string(PolyName name) { return kPolyNames[static_cast<std::size_t>(name)]; }

bool needs_space_diagonal(PolyName name) { return name == PolyName::p0 || name == PolyName::tp1; }

Rational evaluate(PolyName name, const CuboidTuple& t) {
  const int idx = static_cast<int>(name);
  if (idx <= 3) return eval_p(idx, t);
  return eval_factor(idx - 3, t);
}

}  // namespace cuboid
