#include "cuboid/sympoly.hpp"

#include <sstream>

namespace cuboid {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {"x1", "x2", "x3", "d1", "d2", "d3", "L"};

Var x_var(std::size_t i) { return static_cast<Var>(i); }
Var d_var(std::size_t i) { return static_cast<Var>(3 + i); }

// (x-exponent, d-exponent) of the cofactor attached to p_i in tp_k, k = 2..8.
constexpr std::array<std::array<std::uint16_t, 2>, 7> kCofactorShape = {{
    {0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {0, 2}, {2, 2},
}};

Monomial monomial_xd(std::size_t i, std::uint16_t xe, std::uint16_t de) {
  Monomial::Exponents e{};
  e[static_cast<std::size_t>(x_var(i))] = xe;
  e[static_cast<std::size_t>(d_var(i))] = de;
  return Monomial(e);
}

}  // namespace

Monomial Monomial::of(Var v, std::uint16_t power) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = power;
  return Monomial(e);
}

unsigned Monomial::total_degree() const {
  unsigned sum = 0;
  for (auto e : exps_) sum += e;
  return sum;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial::Exponents e{};
  for (std::size_t i = 0; i < kNumVars; ++i) e[i] = static_cast<std::uint16_t>(a.exps_[i] + b.exps_[i]);
  return Monomial(e);
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  return a.exps_ <=> b.exps_;
}

// ---------------------------------------------------------------------------

MultiPoly::MultiPoly(Rational constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, std::move(constant));
}

MultiPoly MultiPoly::var(Var v) { return term(Rational(1), Monomial::of(v)); }

MultiPoly MultiPoly::term(Rational coeff, Monomial m) {
  MultiPoly p;
  p.add_term(m, coeff);
  return p;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  // Graded order: the leading term has the largest total degree.
  return static_cast<int>(terms_.begin()->first.total_degree());
}

bool MultiPoly::involves(Var v) const {
  for (const auto& [m, c] : terms_) {
    if (m[v] != 0) return true;
  }
  return false;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    if (first) {
      if (coeff.sign() < 0) os << '-';
    } else {
      os << (coeff.sign() < 0 ? " - " : " + ");
    }
    first = false;
    coeff = abs(coeff);
    const bool constant = m.total_degree() == 0;
    if (constant || coeff != Rational(1)) {
      os << coeff;
      if (!constant) os << '*';
    }
    bool first_var = true;
    for (std::size_t v = 0; v < kNumVars; ++v) {
      const auto e = m.exponents()[v];
      if (e == 0) continue;
      if (!first_var) os << '*';
      first_var = false;
      os << kVarNames[v];
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

MultiPoly pow(const MultiPoly& p, unsigned exponent) {
  MultiPoly out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= p;
  return out;
}

// ---------------------------------------------------------------------------

MultiPoly poly_template(PolyName name) {
  MultiPoly out;
  const auto sq = [](Var v) { return Monomial::of(v, 2); };
  switch (name) {
    case PolyName::p0:
    case PolyName::tp1:
      return MultiPoly::term(1, sq(Var::x1)) + MultiPoly::term(1, sq(Var::x2)) +
             MultiPoly::term(1, sq(Var::x3)) + MultiPoly::term(-1, sq(Var::L));
    case PolyName::p1:
    case PolyName::p2:
    case PolyName::p3: {
      const auto i = static_cast<std::size_t>(name) - 1;
      return MultiPoly::term(1, sq(x_var((i + 1) % 3))) + MultiPoly::term(1, sq(x_var((i + 2) % 3))) +
             MultiPoly::term(-1, sq(d_var(i)));
    }
    default: break;
  }
  // tp_k = sum_i x_i^a d_i^b (x_{i+1}^2 + x_{i+2}^2 - d_i^2), written out term by term.
  const auto k = static_cast<std::size_t>(name) - static_cast<std::size_t>(PolyName::tp2);
  const auto [xe, de] = kCofactorShape[k];
  for (std::size_t i = 0; i < 3; ++i) {
    const Monomial base = monomial_xd(i, xe, de);
    out += MultiPoly::term(1, base * sq(x_var((i + 1) % 3)));
    out += MultiPoly::term(1, base * sq(x_var((i + 2) % 3)));
    out += MultiPoly::term(-1, base * sq(d_var(i)));
  }
  return out;
}

MultiPoly apply_sigma(const Permutation3& sigma, const MultiPoly& p) {
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial::Exponents e{};
    const auto& src = m.exponents();
    for (std::size_t i = 0; i < 3; ++i) {
      const auto target = static_cast<std::size_t>(sigma(static_cast<int>(i)));
      e[target] = src[i];
      e[3 + target] = src[3 + i];
    }
    e[6] = src[6];
    out += MultiPoly::term(c, Monomial(e));
  }
  return out;
}

bool is_multisymmetric(const MultiPoly& p) {
  for (const auto& sigma : Permutation3::all()) {
    if (apply_sigma(sigma, p) != p) return false;
  }
  return true;
}

Rational eval_poly(const MultiPoly& p, const CuboidTuple& t) {
  if (p.involves(Var::L)) t.space_diagonal("polynomial evaluation");
  const std::array<const Rational*, kNumVars> values = {
      &t.x[0], &t.x[1], &t.x[2], &t.d[0], &t.d[1], &t.d[2], t.L ? &*t.L : nullptr};
  Rational sum;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (std::size_t v = 0; v < kNumVars; ++v) {
      for (std::uint16_t e = 0; e < m.exponents()[v]; ++e) term *= *values[v];
    }
    sum += term;
  }
  return sum;
}

bool verify_certificate(const CofactorCertificate& c) {
  MultiPoly combination;
  for (std::size_t i = 0; i < 3; ++i) {
    combination += c.cofactors[i] * poly_template(static_cast<PolyName>(i + 1));
  }
  if (c.p0_cofactor) combination += *c.p0_cofactor * poly_template(PolyName::p0);
  return combination == c.target;
}

std::vector<CofactorCertificate> builtin_certificates() {
  std::vector<CofactorCertificate> certs;
  CofactorCertificate tp1;
  tp1.name = "tp1";
  tp1.target = poly_template(PolyName::tp1);
  tp1.cofactors = {MultiPoly(), MultiPoly(), MultiPoly()};
  tp1.p0_cofactor = MultiPoly(1);
  certs.push_back(std::move(tp1));

  for (std::size_t k = 0; k < kCofactorShape.size(); ++k) {
    const auto name = static_cast<PolyName>(static_cast<std::size_t>(PolyName::tp2) + k);
    const auto [xe, de] = kCofactorShape[k];
    CofactorCertificate cert;
    cert.name = std::string(to_string(name));
    cert.target = poly_template(name);
    for (std::size_t i = 0; i < 3; ++i) {
      cert.cofactors[i] = pow(MultiPoly::var(x_var(i)), xe) * pow(MultiPoly::var(d_var(i)), de);
    }
    certs.push_back(std::move(cert));
  }
  return certs;
}

}  // namespace cuboid
