#include "cuboid/report_json.hpp"

#include <sstream>

namespace cuboid {

namespace {

Json rational_to_json(const Rational& v) { return v.to_string(); }

Json tuples_to_json(const std::vector<CuboidTuple>& tuples) {
  Json out = Json::array();
  for (const auto& t : tuples) out.push_back(tuple_to_json(t));
  return out;
}

Json brick_to_json(const Brick& b) {
  Json j;
  j["edges"] = b.edges;
  j["diagonals"] = b.diagonals;
  j["primitive"] = b.primitive;
  return j;
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing key '") + key + "'");
  return j.at(key);
}

}  // namespace

Json tuple_to_json(const CuboidTuple& t) {
  Json out = Json::array();
  for (const auto& v : t.x) out.push_back(rational_to_json(v));
  for (const auto& v : t.d) out.push_back(rational_to_json(v));
  out.push_back(t.L ? rational_to_json(*t.L) : Json(nullptr));
  return out;
}

Json poly_to_json(const MultiPoly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json term;
    term["exps"] = m.exponents();
    term["num"] = c.num().to_string();
    term["den"] = c.den().to_string();
    out.push_back(std::move(term));
  }
  return out;
}

MultiPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("polynomial must be a list of terms");
  MultiPoly out;
  for (const auto& term : j) {
    const Json& exps = require(term, "exps");
    if (!exps.is_array() || exps.size() != kNumVars) throw DomainError("'exps' must hold 7 exponents");
    Monomial::Exponents e{};
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (!exps[i].is_number_unsigned() || exps[i].get<std::uint64_t>() > 0xFFFF) {
        throw DomainError("exponents must be small non-negative integers");
      }
      e[i] = exps[i].get<std::uint16_t>();
    }
    const Json& num = require(term, "num");
    const Json& den = require(term, "den");
    if (!num.is_string() || !den.is_string()) throw DomainError("'num' and 'den' must be strings");
    out += MultiPoly::term(Rational(BigInteger::parse(num.get<std::string>()),
                                    BigInteger::parse(den.get<std::string>())),
                           Monomial(e));
  }
  return out;
}

Json certificate_to_json(const CofactorCertificate& c) {
  Json j;
  j["target"] = poly_to_json(c.target);
  Json cofactors = Json::array();
  if (c.p0_cofactor) cofactors.push_back(poly_to_json(*c.p0_cofactor));
  for (const auto& cf : c.cofactors) cofactors.push_back(poly_to_json(cf));
  j["cofactors"] = std::move(cofactors);
  j["includes_p0"] = c.p0_cofactor.has_value();
  return j;
}

CofactorCertificate certificate_from_json(const Json& j) {
  CofactorCertificate c;
  c.target = poly_from_json(require(j, "target"));
  const Json& includes = require(j, "includes_p0");
  if (!includes.is_boolean()) throw DomainError("'includes_p0' must be a boolean");
  const bool with_p0 = includes.get<bool>();
  const Json& cofactors = require(j, "cofactors");
  const std::size_t expected = with_p0 ? 4 : 3;
  if (!cofactors.is_array() || cofactors.size() != expected) {
    throw DomainError("'cofactors' must hold " + std::to_string(expected) + " polynomials");
  }
  std::size_t next = 0;
  if (with_p0) c.p0_cofactor = poly_from_json(cofactors[next++]);
  for (auto& cf : c.cofactors) cf = poly_from_json(cofactors[next++]);
  if (j.contains("name") && j["name"].is_string()) c.name = j["name"].get<std::string>();
  return c;
}

Json classification_to_json(const Classification& c) {
  Json j;
  j["rank_N"] = c.profile.rank_N;
  j["rank_N1"] = c.profile.rank_N1;
  j["rank_N2"] = c.profile.rank_N2;
  j["case"] = std::string(to_string(c.profile.label));
  Json w = Json::object();
  const CaseWitness& cw = c.witness;
  const std::pair<const char*, const std::optional<Rational>*> fields[] = {
      {"alpha", &cw.alpha}, {"beta", &cw.beta}, {"gamma", &cw.gamma}, {"delta", &cw.delta},
      {"epsilon", &cw.epsilon}, {"zeta", &cw.zeta}, {"s1", &cw.s1},       {"s2", &cw.s2},
      {"r1", &cw.r1},       {"r2", &cw.r2},     {"theta", &cw.theta},
  };
  for (const auto& [key, value] : fields) {
    if (*value) w[key] = rational_to_json(**value);
  }
  if (cw.normalizing) w["normalizing_permutation"] = cw.normalizing->images();
  j["witness"] = std::move(w);
  return j;
}

Json case_histogram_to_json(const CaseHistogram& h) {
  Json j = Json::object();
  for (const auto label : kAllCaseLabels) j[std::string(to_string(label))] = h[static_cast<std::size_t>(label)];
  return j;
}

Json equivalence_report_to_json(const EquivalenceReport& r) {
  Json j;
  j["kind"] = std::string(to_string(r.kind));
  j["bound"] = r.bound;
  j["den_cap"] = r.den_cap;
  j["positive"] = r.positive;
  j["scanned"] = r.scanned;
  j["factor_solutions"] = tuples_to_json(r.factor_solutions);
  j["cuboid_solutions"] = tuples_to_json(r.cuboid_solutions);
  j["mismatches"] = tuples_to_json(r.mismatches);
  j["case_histogram"] = case_histogram_to_json(r.case_histogram);
  j["complete"] = r.complete;
  return j;
}

Json case_theorem_report_to_json(const CaseTheoremReport& r) {
  Json j;
  j["kind"] = std::string(to_string(r.kind));
  j["bound"] = r.bound;
  j["scanned"] = r.scanned;
  j["factor_solutions"] = tuples_to_json(r.factor_solutions);
  j["case_histogram"] = case_histogram_to_json(r.case_histogram);
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json e;
    e["assertion"] = std::string(1, v.assertion);
    e["tuple"] = tuple_to_json(v.tuple);
    e["detail"] = v.detail;
    violations.push_back(std::move(e));
  }
  j["violations"] = std::move(violations);
  Json sqrt2 = Json::array();
  for (const auto& [s, a] : r.sqrt2_counterexamples) sqrt2.push_back({s.to_string(), a.to_string()});
  j["sqrt2_counterexamples"] = std::move(sqrt2);
  j["complete"] = r.complete;
  return j;
}

Json search_report_to_json(const SearchReport& r, bool include_timing) {
  Json j;
  j["max_edge"] = r.max_edge;
  j["primitive_only"] = r.primitive_only;
  Json bricks = Json::array();
  for (const auto& b : r.bricks) bricks.push_back(brick_to_json(b));
  j["bricks"] = std::move(bricks);
  Json perfect = Json::array();
  for (const auto& b : r.perfect_found) perfect.push_back(brick_to_json(b));
  j["perfect_found"] = std::move(perfect);
  j["scanned_pairs"] = r.scanned_pairs;
  if (include_timing) j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

std::string search_report_to_csv(const SearchReport& r) {
  std::ostringstream os;
  os << "x1,x2,x3,d1,d2,d3,primitive\n";
  for (const auto& b : r.bricks) {
    os << b.edges[0] << ',' << b.edges[1] << ',' << b.edges[2] << ',' << b.diagonals[0] << ','
       << b.diagonals[1] << ',' << b.diagonals[2] << ',' << (b.primitive ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace cuboid
