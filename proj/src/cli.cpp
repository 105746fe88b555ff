#include "cuboid/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "cuboid/brick_search.hpp"
#include "cuboid/equivalence.hpp"
#include "cuboid/rank_analysis.hpp"
#include "cuboid/report_json.hpp"
#include "cuboid/sympoly.hpp"

namespace cuboid::cli {

namespace {

struct Options {
  std::string tuple;
  std::string poly;
  std::string only;
  std::string cert_path;
  std::int64_t bound = 0;
  std::int64_t den_cap = 1;
  std::string kind = "euler";
  bool positive = false;
  unsigned jobs = 1;
  std::string out_path;
  std::int64_t max_edge = 0;
  bool primitive_only = false;
  std::string format = "json";
  bool timing = false;
};

// Writes to --out when given, else to the caller's stream.
void emit(const Options& opts, std::ostream& out, const std::string& text) {
  if (opts.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) throw DomainError("cannot open output file '" + opts.out_path + "'");
  file << text;
}

std::uint64_t max_tuples_from_env() {
  const char* raw = std::getenv("CUBOID_MAX_TUPLES");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxTuples;
  const BigInteger value = BigInteger::parse(raw);
  if (value.sign() <= 0 || !value.fits_int64()) throw DomainError("CUBOID_MAX_TUPLES must be a positive integer");
  return static_cast<std::uint64_t>(value.to_int64());
}

int cmd_eval(const Options& opts, std::ostream& out) {
  const CuboidTuple t = parse_tuple_literal(opts.tuple);
  const PolyName name = parse_poly_name(opts.poly);
  out << evaluate(name, t) << '\n';
  return kExitOk;
}

int cmd_classify(const Options& opts, std::ostream& out, std::ostream& err) {
  const CuboidTuple t = parse_tuple_literal(opts.tuple);
  try {
    emit(opts, out, classification_to_json(classify(t)).dump(2) + "\n");
  } catch (const ClassificationError& e) {
    err << "classification error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitOk;
}

std::vector<CofactorCertificate> load_certificates(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw DomainError("cannot open certificate file '" + path + "'");
  Json j;
  try {
    j = Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw DomainError("certificate file '" + path + "' is not valid JSON: " + e.what());
  }
  std::vector<CofactorCertificate> certs;
  if (j.is_array()) {
    for (const auto& item : j) certs.push_back(certificate_from_json(item));
  } else {
    certs.push_back(certificate_from_json(j));
  }
  for (std::size_t i = 0; i < certs.size(); ++i) {
    if (certs[i].name.empty()) certs[i].name = path + "#" + std::to_string(i);
  }
  return certs;
}

int cmd_check_identities(const Options& opts, std::ostream& out) {
  std::optional<PolyName> only;
  if (!opts.only.empty()) {
    only = parse_poly_name(opts.only);
    if (static_cast<int>(*only) < static_cast<int>(PolyName::tp1)) {
      throw DomainError("--only expects one of tp1..tp8");
    }
  }
  std::ostringstream lines;
  bool all_pass = true;
  const auto report = [&](bool ok, std::string_view what, std::string_view name) {
    all_pass = all_pass && ok;
    lines << (ok ? "PASS " : "FAIL ") << what << ' ' << name << '\n';
  };

  if (!opts.cert_path.empty()) {
    for (const auto& cert : load_certificates(opts.cert_path)) {
      report(verify_certificate(cert), "certificate", cert.name);
    }
  } else {
    for (int k = 1; k <= 8; ++k) {
      const auto name = static_cast<PolyName>(static_cast<int>(PolyName::tp1) + k - 1);
      if (only && *only != name) continue;
      report(is_multisymmetric(poly_template(name)), "multisymmetric", to_string(name));
    }
    for (const auto& cert : builtin_certificates()) {
      if (only && to_string(*only) != cert.name) continue;
      report(verify_certificate(cert), "certificate", cert.name);
    }
  }
  out << lines.str();
  return all_pass ? kExitOk : kExitVerificationFailed;
}

int cmd_verify_equivalence(const Options& opts, std::ostream& out, std::ostream& err) {
  ScanOptions scan;
  scan.jobs = opts.jobs;
  scan.max_tuples = max_tuples_from_env();
  const EquivalenceReport r =
      verify_equivalence_box(opts.bound, opts.den_cap, parse_system_kind(opts.kind), opts.positive, scan);
  emit(opts, out, equivalence_report_to_json(r).dump(2) + "\n");
  if (!r.passed()) {
    err << "equivalence verification failed: " << r.mismatches.size() << " mismatches, "
        << r.forward_violations.size() << " forward violations, " << r.dichotomy_violations.size()
        << " rank-3 mismatches\n";
    return kExitVerificationFailed;
  }
  if (!r.complete) {
    err << "report incomplete: tuple cap " << scan.max_tuples << " reached\n";
    return kExitIncomplete;
  }
  return kExitOk;
}

int cmd_verify_cases(const Options& opts, std::ostream& out, std::ostream& err) {
  ScanOptions scan;
  scan.jobs = opts.jobs;
  scan.max_tuples = max_tuples_from_env();
  const CaseTheoremReport r = verify_case_theorems(opts.bound, parse_system_kind(opts.kind), scan);
  emit(opts, out, case_theorem_report_to_json(r).dump(2) + "\n");
  if (!r.passed()) {
    err << "case verification failed: " << r.violations.size() << " violations\n";
    return kExitVerificationFailed;
  }
  if (!r.complete) {
    err << "report incomplete: tuple cap " << scan.max_tuples << " reached\n";
    return kExitIncomplete;
  }
  return kExitOk;
}

int cmd_search(const Options& opts, std::ostream& out) {
  const SearchReport r = search_bricks(opts.max_edge, opts.primitive_only, opts.jobs);
  if (opts.format == "csv") {
    emit(opts, out, search_report_to_csv(r));
  } else {
    emit(opts, out, search_report_to_json(r, opts.timing).dump(2) + "\n");
  }
  return kExitOk;
}

}  // namespace

CuboidTuple parse_tuple_literal(std::string_view text) {
  std::vector<Rational> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view part = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    values.push_back(Rational::parse(part));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (values.size() != 6 && values.size() != 7) {
    throw DomainError("tuple literal needs 6 or 7 comma-separated values, got " + std::to_string(values.size()));
  }
  CuboidTuple t;
  for (std::size_t i = 0; i < 3; ++i) {
    t.x[i] = values[i];
    t.d[i] = values[3 + i];
  }
  if (values.size() == 7) t.L = values[6];
  return t;
}

std::string format_tuple_literal(const CuboidTuple& t) {
  std::string s;
  for (const auto& v : t.x) s += v.to_string() + ",";
  for (const auto& v : t.d) s += v.to_string() + ",";
  if (t.L) {
    s += t.L->to_string();
  } else {
    s.pop_back();
  }
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Exact evaluation, classification and search for cuboid Diophantine systems", "cuboid_cli"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "Evaluate p0..p3 or tp1..tp8 at a tuple");
  eval->add_option("--tuple", opts.tuple, "x1,x2,x3,d1,d2,d3[,L]")->required();
  eval->add_option("--poly", opts.poly, "p0..p3 or tp1..tp8")->required();

  auto* cls = app.add_subcommand("classify", "Rank profile and case witness of a tuple");
  cls->add_option("--tuple", opts.tuple, "x1,x2,x3,d1,d2,d3[,L]")->required();
  cls->add_option("--out", opts.out_path, "Write the JSON here instead of stdout");

  auto* ident = app.add_subcommand("check-identities", "Multisymmetry and cofactor certificate checks");
  ident->add_option("--only", opts.only, "Check a single factor polynomial (tp1..tp8)");
  ident->add_option("--cert", opts.cert_path, "Verify the certificates in this JSON file instead");

  auto* equiv = app.add_subcommand("verify-equivalence", "Compare cuboid and factor solutions on a box");
  equiv->add_option("--bound", opts.bound, "Numerator bound")->required()->check(CLI::NonNegativeNumber);
  equiv->add_option("--den-cap", opts.den_cap, "Denominator cap")->check(CLI::PositiveNumber);
  equiv->add_option("--kind", opts.kind, "euler or perfect")->check(CLI::IsMember({"euler", "perfect"}));
  equiv->add_flag("--positive", opts.positive, "Only strictly positive coordinates");
  equiv->add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  equiv->add_option("--out", opts.out_path, "Write the report here instead of stdout");

  auto* cases = app.add_subcommand("verify-cases", "Check the per-case no-solution results on an integer box");
  cases->add_option("--bound", opts.bound, "Coordinate bound")->required()->check(CLI::NonNegativeNumber);
  cases->add_option("--kind", opts.kind, "euler or perfect")->check(CLI::IsMember({"euler", "perfect"}));
  cases->add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cases->add_option("--out", opts.out_path, "Write the report here instead of stdout");

  auto* search = app.add_subcommand("search", "Exhaustive Euler brick search");
  search->add_option("--max-edge", opts.max_edge, "Largest edge")->required();
  search->add_flag("--primitive-only", opts.primitive_only, "Only bricks with coprime edges");
  search->add_option("--format", opts.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  search->add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_option("--out", opts.out_path, "Write the report here instead of stdout");
  search->add_flag("--timing", opts.timing, "Include wall time in the JSON report");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("cuboid_cli");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(opts, out);
    if (cls->parsed()) return cmd_classify(opts, out, err);
    if (ident->parsed()) return cmd_check_identities(opts, out);
    if (equiv->parsed()) return cmd_verify_equivalence(opts, out, err);
    if (cases->parsed()) return cmd_verify_cases(opts, out, err);
    if (search->parsed()) return cmd_search(opts, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cuboid::cli
