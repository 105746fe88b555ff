#pragma once

// JSON and CSV forms of reports, certificates and classifications.
// Rationals are always written as strings "n" or "n/d"; object keys keep the
// documented order.

#include <string>

#include "json.hpp"

#include "cuboid/brick_search.hpp"
#include "cuboid/equivalence.hpp"
#include "cuboid/rank_analysis.hpp"
#include "cuboid/sympoly.hpp"

namespace cuboid {

using Json = nlohmann::ordered_json;

/// Seven entries in the fixed variable order; L is null when absent.
Json tuple_to_json(const CuboidTuple& t);

/// [{"exps": [7 ints], "num": "...", "den": "..."}, ...]
Json poly_to_json(const MultiPoly& p);
/// Throws DomainError on schema violations.
MultiPoly poly_from_json(const Json& j);

/// {"target": <poly>, "cofactors": [<poly>...], "includes_p0": bool}. When
/// includes_p0 is true the cofactor list is (c0, c1, c2, c3), otherwise
/// (c1, c2, c3).
Json certificate_to_json(const CofactorCertificate& c);
CofactorCertificate certificate_from_json(const Json& j);

Json classification_to_json(const Classification& c);

Json case_histogram_to_json(const CaseHistogram& h);

/// {"kind", "bound", "den_cap", "positive", "scanned", "factor_solutions",
///  "cuboid_solutions", "mismatches", "case_histogram", "complete"}
Json equivalence_report_to_json(const EquivalenceReport& r);

Json case_theorem_report_to_json(const CaseTheoremReport& r);

/// Timing is left out unless requested so that reports stay byte-identical
/// across runs and job counts.
Json search_report_to_json(const SearchReport& r, bool include_timing = false);
/// Header x1,x2,x3,d1,d2,d3,primitive followed by one row per brick.
std::string search_report_to_csv(const SearchReport& r);

}  // namespace cuboid
