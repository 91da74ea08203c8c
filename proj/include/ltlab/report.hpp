#pragma once

// JSON and CSV renderings of every report. All numbers are exact: integers,
// "a/b" strings for rationals, coordinate vectors for cyclotomic values.

#include <string>

#include "json.hpp"
#include "ltlab/congruence.hpp"
#include "ltlab/lfunc.hpp"
#include "ltlab/skewpoly.hpp"
#include "ltlab/symbolic.hpp"

namespace ltlab {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& v);
Json to_json(const Rational& r);
Json to_json(const CyclotomicInteger& c);
Json to_json(const CyclotomicRational& c);
Json to_json(const PiValuation& v);

Json to_json(const CharSumRecord& r);
Json to_json(const ConjectureReport& r);
Json to_json(const ZetaReport& r);
Json to_json(const IdentityReport& r);
Json to_json(const Section3Report& r);
Json to_json(const CongruenceReport& r);
Json to_json(const SymmetryReport& r);

/// One row per (lambda, n).
std::string charsum_csv(const std::vector<CharSumRecord>& records);
std::string conjecture_csv(const ConjectureReport& r);

std::string to_string(TieBreak t);
TieBreak parse_tie_break(const std::string& s);

}  // namespace ltlab
