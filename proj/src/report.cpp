#include "ltlab/report.hpp"

#include <limits>
#include <sstream>

namespace ltlab {

Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

Json to_json(const Rational& r) {
  if (denominator(r) == 1) return to_json(BigInt(numerator(r)));
  return to_string(r);
}

Json to_json(const CyclotomicInteger& c) {
  if (c.is_rational()) return to_json(c.rational_part());
  Json a = Json::array();
  for (const auto& x : c.coords()) a.push_back(to_json(x));
  return a;
}

Json to_json(const CyclotomicRational& c) {
  if (c.num().is_rational()) return to_json(c.rational_value());
  return Json{{"num", to_json(c.num())}, {"den", to_json(c.den())}};
}

Json to_json(const PiValuation& v) { return to_string(v.value); }

namespace {

std::string lambda_str(const FieldElement& l) { return serialize(l); }

Json valuation_json(const ValuationCheck& c, const char* index_name) {
  return Json{{index_name, c.index},
              {"achieved", to_json(c.achieved)},
              {"exact", !c.achieved.lower_bound},
              {"threshold", to_json(c.threshold)},
              {"pass", c.pass}};
}

}  // namespace

Json to_json(const CharSumRecord& r) {
  return Json{{"q", r.q},
              {"h", r.h},
              {"n", r.n},
              {"lambda", lambda_str(r.lambda)},
              {"primitive", r.primitive},
              {"convention", to_string(r.convention)},
              {"S", to_json(r.value)}};
}

Json to_json(const ConjectureReport& r) {
  Json per = Json::array();
  for (const auto& l : r.per_lambda) {
    Json S = Json::array(), P = Json::array(), L = Json::array();
    for (const auto& s : l.S) S.push_back(to_json(s));
    for (const auto& p : l.predicted) P.push_back(to_json(p));
    for (const auto& c : l.L) L.push_back(to_json(c));
    Json j{{"lambda", lambda_str(l.lambda)}, {"primitive", l.primitive}, {"S", S}, {"predicted", P},
           {"match", l.match},               {"L", L}};
    j["eigenvalue"] = l.eigenvalue ? to_json(*l.eigenvalue) : Json(nullptr);
    j["virtual_dimension"] = l.virtual_dimension ? to_json(*l.virtual_dimension) : Json(nullptr);
    per.push_back(j);
  }
  return Json{{"q", r.q},
              {"h", r.h},
              {"N", r.N},
              {"convention", to_string(r.convention)},
              {"per_lambda", per},
              {"all_match", r.all_match},
              {"orbit_consistent", r.orbit_consistent},
              {"D", to_json(r.D)},
              {"implied_eigenvalue", to_json(r.implied_eigenvalue)},
              {"implied_virtual_dimension", r.implied_virtual_dimension},
              {"dimension_consistent", r.dimension_consistent},
              {"eigenvalue_is_D", r.eigenvalue_is_D},
              {"eigenvalue_abs_is_D", r.eigenvalue_abs_is_D}};
}

Json to_json(const ZetaReport& r) {
  Json j{{"q", r.q},
         {"h", r.h},
         {"n", r.n},
         {"character_total", to_json(r.character_total)},
         {"total_is_rational", r.total_is_rational},
         {"count_points", r.count_points}};
  j["brute_count"] = r.brute_count ? Json(*r.brute_count) : Json(nullptr);
  j["holds"] = r.holds;
  return j;
}

Json to_json(const IdentityReport& r) {
  Json terms = Json::object();
  for (const auto& [k, v] : r.term_counts) terms[k] = v;
  return Json{{"identity", r.identity},
              {"q", r.q},
              {"h", r.h},
              {"holds", r.holds},
              {"wall_time_ms", static_cast<std::int64_t>(r.wall_time_ms)},
              {"term_counts", terms},
              {"note", r.note}};
}

Json to_json(const Section3Report& r) {
  Json samples = Json::array();
  for (std::size_t s = 0; s < r.samples.size(); ++s) {
    Json checks = Json::array();
    for (const auto& c : r.samples[s].checks) {
      Json j{{"name", c.name}, {"holds", c.holds}};
      if (c.discrepancy) {
        j["discrepancy"] = to_json(*c.discrepancy);
        j["exact"] = !c.discrepancy->lower_bound;
      }
      checks.push_back(j);
    }
    samples.push_back(Json{{"index", s}, {"checks", checks}, {"holds", r.samples[s].holds()}});
  }
  return Json{{"q", r.q},
              {"h", r.h},
              {"prec", r.prec},
              {"residue_degree", r.residue_degree},
              {"seed", r.seed},
              {"samples", samples},
              {"holds", r.holds()}};
}

Json to_json(const CongruenceReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    Json p41 = Json::array(), eqw = Json::array(), yz = Json::array();
    for (const auto& c : s.prop41) p41.push_back(valuation_json(c, "r"));
    for (const auto& c : s.eq_w) eqw.push_back(valuation_json(c, "j"));
    for (const auto& c : s.yzeta) yz.push_back(valuation_json(c, "j"));
    Json yp = valuation_json(s.yprop.check, "index");
    yp.erase("index");
    yp["reduced_point"] = s.yprop.reduced_point;
    yp["reduced_on_x"] = s.yprop.reduced_on_x;
    samples.push_back(Json{{"index", s.index},
                           {"redraws", s.redraws},
                           {"V_residues", s.V_residues},
                           {"delta_locally_constant", s.delta_locally_constant},
                           {"w_roots_ok", s.w_roots_ok},
                           {"prop41", p41},
                           {"eq_w", eqw},
                           {"yzeta", yz},
                           {"yprop", yp},
                           {"holds", s.holds()}});
  }
  return Json{{"q", r.q},
              {"h", r.h},
              {"prec", r.prec},
              {"residue_degree", r.residue_degree},
              {"seed", r.seed},
              {"tie_break", to_string(r.tie)},
              {"thresholds",
               {{"prop41", to_json(r.thr.prop41)}, {"eq_w", to_json(r.thr.eq_w)}, {"eps", to_json(r.thr.eps)}}},
              {"homomorphism", r.homomorphism},
              {"samples", samples},
              {"holds", r.holds()}};
}

Json to_json(const SymmetryReport& r) {
  return Json{{"q", r.q},
              {"h", r.h},
              {"n", r.n},
              {"points", r.points},
              {"units", r.units},
              {"translation_checks", r.translation_checks},
              {"translation_preserves", r.translation_preserves},
              {"action_checks", r.action_checks},
              {"action_preserves", r.action_preserves},
              {"center_is_translation", r.center_is_translation},
              {"scalar_formula", r.scalar_formula},
              {"action_law", r.action_law},
              {"d_operator_matches", r.d_operator_matches},
              {"holds", r.holds()}};
}

namespace {

std::string csv_value(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "\"";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + csv_value(j[i]);
    return s + "\"";
  }
  return j.dump();
}

}  // namespace

std::string charsum_csv(const std::vector<CharSumRecord>& records) {
  std::ostringstream os;
  os << "q,h,n,lambda,primitive,convention,S\n";
  for (const auto& r : records)
    os << r.q << ',' << r.h << ',' << r.n << ",\"" << lambda_str(r.lambda) << "\"," << (r.primitive ? 1 : 0) << ','
       << to_string(r.convention) << ',' << csv_value(to_json(r.value)) << '\n';
  return os.str();
}

std::string conjecture_csv(const ConjectureReport& r) {
  std::ostringstream os;
  os << "q,h,n,lambda,primitive,S,predicted,match\n";
  for (const auto& l : r.per_lambda)
    for (std::size_t n = 0; n < l.S.size(); ++n) {
      os << r.q << ',' << r.h << ',' << n + 1 << ",\"" << lambda_str(l.lambda) << "\"," << (l.primitive ? 1 : 0)
         << ',' << csv_value(to_json(l.S[n])) << ',';
      if (n < l.predicted.size()) os << l.predicted[n];
      os << ',' << (l.primitive && n < l.predicted.size() && l.S[n].is_rational() &&
                    l.S[n].rational_part() == l.predicted[n] ? 1 : 0) << '\n';
    }
  return os.str();
}

std::string to_string(TieBreak t) { return t == TieBreak::LeastRank ? "least" : "greatest"; }

TieBreak parse_tie_break(const std::string& s) {
  if (s == "least") return TieBreak::LeastRank;
  if (s == "greatest") return TieBreak::GreatestRank;
  throw InvalidArgument("unknown tie-break: " + s);
}

}  // namespace ltlab
