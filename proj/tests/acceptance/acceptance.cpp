// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "ltlab/congruence.hpp"
#include "ltlab/lfunc.hpp"
#include "ltlab/skewpoly.hpp"
#include "ltlab/symbolic.hpp"

using namespace ltlab;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Every primitive lambda gives exactly the listed S_1..S_N.
bool primitive_sums_equal(std::uint64_t q, unsigned h, const std::vector<long long>& expect, std::ostringstream& os) {
  auto rep = conjecture_report(q, h, static_cast<unsigned>(expect.size()), {Convention::ArtinSchreier, 8});
  unsigned primitive = 0;
  bool ok = true;
  for (const auto& l : rep.per_lambda) {
    if (!l.primitive) continue;
    ++primitive;
    for (std::size_t n = 0; n < expect.size(); ++n)
      ok = ok && l.S[n].is_rational() && l.S[n].rational_part() == BigInt(expect[n]);
  }
  os << " (" << q << "," << h << "):" << primitive << " primitive";
  return ok && primitive > 0 && rep.all_match;
}

Outcome criterion1() {
  std::ostringstream os;
  bool ok = true;
  for (long long q : {2, 3, 4}) ok = primitive_sums_equal(q, 2, {q * q, -q * q * q, q * q * q * q}, os) && ok;
  return {ok, os.str()};
}

Outcome criterion2() {
  std::ostringstream os;
  bool ok = primitive_sums_equal(2, 3, {64, 512}, os);
  ok = primitive_sums_equal(3, 3, {729, 19683}, os) && ok;
  return {ok, os.str()};
}

Outcome criterion3() {
  std::ostringstream os;
  bool ok = primitive_sums_equal(2, 4, {4096, -262144}, os);
  return {ok, os.str()};
}

Outcome criterion4() {
  std::ostringstream os;
  bool ok = true;
  for (auto [q, h, n] : std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>{
           {2, 2, 1}, {2, 2, 2}, {3, 2, 1}, {2, 3, 1}}) {
    auto rep = zeta_consistency({q, h, n});
    bool here = rep.holds && rep.brute_count && *rep.brute_count == rep.count_points &&
                rep.total_is_rational && rep.character_total.rational_part() == BigInt(rep.count_points);
    if (n == 1) {
      std::uint64_t expect = 1;
      for (unsigned i = 0; i < h * h; ++i) expect *= q;
      here = here && rep.count_points == expect;
    }
    os << " (" << q << "," << h << "," << n << ")=" << rep.count_points;
    ok = ok && here;
  }
  return {ok, os.str()};
}

Outcome criterion5() {
  std::ostringstream os;
  bool ok = true;
  unsigned checked = 0;
  for (auto [q, h] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {3, 2}, {2, 3}, {4, 2}})
    for (const auto& name : identity_names()) {
      auto r = verify_identity(name, q, h);
      ++checked;
      if (!r.holds) {
        ok = false;
        os << " " << name << "(" << q << "," << h << ") fails";
      }
    }
  os << " " << checked << " identity instances";
  return {ok && checked == 24, os.str()};
}

Outcome criterion6() {
  std::ostringstream os;
  bool ok = true;
  const std::vector<std::string> needed{"mu_n_compatibility", "lt_level2_structure", "trace_lemma", "delta_power",
                                        "multilinear_alternating"};
  for (auto [q, h] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {2, 3}}) {
    auto rep = verify_section3(q, h, 6, 0, 0, 2024, 8);
    Rational slack = 1000;
    for (const auto& s : rep.samples) {
      for (const auto& name : needed) {
        auto it = std::find_if(s.checks.begin(), s.checks.end(), [&](const CheckResult& c) { return c.name == name; });
        ok = ok && it != s.checks.end() && it->holds;
      }
      for (const auto& c : s.checks)
        if (c.discrepancy) slack = std::min(slack, c.discrepancy->value);
    }
    ok = ok && rep.holds() && rep.samples.size() == 6;
    os << " (" << q << "," << h << "): 6 samples, min residual valuation >= " << to_string(slack);
  }
  return {ok, os.str()};
}

Outcome criterion7() {
  std::ostringstream os;
  bool ok = true;
  for (auto [q, h, n] : std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>{{2, 2, 6}, {2, 3, 4}}) {
    auto a = congruence_verify(q, h, n, 0, 0, 2024, TieBreak::LeastRank, 8);
    auto b = congruence_verify(q, h, n, 0, 0, 2024, TieBreak::GreatestRank, 8);
    Rational worst = 1000;
    auto margin = [&](const ValuationCheck& c) {
      ok = ok && c.pass && c.achieved.value >= c.threshold;
      worst = std::min(worst, Rational(c.achieved.value - c.threshold));
    };
    for (const auto& rep : {a, b})
      for (const auto& s : rep.samples) {
        for (const auto& c : s.prop41) margin(c);
        for (const auto& c : s.eq_w) margin(c);
        for (const auto& c : s.yzeta) margin(c);
        margin(s.yprop.check);
        ok = ok && s.holds();
      }
    ok = ok && a.holds() && b.holds() && a.homomorphism;
    os << " (" << q << "," << h << "): " << n - 1 << " random V + canonical, both tie-breaks, min margin "
       << to_string(worst);
  }
  return {ok, os.str()};
}

Outcome criterion8() {
  std::ostringstream os;
  bool ok = true;
  for (auto [q, h, n] : std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>{{2, 2, 2}, {2, 3, 2}}) {
    auto r = symmetry_suite(q, h, n);
    ok = ok && r.holds();
    os << " (" << q << "," << h << ",n=" << n << "): " << r.points << " points, " << r.action_checks
       << " unit checks";
  }
  return {ok, os.str()};
}

Outcome criterion9() {
  std::ostringstream os;
  bool ok = true;
  for (std::uint64_t q : {2, 3})
    for (unsigned n : {1u, 2u}) {
      auto r = hermitian_check(q, n);
      ok = ok && r.holds && r.points_on_x == q * r.hermitian_points;
      os << " (" << q << "," << n << "):" << r.points_on_x << "=" << q << "*" << r.hermitian_points;
    }
  return {ok, os.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all{
      {"1 conjecture h=2", 60, criterion1},         {"2 conjecture h=3", 60, criterion2},
      {"3 conjecture h=4", 600, criterion3},        {"4 zeta consistency", 600, criterion4},
      {"5 symbolic identities", 60, criterion5},    {"6 formal-module suite", 120, criterion6},
      {"7 congruence suite", 300, criterion7},      {"8 symmetry suite", 60, criterion8},
      {"9 Hermitian cross-check", 600, criterion9},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string(" exception: ") + e.what()};
    }
    const double dt = seconds(t0);
    const bool pass = o.pass && dt < c.budget_s;
    if (!pass) ++failed;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << dt;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.name << ":" << o.detail << " [" << t.str() << " s"
              << (dt < c.budget_s ? "" : ", over budget") << "]" << std::endl;
  }
  return failed;
}
