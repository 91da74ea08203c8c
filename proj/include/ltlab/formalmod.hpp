#pragma once

// Equal-characteristic formal O_F-modules in their additive models, over a
// truncated Laurent series field standing in for E_2.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ltlab/additive.hpp"
#include "ltlab/series.hpp"

namespace ltlab {

using SeriesAdditive = AdditivePolynomial<SeriesRing>;

enum class TieBreak { LeastRank, GreatestRank };

struct LiftParams {
  Rational min_gain = 0;  // pi-units
  int e = 1;              // t-units per pi-unit
  TieBreak tie = TieBreak::LeastRank;
};

/// X with f(X) = target, near seed, digit by digit. Each step solves the
/// residue equation sum_{dominant i} a_i c^{q^i} = r over the residue field.
/// Throws ResidueUnsolvable when that equation has no solution, NoGain when no
/// digit position reaches the residual's valuation or the gain is too small.
TruncatedSeries additive_root_lift(const SeriesRing& ring, const SeriesAdditive& f, const TruncatedSeries& target,
                                   const TruncatedSeries& seed, const LiftParams& params = {});

/// E_2 modelled as F_{q^M}((t)) with t = lambda a primitive pi^2-torsion point
/// of F_0 ([pi](X) = pi X + X^{q^h}) and pi recovered as a series in t.
struct SeriesModel {
  std::uint64_t q;
  unsigned h, p, f, M;
  std::uint64_t Q;  // q^h
  int e;            // Q (Q - 1)
  int N;            // working t-precision
  SeriesContextPtr ctx;
  FieldPtr Fq, Fqh, Fres;
  TruncatedSeries pi, lambda, z;  // z = [pi]_0(lambda)
  std::vector<Elem> omega;        // k-basis of k_h, embedded in the residue field
  std::vector<TruncatedSeries> x1, x2;  // omega_i z and omega_i lambda
  TruncatedSeries Delta;                // mu(x1)
  int pi_iterations = 0;

  SeriesRing ring() const { return {ctx}; }
  TruncatedSeries scalar(Elem c) const { return TruncatedSeries::constant(ctx, c); }
  Elem embed(Elem a_in_Fqh) const { return Fres->embed_from(*Fqh, a_in_Fqh); }
  Elem embed_q(Elem a_in_Fq) const { return Fres->embed_from(*Fq, a_in_Fq); }
  PiValuation val(const TruncatedSeries& s) const { return pi_valuation(s, e); }
};

inline constexpr std::uint64_t kModelGuard = 16;  // q^h

/// prec is the working precision in pi-units; residue_degree M is over F_q
/// and must be a multiple of h.
SeriesModel build_series_model(std::uint64_t q, unsigned h, unsigned prec = 0, unsigned residue_degree = 0,
                               std::uint64_t guard = kModelGuard);

SeriesAdditive univ_module(const SeriesModel& m, const std::vector<TruncatedSeries>& u);
SeriesAdditive lt_module(const SeriesModel& m);

/// [pi^a] applied a times.
TruncatedSeries pi_power(const SeriesModel& m, const SeriesAdditive& module, const TruncatedSeries& x, unsigned a);

/// Sum over tuples 0 <= a_i <= n-1 with sum (h-1)(n-1) of mu([pi^{a_i}] X_i).
TruncatedSeries mu_n(const SeriesModel& m, const std::vector<TruncatedSeries>& points, unsigned n,
                     const SeriesAdditive& module);

struct DrinfeldBasis {
  unsigned level;
  std::vector<TruncatedSeries> points;
  SeriesAdditive module;
};

/// Level 1: prod over all k-combinations of (T - sum a_i x_i), times the
/// leading coefficient of [pi], equals [pi] coefficientwise. Level 2: the
/// [pi]-images form a level-1 basis and the points are pi^2-torsion.
bool drinfeld_check(const SeriesModel& m, const DrinfeldBasis& basis);

struct CheckResult {
  std::string name;
  bool holds;
  std::optional<PiValuation> discrepancy;  // valuation of the residual, when meaningful
};

struct Section3Sample {
  std::vector<TruncatedSeries> u;
  std::vector<TruncatedSeries> X, Y;
  std::vector<CheckResult> checks;
  bool holds() const;
};

struct Section3Report {
  std::uint64_t q;
  unsigned h, prec, residue_degree;
  std::uint64_t seed;
  std::vector<Section3Sample> samples;
  bool holds() const;
};

/// Runs the five checks at u = 0 and at samples - 1 random u in pi^2 O.
Section3Report verify_section3(std::uint64_t q, unsigned h, unsigned samples, unsigned prec = 0,
                               unsigned residue_degree = 0, std::uint64_t seed = 1, unsigned threads = 1);

/// Lifts the level-1 and level-2 bases of F_0 to the module [pi]_u.
void lift_bases(const SeriesModel& m, const SeriesAdditive& module, std::vector<TruncatedSeries>& X,
                std::vector<TruncatedSeries>* Y, TieBreak tie = TieBreak::LeastRank);

/// Random integral series with digits up to t-degree e-1.
TruncatedSeries random_integral(const SeriesModel& m, std::mt19937_64& rng);

}  // namespace ltlab
