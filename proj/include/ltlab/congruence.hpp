#pragma once

// Sampled-point checks of the level-1 trivialization congruence and of the
// congruences for the invariant coordinates Y(zeta) and Y on level 2.

#include <cstdint>
#include <string>
#include <vector>

#include "ltlab/formalmod.hpp"

namespace ltlab {

/// a0 + a1 pi with a0, a1 in k, ranks in F_q.
struct Digit2 {
  Elem a0 = 0, a1 = 0;
  bool operator==(const Digit2&) const = default;
};
using Matrix2 = std::vector<std::vector<Digit2>>;

struct TowerModel {
  SeriesModel base;
  Elem zeta = 0;                   // normal-basis generator of k_h / k (rank in F_{q^h})
  Elem beta = 0;                   // Tr(beta zeta^{q^i}) = [i == 0]
  std::vector<Elem> zeta_powers;   // zeta^{q^j}, j < h
  std::vector<Matrix2> M;          // M[j]: multiplication by zeta^{q^j} on F_0[pi^2] in the x^{(2)} basis
};

TowerModel build_tower(std::uint64_t q, unsigned h, unsigned prec = 0, unsigned residue_degree = 0,
                       std::uint64_t guard = kModelGuard);

/// Exhaustive search over (O/pi^2)^h per row; throws InvalidArgument if none matches.
Matrix2 find_embedding_matrix(const SeriesModel& m, Elem zeta_in_Fqh);

/// M_a M_b == M_{ab} mod pi^2 (both orders) for all products of zeta^{q^i}.
bool embedding_is_homomorphism(const TowerModel& t);

struct Thresholds {
  Rational prop41;  // q - 1 + q/(q^h - 1)
  Rational eq_w;    // q - 1 + (q-1)/(q^h - 1) + 1/(q - 1)
  Rational eps;     // q - 2 + (q-1)/(q^h - 1)
};
Thresholds thresholds(std::uint64_t q, unsigned h);

struct ValuationCheck {
  unsigned index;
  PiValuation achieved;
  Rational threshold;
  bool pass;
};
ValuationCheck valuation_check(unsigned index, const TruncatedSeries& residual, const Rational& threshold, int e);

struct SamplePoint {
  std::vector<TruncatedSeries> V, u;  // u_i = pi V_i
  SeriesAdditive module;
  std::vector<TruncatedSeries> X;     // level-1 lifts near x^{(1)}
  TruncatedSeries Delta;              // mu(X)
};

SamplePoint make_sample(const TowerModel& t, std::vector<TruncatedSeries> V);

/// The determinant D_r of the trivialization congruence.
TruncatedSeries trivialization_det(const SeriesModel& m, const std::vector<TruncatedSeries>& V,
                                   const TruncatedSeries& xr);

std::vector<ValuationCheck> check_prop41(const TowerModel& t, const SamplePoint& s);

/// zeta(X_r) through the embedding matrix.
std::vector<TruncatedSeries> apply_embedding(const SeriesModel& m, const Matrix2& M, const SeriesAdditive& module,
                                             const std::vector<TruncatedSeries>& X);

struct WYRecord {
  unsigned j;
  TruncatedSeries W, w, Yz;
  TruncatedSeries lt_image;  // det(zeta(X_r) | X_r^q | ...)
  bool root_ok;              // [pi]_LT(W) equals lt_image to precision
  ValuationCheck eq_w;
};

/// W(zeta^{q^j}) is the root of [pi]_LT(T) = lt_image near w; roots differ by
/// F_q Delta and tie picks which one.
WYRecord w_y_functions(const TowerModel& t, const SamplePoint& s, unsigned j, TieBreak tie = TieBreak::LeastRank);

/// The Y(zeta) right-hand side: first row (V, 0), last column (zeta^{q^i} - zeta) V_{h-i}^{q^i}.
TruncatedSeries yzeta_rhs(const SeriesModel& m, const std::vector<TruncatedSeries>& V, Elem zeta_in_Fqh);

ValuationCheck check_prop_yzeta(const TowerModel& t, const SamplePoint& s, const WYRecord& rec);

struct YpropResult {
  ValuationCheck check;
  TruncatedSeries Y;
  std::vector<Elem> reduced_point;  // (V_1, ..., V_{h-1}, (-1)^{h-1} Y) mod the maximal ideal
  bool reduced_on_x;                // in the Artin-Schreier convention
};

YpropResult check_prop_yprop(const TowerModel& t, const SamplePoint& s, const std::vector<WYRecord>& recs);

struct CongruenceSample {
  unsigned index;
  unsigned redraws;
  std::vector<Elem> V_residues;
  bool delta_locally_constant;
  std::vector<ValuationCheck> prop41;
  std::vector<ValuationCheck> eq_w;
  std::vector<ValuationCheck> yzeta;
  std::vector<bool> w_roots_ok;
  YpropResult yprop;
  bool holds() const;
};

struct CongruenceReport {
  std::uint64_t q;
  unsigned h, prec, residue_degree;
  std::uint64_t seed;
  TieBreak tie;
  Thresholds thr;
  bool homomorphism;
  std::vector<CongruenceSample> samples;
  bool holds() const;
};

/// Sample 0 is V = 0; the rest draw V with integral digits up to t-degree e.
/// A draw whose Artin-Schreier residue equation is unsolvable over the residue
/// field is replaced by the next draw.
CongruenceReport congruence_verify(std::uint64_t q, unsigned h, unsigned samples, unsigned prec = 0,
                                   unsigned residue_degree = 0, std::uint64_t seed = 1,
                                   TieBreak tie = TieBreak::LeastRank, unsigned threads = 1);

}  // namespace ltlab
