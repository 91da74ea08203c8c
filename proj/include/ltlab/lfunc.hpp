#pragma once

// Exact character sums S_n(psi_lambda) over the Artin-Schreier family, the
// L-series they generate, and the comparison with the predicted closed form.

#include <optional>
#include <vector>

#include "ltlab/cache.hpp"
#include "ltlab/cyclotomic.hpp"
#include "ltlab/hypersurface.hpp"
#include "ltlab/rational.hpp"

namespace ltlab {

struct CharSumRecord {
  std::uint64_t q;
  unsigned h, n;
  FieldElement lambda;  // in F_{q^h}
  CyclotomicInteger value;
  bool primitive;
  Convention convention;
};

struct SumOptions {
  Convention convention = Convention::ArtinSchreier;
  unsigned threads = 0;
  std::uint64_t guard = kCountGuard;
  const ResultCache* cache = nullptr;
};

/// Character transform of a subtrace histogram: S(lambda) for every lambda in
/// F_{q^h}, index = rank of lambda.
std::vector<CyclotomicInteger> character_transform(const FieldDesc& Fqh, const std::vector<std::uint64_t>& hist);

/// One enumeration pass, then S_n(psi_lambda) for all lambda in F_{q^h}.
std::vector<CharSumRecord> char_sums_all(const HyperParams& params, const SumOptions& opt = {});

CharSumRecord char_sum(const HyperParams& params, Elem lambda, const SumOptions& opt = {});

/// (-1)^{n-1} c^{n+1} with c = (-1)^h q^{h(h-1)/2}.
BigInt predicted_S(std::uint64_t q, unsigned h, unsigned n);

/// l_0..l_N of exp(sum_n S_n t^n / n), where N = S.size().
std::vector<CyclotomicRational> l_series(const std::vector<CyclotomicInteger>& S);
std::vector<CyclotomicRational> l_series(const std::vector<CyclotomicRational>& S);

struct LambdaReport {
  FieldElement lambda;
  bool primitive;
  std::vector<CyclotomicInteger> S;   // S_1..S_N
  std::vector<BigInt> predicted;      // empty unless primitive
  bool match;                         // primitive and S == predicted; false otherwise
  std::vector<CyclotomicRational> L;  // l_0..l_N
  // Reading S_n = D * dim * alpha^n with D = q^{h(h-1)/2} (needs N >= 2 and rational S_1, S_2 != 0).
  std::optional<Rational> eigenvalue;
  std::optional<Rational> virtual_dimension;
};

struct ConjectureReport {
  std::uint64_t q;
  unsigned h, N;
  Convention convention;
  std::vector<LambdaReport> per_lambda;
  bool all_match;        // every primitive lambda matches for every n <= N
  bool orbit_consistent;  // S_n(lambda) == S_n(lambda^q) for every lambda and n
  BigInt D;              // q^{h(h-1)/2}
  Rational implied_eigenvalue;  // S_2/S_1 of the predicted values: (-1)^{h-1} D
  int implied_virtual_dimension;  // (-1)^{h-1}
  bool dimension_consistent;  // every primitive lambda gives (-1)^{h-1} (N >= 2)
  bool eigenvalue_is_D;       // every primitive lambda gives exactly +D (N >= 2)
  bool eigenvalue_abs_is_D;   // every primitive lambda gives +-D (N >= 2)
};

ConjectureReport conjecture_report(std::uint64_t q, unsigned h, unsigned N, const SumOptions& opt = {});

struct ZetaReport {
  std::uint64_t q;
  unsigned h, n;
  CyclotomicInteger character_total;  // sum over lambda of S_n(psi_lambda)
  bool total_is_rational;
  std::uint64_t count_points;
  std::optional<std::uint64_t> brute_count;  // when within the brute-force guard
  bool holds;
};

ZetaReport zeta_consistency(const HyperParams& params, const SumOptions& opt = {},
                            std::uint64_t brute_guard = kBruteGuard);

}  // namespace ltlab
