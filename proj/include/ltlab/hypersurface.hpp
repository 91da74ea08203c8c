#pragma once

// The hypersurface X in V_1..V_h: evaluation of its defining determinant in
// the full and Artin-Schreier forms, point counts and the translation action.

#include <cstdint>
#include <string>
#include <vector>

#include "ltlab/characters.hpp"
#include "ltlab/determinant.hpp"
#include "ltlab/ffield.hpp"

namespace ltlab {

struct HyperParams {
  std::uint64_t q = 2;
  unsigned h = 2;
  unsigned n = 1;
};

/// Which equation cuts out X. Full: the h x h determinant vanishes. AS:
/// Y^{q^h} - Y = d_as(V) with V_h = (-1)^{h-1} Y. The two differ by
/// V_h -> -V_h, which matters only for odd p and even h.
enum class Convention { Full, ArtinSchreier };

std::string to_string(Convention c);
Convention parse_convention(const std::string& s);

/// The fields F_q, F_{q^h}, F_{q^{hn}} for one parameter set.
struct Tower {
  std::uint64_t q;
  unsigned p, f, h, n;
  FieldPtr Fq, Fqh, Fqhn;
  std::uint64_t Q() const;  // q^h
  FieldRing ring() const { return {Fqhn.get(), f}; }
};

Tower make_tower(const HyperParams& params);

/// Default upper bound on enumerated vectors for the trace-criterion counter.
inline constexpr std::uint64_t kCountGuard = 1'000'000'000;
/// Default upper bound for the brute-force oracle.
inline constexpr std::uint64_t kBruteGuard = 100'000'000;

// Generic forms (any ring adapter). V is 0-based: V[0] = V_1.

template <class R>
typename R::value_type d_full(const R& ring, const std::vector<typename R::value_type>& V) {
  const unsigned h = static_cast<unsigned>(V.size());
  if (h == 0) throw InvalidArgument("d_full needs at least one coordinate");
  std::vector<typename R::value_type> row(h);
  for (unsigned j = 0; j < h; ++j) row[j] = ring.sub(ring.frob(V[j], h), V[j]);
  return determinant(ring, staircase_matrix(ring, row, V));
}

/// d_as(V_1..V_{h-1}): same matrix with last first-row entry 0.
template <class R>
typename R::value_type d_as(const R& ring, const std::vector<typename R::value_type>& V) {
  const unsigned h = static_cast<unsigned>(V.size()) + 1;
  std::vector<typename R::value_type> row(h, ring.zero());
  for (unsigned j = 0; j + 1 < h; ++j) row[j] = ring.sub(ring.frob(V[j], h), V[j]);
  auto Vext = V;
  Vext.push_back(ring.zero());
  return determinant(ring, staircase_matrix(ring, row, Vext));
}

template <class R>
typename R::value_type moore(const R& ring, const std::vector<typename R::value_type>& x) {
  return determinant(ring, moore_matrix(ring, x));
}

/// B_1..B_h for V_1..V_{h-1}: B_i is (-1)^i times the leading i x i minor of
/// the staircase matrix with first row (V_1, ..., V_{h-1}, 0).
template <class R>
std::vector<typename R::value_type> minors_b(const R& ring, const std::vector<typename R::value_type>& V) {
  const unsigned h = static_cast<unsigned>(V.size()) + 1;
  std::vector<typename R::value_type> row(V.begin(), V.end());
  row.push_back(ring.zero());
  auto Vext = V;
  Vext.push_back(ring.zero());
  auto full = staircase_matrix(ring, row, Vext);
  std::vector<typename R::value_type> B;
  for (unsigned i = 1; i <= h; ++i) {
    Matrix<typename R::value_type> sub(i, std::vector<typename R::value_type>(i));
    for (unsigned a = 0; a < i; ++a)
      for (unsigned b = 0; b < i; ++b) sub[a][b] = full[a][b];
    auto d = determinant(ring, sub);
    B.push_back(i % 2 ? ring.neg(d) : d);
  }
  return B;
}

/// Fast evaluation over one finite field by eliminating the first row against
/// the subdiagonal ones. Used in every enumeration loop.
class HyperEval {
 public:
  HyperEval(const FieldDesc& F, unsigned f, unsigned h);
  /// V has h entries.
  Elem d_full(const Elem* V) const;
  /// V has h-1 entries.
  Elem d_as(const Elem* V) const;
  /// Writes B_1..B_h; V has h-1 entries.
  void minors_b(const Elem* V, Elem* B) const;
  unsigned h() const { return h_; }

 private:
  Elem frob_q(Elem a, unsigned i) const;
  Elem eliminate(Elem* row, const Elem* V, Elem* leading) const;
  const FieldDesc& F_;
  unsigned f_, h_;
  std::vector<std::vector<Elem>> frob_table_;  // [i][a] = a^{q^i}, i <= h; empty if field too large
};

/// Histogram over F_{q^h} (index = rank) of Tr_{F_{q^{hn}}/F_{q^h}}(d_as(V))
/// for V in F_{q^{hn}}^{h-1}. Deterministic for any worker count.
std::vector<std::uint64_t> subtrace_histogram(const Tower& tower, unsigned threads = 0,
                                              std::uint64_t guard = kCountGuard);

/// #X(F_{q^{hn}}) by the trace criterion.
std::uint64_t count_points(const HyperParams& params, unsigned threads = 0, std::uint64_t guard = kCountGuard);

/// #X(F_{q^{hn}}) by evaluating the full determinant on every V in F^h.
std::uint64_t brute_count(const HyperParams& params, Convention conv = Convention::Full,
                          std::uint64_t guard = kBruteGuard);

/// True when V (length h, over F_{q^{hn}}) lies on X in the given convention.
bool on_hypersurface(const Tower& tower, const std::vector<Elem>& V, Convention conv = Convention::Full);

/// V_h -> V_h + gamma for gamma in F_{q^h}; throws InvalidArgument if V is not on X.
std::vector<Elem> h_translate(const Tower& tower, const std::vector<Elem>& V, Elem gamma);

struct HermitianReport {
  std::uint64_t q;
  unsigned n;
  std::uint64_t points_on_x;       // #X(F_{q^{2n}}), brute force
  std::uint64_t hermitian_points;  // #{(v, y) : y^q + y = v^{q+1}}
  bool holds;                      // points_on_x == q * hermitian_points
};

/// h = 2 only: compares #X with q copies of the Hermitian curve.
HermitianReport hermitian_check(std::uint64_t q, unsigned n);

}  // namespace ltlab
