#pragma once

// The twisted ring K{tau}/(tau^{h+1}) with tau a = a^q tau, over any ring
// adapter whose frob(x, i) is the q^i-power map on coefficients.

#include <concepts>
#include <vector>

#include "ltlab/hypersurface.hpp"

namespace ltlab {

template <class R>
class SkewPolynomial {
 public:
  using T = typename R::value_type;

  SkewPolynomial(const R& ring, unsigned h) : ring_(ring), c_(h + 1, ring.zero()) {}
  /// Missing coefficients are zero; coefficients past tau^h are rejected.
  SkewPolynomial(const R& ring, unsigned h, std::vector<T> coeffs) : ring_(ring), c_(std::move(coeffs)) {
    if (c_.size() > h + 1) throw InvalidArgument("skew polynomial has terms past tau^h");
    c_.resize(h + 1, ring.zero());
  }
  static SkewPolynomial one(const R& ring, unsigned h) {
    SkewPolynomial r(ring, h);
    r.c_[0] = ring.one();
    return r;
  }

  unsigned h() const { return static_cast<unsigned>(c_.size()) - 1; }
  const R& ring() const { return ring_; }
  const T& operator[](unsigned i) const { return c_[i]; }
  T& operator[](unsigned i) { return c_[i]; }
  const std::vector<T>& coeffs() const { return c_; }
  bool is_unit() const { return !ring_.is_zero(c_[0]); }

  SkewPolynomial operator+(const SkewPolynomial& o) const {
    check(o);
    SkewPolynomial r(ring_, h());
    for (unsigned i = 0; i <= h(); ++i) r.c_[i] = ring_.add(c_[i], o.c_[i]);
    return r;
  }
  SkewPolynomial operator-(const SkewPolynomial& o) const {
    check(o);
    SkewPolynomial r(ring_, h());
    for (unsigned i = 0; i <= h(); ++i) r.c_[i] = ring_.sub(c_[i], o.c_[i]);
    return r;
  }
  /// (a tau^i)(b tau^j) = a b^{q^i} tau^{i+j}, truncated past tau^h.
  SkewPolynomial operator*(const SkewPolynomial& o) const {
    check(o);
    const unsigned H = h();
    SkewPolynomial r(ring_, H);
    for (unsigned i = 0; i <= H; ++i) {
      if (ring_.is_zero(c_[i])) continue;
      for (unsigned j = 0; i + j <= H; ++j) {
        if (ring_.is_zero(o.c_[j])) continue;
        r.c_[i + j] = ring_.add(r.c_[i + j], ring_.mul(c_[i], ring_.frob(o.c_[j], i)));
      }
    }
    return r;
  }
  bool operator==(const SkewPolynomial& o) const { return c_ == o.c_; }

  /// u = c0 (1 + N) with N nilpotent, so u^{-1} = sum_k (-N)^k c0^{-1}.
  SkewPolynomial inverse() const {
    if (!is_unit()) throw InvalidArgument("skew polynomial is not a unit");
    const unsigned H = h();
    T c0inv = invert_constant(c_[0]);
    SkewPolynomial scal(ring_, H), N(ring_, H);
    scal.c_[0] = c0inv;
    for (unsigned i = 1; i <= H; ++i) N.c_[i] = ring_.neg(ring_.mul(c0inv, c_[i]));  // this is -N
    SkewPolynomial acc = one(ring_, H), term = one(ring_, H);
    for (unsigned k = 1; k <= H; ++k) {
      term = term * N;
      acc = acc + term;
    }
    return acc * scal;
  }

  /// Raises every coefficient to the q^e power.
  SkewPolynomial frob_coeffs(unsigned e) const {
    SkewPolynomial r(ring_, h());
    for (unsigned i = 0; i <= h(); ++i) r.c_[i] = ring_.frob(c_[i], e);
    return r;
  }

 private:
  T invert_constant(const T& a) const {
    if constexpr (requires(const R& r, const T& x) { r.inv(x); }) {
      return ring_.inv(a);
    } else {
      if (!(a == ring_.one())) throw InvalidArgument("constant term must be 1 over this coefficient ring");
      return a;
    }
  }
  void check(const SkewPolynomial& o) const {
    if (o.c_.size() != c_.size()) throw InvalidArgument("skew polynomials of different truncation");
    if constexpr (requires { ring_.F; }) {
      if (!(*ring_.F == *o.ring_.F)) throw InvalidArgument("skew polynomials over different fields");
    }
  }

  R ring_;
  std::vector<T> c_;
};

/// frob_coeffs(g, e) * g^{-1}.
template <class R>
SkewPolynomial<R> d_operator(const SkewPolynomial<R>& g, unsigned e) {
  return g.frob_coeffs(e) * g.inverse();
}

/// g -> r_0 g r^{-1}.
template <class R>
SkewPolynomial<R> r_action(const SkewPolynomial<R>& r, const SkewPolynomial<R>& g) {
  SkewPolynomial<R> r0(r.ring(), r.h());
  r0[0] = r[0];
  return r0 * g * r.inverse();
}

/// Field-coefficient convenience: the ring adapter carries inverses.
struct UnitFieldRing : FieldRing {
  Elem inv(Elem a) const { return F->inv(a); }
};

using FieldSkew = SkewPolynomial<UnitFieldRing>;

/// 1 + v_1 tau + ... + v_h tau^h.
FieldSkew point_to_skew(const UnitFieldRing& ring, const std::vector<Elem>& V);
std::vector<Elem> skew_to_point(const FieldSkew& g);

/// Coefficientwise embedding of a skew polynomial over F_{q^h} into F_{q^{hn}}.
FieldSkew embed_skew(const FieldSkew& r, const UnitFieldRing& target);

/// Result of the exhaustive symmetry suite over X(F_{q^{hn}}).
struct SymmetryReport {
  std::uint64_t q;
  unsigned h, n;
  std::uint64_t points;               // #X(F_{q^{hn}})
  std::uint64_t units;                // |R^x| over F_{q^h}
  std::uint64_t translation_checks;   // (point, gamma) pairs
  bool translation_preserves;
  std::uint64_t action_checks;        // (point, r) pairs
  bool action_preserves;
  bool center_is_translation;         // 1 + c tau^h acts as V_h -> V_h - c
  bool scalar_formula;                // alpha acts by v_i -> alpha^{1 - q^i} v_i
  bool action_law;                    // r.(r'.g) = (r r').g on random triples
  bool d_operator_matches;            // tau^h coefficient of d_operator(g, h) = (-1)^{h-1} d_full
  bool holds() const {
    return translation_preserves && action_preserves && center_is_translation && scalar_formula && action_law &&
           d_operator_matches;
  }
};

SymmetryReport symmetry_suite(std::uint64_t q, unsigned h, unsigned n, std::uint64_t guard = 2'000'000'000);

}  // namespace ltlab
