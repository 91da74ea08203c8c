#pragma once

// Truncated Laurent series over F_{p^m} in one variable t, with pessimistic
// tracking of absolute t-adic precision.

#include <climits>
#include <memory>
#include <string>
#include <vector>

#include "ltlab/determinant.hpp"
#include "ltlab/ffield.hpp"
#include "ltlab/rational.hpp"

namespace ltlab {

struct SeriesContext {
  FieldPtr F;     // residue field
  unsigned f;     // q = p^f
  int cap;        // nothing is stored at or beyond t^cap
  int floor;      // precision below this raises PrecisionError
};
using SeriesContextPtr = std::shared_ptr<const SeriesContext>;

SeriesContextPtr make_series_context(FieldPtr F, unsigned f, int cap, int floor = INT_MIN / 4);

class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  /// Zero known to the context cap.
  explicit TruncatedSeries(SeriesContextPtr ctx);
  static TruncatedSeries constant(SeriesContextPtr ctx, Elem c);
  /// c t^j.
  static TruncatedSeries monomial(SeriesContextPtr ctx, Elem c, int j);
  /// sum c[i] t^{val+i}, known modulo t^prec.
  static TruncatedSeries from_coeffs(SeriesContextPtr ctx, int val, std::vector<Elem> c, int prec);

  const SeriesContextPtr& context() const { return ctx_; }
  const FieldDesc& field() const { return *ctx_->F; }
  /// Least j with a nonzero coefficient; the precision when indistinguishable from zero.
  int valuation() const { return c_.empty() ? prec_ : val_; }
  int precision() const { return prec_; }
  bool is_zero() const { return c_.empty(); }
  /// Zero known all the way to the cap, as produced by exact constructions.
  bool is_exact_zero() const { return c_.empty() && prec_ >= ctx_->cap; }
  Elem coeff(int j) const;
  Elem leading() const { return c_.empty() ? 0 : c_.front(); }

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator-() const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator/(const TruncatedSeries& o) const { return *this * o.inverse(); }
  TruncatedSeries scaled(Elem c) const;
  TruncatedSeries shifted(int k) const;
  TruncatedSeries inverse() const;
  TruncatedSeries pow(std::uint64_t n) const;
  /// The p^k-th power, computed coefficientwise.
  TruncatedSeries frob_p(unsigned k) const;
  TruncatedSeries with_precision(int prec) const;

  /// Equal to within the joint precision.
  bool equals(const TruncatedSeries& o) const { return (*this - o).is_zero(); }
  std::string str(int max_terms = 8) const;

 private:
  void normalize();
  void check(const TruncatedSeries& o) const;
  SeriesContextPtr ctx_;
  int val_ = 0;
  int prec_ = 0;
  std::vector<Elem> c_;  // c_[i] multiplies t^{val_+i}; c_.front() != 0 when nonempty
};

/// Ring adapter; frob(x, i) is the q^i-th power.
struct SeriesRing {
  using value_type = TruncatedSeries;
  SeriesContextPtr ctx;

  TruncatedSeries zero() const { return TruncatedSeries(ctx); }
  TruncatedSeries one() const { return TruncatedSeries::constant(ctx, 1); }
  TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) const { return a + b; }
  TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) const { return a - b; }
  TruncatedSeries neg(const TruncatedSeries& a) const { return -a; }
  TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) const { return a * b; }
  bool is_zero(const TruncatedSeries& a) const { return a.is_exact_zero(); }
  TruncatedSeries frob(const TruncatedSeries& a, unsigned i) const { return a.frob_p(ctx->f * i); }
  TruncatedSeries from_int(std::int64_t v) const { return TruncatedSeries::constant(ctx, ctx->F->from_int(v)); }
  TruncatedSeries scalar(Elem c) const { return TruncatedSeries::constant(ctx, c); }
};

/// A valuation in pi-units. When the quantity vanished to precision, value is
/// the precision and lower_bound is set.
struct PiValuation {
  Rational value;
  bool lower_bound = false;
  std::string str() const;
};

PiValuation pi_valuation(const TruncatedSeries& s, int e);

}  // namespace ltlab
