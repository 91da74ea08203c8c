#include "ltlab/series.hpp"

#include <algorithm>
#include <sstream>

namespace ltlab {

SeriesContextPtr make_series_context(FieldPtr F, unsigned f, int cap, int floor) {
  if (cap <= 0) throw InvalidArgument("series cap must be positive");
  return std::make_shared<const SeriesContext>(SeriesContext{std::move(F), f, cap, floor});
}

TruncatedSeries::TruncatedSeries(SeriesContextPtr ctx) : ctx_(std::move(ctx)) { prec_ = ctx_->cap; }

TruncatedSeries TruncatedSeries::constant(SeriesContextPtr ctx, Elem c) { return monomial(std::move(ctx), c, 0); }

TruncatedSeries TruncatedSeries::monomial(SeriesContextPtr ctx, Elem c, int j) {
  TruncatedSeries r(ctx);
  if (c != 0 && j < r.prec_) {
    r.val_ = j;
    r.c_.push_back(c);
  }
  return r;
}

TruncatedSeries TruncatedSeries::from_coeffs(SeriesContextPtr ctx, int val, std::vector<Elem> c, int prec) {
  TruncatedSeries r(ctx);
  r.val_ = val;
  r.c_ = std::move(c);
  r.prec_ = std::min(prec, r.ctx_->cap);
  r.normalize();
  return r;
}

void TruncatedSeries::normalize() {
  if (prec_ < ctx_->floor) throw PrecisionError("series precision fell below the configured floor");
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    val_ += static_cast<int>(lead);
  }
  if (c_.empty()) return;
  const long keep = static_cast<long>(prec_) - val_;
  if (keep <= 0) {
    c_.clear();
    return;
  }
  if (static_cast<long>(c_.size()) > keep) c_.resize(static_cast<std::size_t>(keep));
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void TruncatedSeries::check(const TruncatedSeries& o) const {
  if (!ctx_ || !o.ctx_) throw InvalidArgument("uninitialized series");
  if (ctx_ != o.ctx_ && !(*ctx_->F == *o.ctx_->F && ctx_->cap == o.ctx_->cap))
    throw InvalidArgument("series over different contexts");
}

Elem TruncatedSeries::coeff(int j) const {
  if (j >= prec_) throw PrecisionError("coefficient beyond known precision");
  if (c_.empty() || j < val_ || j - val_ >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(j - val_)];
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  check(o);
  if (o.c_.empty() && o.prec_ >= prec_) return *this;
  if (c_.empty() && prec_ >= o.prec_) return o;
  TruncatedSeries r(ctx_);
  r.prec_ = std::min(prec_, o.prec_);
  const int lo = std::min(valuation(), o.valuation());
  if (lo >= r.prec_) {
    r.c_.clear();
    return r;
  }
  r.val_ = lo;
  r.c_.assign(static_cast<std::size_t>(r.prec_ - lo), 0);
  const FieldDesc& F = *ctx_->F;
  for (std::size_t i = 0; i < c_.size() && val_ + static_cast<int>(i) < r.prec_; ++i)
    r.c_[static_cast<std::size_t>(val_ - lo) + i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size() && o.val_ + static_cast<int>(i) < r.prec_; ++i) {
    auto& slot = r.c_[static_cast<std::size_t>(o.val_ - lo) + i];
    slot = F.add(slot, o.c_[i]);
  }
  r.normalize();
  return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& c : r.c_) c = ctx_->F->neg(c);
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const { return *this + (-o); }

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  check(o);
  TruncatedSeries r(ctx_);
  const long va = valuation(), vb = o.valuation();
  r.prec_ = static_cast<int>(std::min<long>({static_cast<long>(prec_) + vb, static_cast<long>(o.prec_) + va, ctx_->cap}));
  if (c_.empty() || o.c_.empty()) {
    r.normalize();
    return r;
  }
  r.val_ = val_ + o.val_;
  if (r.val_ >= r.prec_) {
    r.normalize();
    return r;
  }
  const std::size_t len = static_cast<std::size_t>(r.prec_ - r.val_);
  r.c_.assign(len, 0);
  const FieldDesc& F = *ctx_->F;
  for (std::size_t i = 0; i < c_.size() && i < len; ++i) {
    const Elem a = c_[i];
    if (a == 0) continue;
    const std::size_t lim = std::min(o.c_.size(), len - i);
    Elem* out = r.c_.data() + i;
    for (std::size_t j = 0; j < lim; ++j)
      if (o.c_[j]) out[j] = F.add(out[j], F.mul(a, o.c_[j]));
  }
  r.normalize();
  return r;
}

TruncatedSeries TruncatedSeries::scaled(Elem c) const {
  if (c == 0) {
    TruncatedSeries r(ctx_);
    r.prec_ = prec_;
    return r;
  }
  TruncatedSeries r = *this;
  for (auto& x : r.c_) x = ctx_->F->mul(x, c);
  return r;
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
  TruncatedSeries r = *this;
  r.val_ += k;
  r.prec_ = std::min(ctx_->cap, prec_ + k);
  r.normalize();
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (c_.empty()) throw InvalidArgument("inverting a series indistinguishable from zero");
  const FieldDesc& F = *ctx_->F;
  // Relative precision is preserved: a = t^v u with u known mod t^{prec - v}.
  const int rel = prec_ - val_;
  const int prec = std::min(ctx_->cap, -val_ + rel);
  TruncatedSeries r(ctx_);
  r.val_ = -val_;
  r.prec_ = prec;
  if (r.val_ >= prec) {
    r.normalize();
    return r;
  }
  const std::size_t len = static_cast<std::size_t>(prec - r.val_);
  r.c_.assign(len, 0);
  const Elem inv0 = F.inv(c_[0]);
  // Long division: b_n = -inv0 * sum_{k=1..n} a_k b_{n-k}.
  for (std::size_t n = 0; n < len; ++n) {
    Elem acc = n == 0 ? 1 : 0;
    for (std::size_t k = 1; k <= n && k < c_.size(); ++k)
      if (c_[k] && r.c_[n - k]) acc = F.sub(acc, F.mul(c_[k], r.c_[n - k]));
    r.c_[n] = F.mul(acc, inv0);
  }
  r.normalize();
  return r;
}

TruncatedSeries TruncatedSeries::pow(std::uint64_t n) const {
  TruncatedSeries result = constant(ctx_, 1), base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::frob_p(unsigned k) const {
  long scale = 1;
  for (unsigned i = 0; i < k; ++i) scale *= ctx_->F->p();
  TruncatedSeries r(ctx_);
  const long pr = static_cast<long>(prec_) * scale;
  r.prec_ = static_cast<int>(std::max<long>(std::min<long>(pr, ctx_->cap), INT_MIN / 4));
  if (c_.empty()) {
    r.normalize();
    return r;
  }
  const long v = static_cast<long>(val_) * scale;
  if (v >= r.prec_) {
    r.normalize();
    return r;
  }
  r.val_ = static_cast<int>(v);
  const std::size_t len = static_cast<std::size_t>(r.prec_ - r.val_);
  r.c_.assign(len, 0);
  const FieldDesc& F = *ctx_->F;
  for (std::size_t i = 0; i < c_.size() && i * static_cast<std::size_t>(scale) < len; ++i)
    r.c_[i * static_cast<std::size_t>(scale)] = F.frob(c_[i], k);
  r.normalize();
  return r;
}

TruncatedSeries TruncatedSeries::with_precision(int prec) const {
  TruncatedSeries r = *this;
  r.prec_ = std::min(prec_, prec);
  r.normalize();
  return r;
}

std::string TruncatedSeries::str(int max_terms) const {
  std::ostringstream os;
  int shown = 0;
  for (std::size_t i = 0; i < c_.size() && shown < max_terms; ++i) {
    if (c_[i] == 0) continue;
    os << (shown ? " + " : "") << c_[i] << "*t^" << (val_ + static_cast<int>(i));
    ++shown;
  }
  if (!shown) os << "0";
  os << " + O(t^" << prec_ << ")";
  return os.str();
}

std::string PiValuation::str() const { return to_string(value); }

PiValuation pi_valuation(const TruncatedSeries& s, int e) {
  return {make_rational(s.valuation(), e), s.is_zero()};
}

}  // namespace ltlab
