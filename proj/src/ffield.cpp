#include "ltlab/ffield.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace ltlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense polynomial arithmetic over F_p modulo a monic f; used only while
// searching for moduli.
class PolyModRing {
 public:
  PolyModRing(unsigned p, const std::vector<unsigned>& f) : p_(p), f_(f), m_(f.size() - 1) {}

  std::vector<unsigned> mul(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
    std::vector<unsigned> prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
      if (!a[i]) continue;
      for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
    }
    for (unsigned k = 2 * m_ - 1; k-- > m_;) {
      unsigned c = prod[k];
      if (!c) continue;
      prod[k] = 0;
      for (unsigned i = 0; i < m_; ++i)
        prod[k - m_ + i] = (prod[k - m_ + i] + (p_ - c) * f_[i]) % p_;
    }
    prod.resize(m_);
    return prod;
  }

  std::vector<unsigned> pow(std::vector<unsigned> base, std::uint64_t e) const {
    std::vector<unsigned> r(m_, 0);
    r[0] = 1;
    while (e) {
      if (e & 1) r = mul(r, base);
      e >>= 1;
      if (e) base = mul(base, base);
    }
    return r;
  }

  std::vector<unsigned> x() const {
    std::vector<unsigned> v(m_, 0);
    if (m_ == 1) {
      v[0] = (p_ - f_[0]) % p_;
    } else {
      v[1] = 1;
    }
    return v;
  }

  bool is_one(const std::vector<unsigned>& v) const {
    if (v[0] != 1) return false;
    for (unsigned i = 1; i < m_; ++i)
      if (v[i]) return false;
    return true;
  }

  // Horner evaluation of g (coefficients over F_p) at y.
  std::vector<unsigned> eval(const std::vector<unsigned>& g, const std::vector<unsigned>& y) const {
    std::vector<unsigned> acc(m_, 0);
    for (std::size_t k = g.size(); k-- > 0;) {
      acc = mul(acc, y);
      acc[0] = (acc[0] + g[k]) % p_;
    }
    return acc;
  }

 private:
  unsigned p_;
  std::vector<unsigned> f_;
  unsigned m_;
};

std::mutex& registry_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<std::pair<unsigned, unsigned>, FieldPtr>& registry() {
  static std::map<std::pair<unsigned, unsigned>, FieldPtr> r;
  return r;
}

std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>>& conway_cache() {
  static std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> c;
  return c;
}

std::vector<unsigned> conway_search(unsigned p, unsigned m) {
  const std::uint64_t order = ipow(p, m) - 1;
  const auto factors = prime_factors(order);
  std::vector<std::pair<std::uint64_t, std::vector<unsigned>>> subs;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d) continue;
    subs.emplace_back(order / (ipow(p, d) - 1), conway_polynomial(p, d));
  }
  const std::uint64_t count = ipow(p, m);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    // idx's base-p digits, most significant first, are (a_{m-1}, ..., a_0);
    // the coefficient of x^k is (-1)^{m-k} a_k.
    std::vector<unsigned> f(m + 1, 0);
    f[m] = 1;
    std::uint64_t rest = idx;
    for (unsigned k = 0; k < m; ++k) {
      unsigned a = static_cast<unsigned>(rest % p);
      rest /= p;
      f[k] = ((m - k) % 2 == 0) ? a : (p - a) % p;
    }
    if (f[0] == 0) continue;
    PolyModRing ring(p, f);
    const auto x = ring.x();
    bool ok = true;
    for (const auto& [ratio, cd] : subs) {
      auto y = ring.pow(x, ratio);
      auto v = ring.eval(cd, y);
      for (unsigned c : v)
        if (c) { ok = false; break; }
      if (!ok) break;
    }
    if (!ok) continue;
    if (!ring.is_one(ring.pow(x, order))) continue;
    for (auto r : factors) {
      if (ring.is_one(ring.pow(x, order / r))) { ok = false; break; }
    }
    if (ok) return f;
  }
  throw std::logic_error("no Conway polynomial found");
}

}  // namespace

std::vector<unsigned> conway_polynomial(unsigned p, unsigned m) {
  if (!is_prime(p)) throw InvalidArgument("characteristic must be prime");
  if (m == 0) throw InvalidArgument("extension degree must be positive");
  if (ipow(p, m) > kMaxFieldOrder) throw GuardExceeded("field order exceeds table limit");
  {
    std::lock_guard lock(registry_mutex());
    auto it = conway_cache().find({p, m});
    if (it != conway_cache().end()) return it->second;
  }
  auto f = conway_search(p, m);
  std::lock_guard lock(registry_mutex());
  conway_cache().emplace(std::pair{p, m}, f);
  return f;
}

FieldDesc::FieldDesc(unsigned p, unsigned m, std::vector<unsigned> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  size_ = static_cast<Elem>(ipow(p, m));
  order_ = size_ - 1;
  for (unsigned i = 0; i <= m; ++i) pow_p_.push_back(static_cast<Elem>(ipow(p, i)));

  exp_.assign(order_ == 0 ? 1 : order_, 0);
  log_.assign(size_, 0);
  std::vector<unsigned> d(m, 0);
  d[0] = 1;
  for (std::uint32_t k = 0; k < order_; ++k) {
    Elem r = 0;
    for (unsigned i = 0; i < m; ++i) r += d[i] * pow_p_[i];
    exp_[k] = r;
    log_[r] = k;
    // multiply by x
    unsigned top = d[m - 1];
    for (unsigned i = m - 1; i > 0; --i) d[i] = d[i - 1];
    d[0] = 0;
    if (top)
      for (unsigned i = 0; i < m; ++i) d[i] = (d[i] + (p - top) * modulus_[i]) % p;
  }
  if (m == 1) gen_prime_ = exp_.size() > 1 ? exp_[1] : 1;

  basis_trace_.resize(m);
  for (unsigned i = 0; i < m; ++i) {
    Elem b = (i == 0) ? 1 : exp_[i % (order_ ? order_ : 1)];
    if (m == 1) b = 1;
    Elem acc = 0;
    for (unsigned j = 0; j < m; ++j) acc = add(acc, frob(b, j));
    basis_trace_[i] = acc;  // lies in F_p, so rank == value
  }
}

Elem FieldDesc::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Elem FieldDesc::add_digits(Elem a, Elem b) const {
  Elem r = 0, mult = 1;
  while (a || b) {
    unsigned s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

Elem FieldDesc::neg(Elem a) const {
  if (p_ == 2) return a;
  Elem r = 0, mult = 1;
  while (a) {
    unsigned d = a % p_;
    r += ((p_ - d) % p_) * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

Elem FieldDesc::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : order_ - l];
}

Elem FieldDesc::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::uint64_t>(log_[a]) * (e % order_) % order_];
}

Elem FieldDesc::frob(Elem a, unsigned k) const {
  if (a == 0) return 0;
  k %= m_;
  return exp_[static_cast<std::uint64_t>(log_[a]) * (pow_p_[k] % order_) % order_];
}

std::uint32_t FieldDesc::log(Elem a) const {
  if (a == 0) throw std::domain_error("log of zero");
  return log_[a];
}

std::vector<unsigned> FieldDesc::digits(Elem a) const {
  std::vector<unsigned> d(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Elem FieldDesc::from_digits(std::span<const unsigned> d) const {
  if (d.size() != m_) throw InvalidArgument("digit vector has wrong length");
  Elem r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    if (d[i] >= p_) throw InvalidArgument("digit out of range");
    r += d[i] * pow_p_[i];
  }
  return r;
}

unsigned FieldDesc::abs_trace(Elem a) const {
  unsigned acc = 0;
  for (unsigned i = 0; i < m_ && a; ++i) {
    acc = (acc + (a % p_) * basis_trace_[i]) % p_;
    a /= p_;
  }
  return acc;
}

bool FieldDesc::in_subfield(Elem a, unsigned d) const {
  if (d == 0 || m_ % d) throw InvalidArgument("subfield degree must divide m");
  return frob(a, d) == a;
}

Elem FieldDesc::embed_from(const FieldDesc& sub, Elem a) const {
  if (sub.p_ != p_ || m_ % sub.m_) throw InvalidArgument("not a subfield");
  if (a == 0) return 0;
  const std::uint64_t ratio = order_ / sub.order_;
  return exp_[sub.log(a) * ratio % order_];
}

Elem FieldDesc::restrict_to(const FieldDesc& sub, Elem a) const {
  if (sub.p_ != p_ || m_ % sub.m_) throw InvalidArgument("not a subfield");
  if (a == 0) return 0;
  const std::uint32_t ratio = order_ / sub.order_;
  const std::uint32_t l = log_[a];
  if (l % ratio) throw InvalidArgument("element does not lie in the subfield");
  return sub.exp_[l / ratio];
}

FieldPtr make_field(unsigned p, unsigned m) {
  if (!is_prime(p)) throw InvalidArgument("characteristic must be prime");
  if (m == 0) throw InvalidArgument("extension degree must be positive");
  if (ipow(p, m) > kMaxFieldOrder) throw GuardExceeded("field order exceeds table limit");
  {
    std::lock_guard lock(registry_mutex());
    auto it = registry().find({p, m});
    if (it != registry().end()) return it->second;
  }
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) make_field(p, d);
  auto modulus = conway_polynomial(p, m);
  FieldPtr f(new FieldDesc(p, m, std::move(modulus)));
  // Every stored embedding sends the subfield generator to x^{ratio}; check
  // that this is a root of the subfield modulus.
  for (unsigned d = 1; d < m; ++d) {
    if (m % d) continue;
    FieldPtr sub;
    {
      std::lock_guard lock(registry_mutex());
      sub = registry().at({p, d});
    }
    Elem y = f->embed_from(*sub, sub->generator());
    Elem acc = 0;
    const auto& cd = sub->modulus();
    for (std::size_t k = cd.size(); k-- > 0;) acc = f->add(f->mul(acc, y), f->from_int(cd[k]));
    if (acc != 0) throw std::logic_error("subfield embedding is not a root of the subfield modulus");
  }
  std::lock_guard lock(registry_mutex());
  auto [it, inserted] = registry().emplace(std::pair{p, m}, f);
  return it->second;
}

Elem rel_trace(const FieldDesc& field, Elem a, const FieldDesc& sub) {
  if (sub.p() != field.p() || field.m() % sub.m())
    throw InvalidArgument("trace target must be a subfield");
  const unsigned d = sub.m();
  Elem acc = 0;
  for (unsigned j = 0; j < field.m() / d; ++j) acc = field.add(acc, field.frob(a, d * j));
  return field.restrict_to(sub, acc);
}

std::vector<Elem> rel_trace_table(const FieldDesc& field, const FieldDesc& sub) {
  std::vector<Elem> table(field.size());
  // The trace is F_p-linear: fill from the images of the basis digits.
  std::vector<Elem> basis(field.m());
  Elem pw = 1;
  for (unsigned i = 0; i < field.m(); ++i, pw *= field.p()) basis[i] = rel_trace(field, pw, sub);
  table[0] = 0;
  for (Elem a = 1; a < field.size(); ++a) {
    // a = a' + c p^i where i is the lowest nonzero digit position
    Elem rest = a;
    unsigned i = 0;
    Elem pi = 1;
    while (rest % field.p() == 0) {
      rest /= field.p();
      ++i;
      pi *= field.p();
    }
    table[a] = sub.add(table[a - pi], basis[i]);
  }
  return table;
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!field_ || !o.field_ || !(*field_ == *o.field_)) throw InvalidArgument("field mismatch");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(v_, o.v_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(v_, o.v_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(v_, o.v_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(v_, o.v_)};
}

std::string serialize(const FieldElement& a) {
  std::ostringstream os;
  os << a.field().p() << '^' << a.field().m() << ':';
  auto d = a.field().digits(a.value());
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  return os.str();
}

FieldElement deserialize(const std::string& s) {
  unsigned p = 0, m = 0;
  char caret = 0, colon = 0;
  std::istringstream is(s);
  if (!(is >> p >> caret >> m >> colon) || caret != '^' || colon != ':')
    throw InvalidArgument("malformed field element: " + s);
  auto f = make_field(p, m);
  std::vector<unsigned> d;
  unsigned v;
  while (is >> v) {
    d.push_back(v);
    char sep;
    if (!(is >> sep)) break;
    if (sep != ',') throw InvalidArgument("malformed field element: " + s);
  }
  return {f, f->from_digits(d)};
}

}  // namespace ltlab
