#pragma once

// q-linearized polynomials X -> sum_i a_i X^{q^i} over a ring adapter whose
// frob(x, i) is the q^i-th power map.

#include <vector>

#include "ltlab/errors.hpp"

namespace ltlab {

template <class R>
struct AdditivePolynomial {
  using T = typename R::value_type;
  std::vector<T> a;  // a[i] multiplies X^{q^i}

  std::size_t degree_index() const { return a.empty() ? 0 : a.size() - 1; }

  T evaluate(const R& ring, const T& x) const {
    T acc = ring.zero();
    T xp = x;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i > 0) xp = ring.frob(xp, 1);
      if (!ring.is_zero(a[i])) acc = ring.add(acc, ring.mul(a[i], xp));
    }
    return acc;
  }
};

/// (f o g)_k = sum_{i+j=k} f_i g_j^{q^i}.
template <class R>
AdditivePolynomial<R> additive_compose(const R& ring, const AdditivePolynomial<R>& f, const AdditivePolynomial<R>& g) {
  AdditivePolynomial<R> out;
  if (f.a.empty() || g.a.empty()) return out;
  out.a.assign(f.a.size() + g.a.size() - 1, ring.zero());
  for (std::size_t i = 0; i < f.a.size(); ++i)
    for (std::size_t j = 0; j < g.a.size(); ++j)
      out.a[i + j] = ring.add(out.a[i + j], ring.mul(f.a[i], ring.frob(g.a[j], static_cast<unsigned>(i))));
  return out;
}

template <class R>
AdditivePolynomial<R> additive_add(const R& ring, const AdditivePolynomial<R>& f, const AdditivePolynomial<R>& g) {
  AdditivePolynomial<R> out;
  out.a.assign(std::max(f.a.size(), g.a.size()), ring.zero());
  for (std::size_t i = 0; i < f.a.size(); ++i) out.a[i] = ring.add(out.a[i], f.a[i]);
  for (std::size_t i = 0; i < g.a.size(); ++i) out.a[i] = ring.add(out.a[i], g.a[i]);
  return out;
}

/// [pi]_u(X) = pi X + u_1 X^q + ... + u_{h-1} X^{q^{h-1}} + X^{q^h}.
template <class R>
AdditivePolynomial<R> make_univ(const R& ring, const typename R::value_type& pi,
                                const std::vector<typename R::value_type>& u, unsigned h) {
  if (h == 0) throw InvalidArgument("height must be positive");
  if (u.size() + 1 != h) throw InvalidArgument("make_univ needs h-1 deformation parameters");
  AdditivePolynomial<R> f;
  f.a.push_back(pi);
  for (const auto& c : u) f.a.push_back(c);
  f.a.push_back(ring.one());
  return f;
}

/// [pi]_LT(X) = pi X + (-1)^{h-1} X^q.
template <class R>
AdditivePolynomial<R> make_lt(const R& ring, const typename R::value_type& pi, unsigned h) {
  AdditivePolynomial<R> f;
  f.a.push_back(pi);
  f.a.push_back(h % 2 ? ring.one() : ring.neg(ring.one()));
  return f;
}

}  // namespace ltlab
