#pragma once

// Division-free determinants over any ring adapter, plus the field adapter.
//
// A ring adapter R provides value_type, zero(), one(), add, sub, neg, mul,
// is_zero and frob(x, i) meaning x^{q^i}.

#include <cstdint>
#include <vector>

#include "ltlab/ffield.hpp"

namespace ltlab {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// F_{p^m} viewed as an algebra over F_q, q = p^f.
struct FieldRing {
  using value_type = Elem;
  const FieldDesc* F;
  unsigned f;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { return F->add(a, b); }
  Elem sub(Elem a, Elem b) const { return F->sub(a, b); }
  Elem neg(Elem a) const { return F->neg(a); }
  Elem mul(Elem a, Elem b) const { return F->mul(a, b); }
  bool is_zero(Elem a) const { return a == 0; }
  Elem frob(Elem a, unsigned i) const { return F->frob(a, f * i); }
  Elem from_int(std::int64_t v) const { return F->from_int(v); }
};

namespace detail {

template <class R>
typename R::value_type laplace(const R& ring, const Matrix<typename R::value_type>& m, std::size_t row,
                               std::uint32_t used) {
  const std::size_t n = m.size();
  if (row == n) return ring.one();
  auto acc = ring.zero();
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (used & (1u << c)) continue;
    if (!ring.is_zero(m[row][c])) {
      auto sub = laplace(ring, m, row + 1, used | (1u << c));
      auto term = ring.mul(m[row][c], sub);
      acc = sign > 0 ? ring.add(acc, term) : ring.sub(acc, term);
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace detail

/// Cofactor expansion; intended for the small (h <= 6) matrices used here.
template <class R>
typename R::value_type determinant(const R& ring, const Matrix<typename R::value_type>& m) {
  if (m.empty()) return ring.one();
  for (const auto& row : m)
    if (row.size() != m.size()) throw InvalidArgument("determinant of a non-square matrix");
  return detail::laplace(ring, m, 0, 0);
}

/// Moore matrix rows (x_i, x_i^q, ..., x_i^{q^{h-1}}).
template <class R>
Matrix<typename R::value_type> moore_matrix(const R& ring, const std::vector<typename R::value_type>& x) {
  const std::size_t h = x.size();
  Matrix<typename R::value_type> m(h, std::vector<typename R::value_type>(h, ring.zero()));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) m[i][j] = ring.frob(x[i], static_cast<unsigned>(j));
  return m;
}

/// The h x h matrix whose first row is given and whose row i >= 1 has 1 in
/// column i-1 and V_{j-i+1}^{q^i} in column j >= i (V is 1-based in that
/// formula; here V[0] = V_1). Only V_1..V_{h-1} are read.
template <class R>
Matrix<typename R::value_type> staircase_matrix(const R& ring, const std::vector<typename R::value_type>& first_row,
                                                const std::vector<typename R::value_type>& V) {
  const std::size_t h = first_row.size();
  Matrix<typename R::value_type> m(h, std::vector<typename R::value_type>(h, ring.zero()));
  m[0] = first_row;
  for (std::size_t i = 1; i < h; ++i) {
    m[i][i - 1] = ring.one();
    for (std::size_t j = i; j < h; ++j) m[i][j] = ring.frob(V.at(j - i), static_cast<unsigned>(i));
  }
  return m;
}

}  // namespace ltlab
