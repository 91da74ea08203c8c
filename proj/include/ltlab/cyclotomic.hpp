#pragma once

// Exact elements of Z[zeta_p] and Q(zeta_p).

#include <complex>
#include <string>
#include <vector>

#include "ltlab/rational.hpp"

namespace ltlab {

/// sum_{i < p-1} n_i zeta^i, with zeta^{p-1} eliminated via the cyclotomic relation.
class CyclotomicInteger {
 public:
  CyclotomicInteger() = default;
  explicit CyclotomicInteger(unsigned p);
  CyclotomicInteger(unsigned p, const BigInt& n);
  /// zeta^e.
  static CyclotomicInteger root(unsigned p, unsigned e);

  unsigned p() const { return p_; }
  const std::vector<BigInt>& coords() const { return c_; }

  bool is_rational() const;
  bool is_zero() const;
  /// Only meaningful when is_rational().
  const BigInt& rational_part() const { return c_[0]; }

  /// Adds n * zeta^e in place; the hot path of the character transform.
  void add_root_multiple(unsigned e, const BigInt& n);

  CyclotomicInteger operator+(const CyclotomicInteger& o) const;
  CyclotomicInteger operator-(const CyclotomicInteger& o) const;
  CyclotomicInteger operator*(const CyclotomicInteger& o) const;
  CyclotomicInteger operator-() const;
  CyclotomicInteger& operator+=(const CyclotomicInteger& o);
  CyclotomicInteger scaled(const BigInt& k) const;
  bool operator==(const CyclotomicInteger& o) const { return p_ == o.p_ && c_ == o.c_; }

  /// Gcd of all coordinates (0 for the zero element).
  BigInt content() const;
  CyclotomicInteger divided_exact(const BigInt& k) const;

  /// Value at exp(2 pi i / p). Floating point; used by test oracles only.
  std::complex<double> evaluate() const;
  std::string str() const;

 private:
  void check(const CyclotomicInteger& o) const;
  unsigned p_ = 2;
  std::vector<BigInt> c_{BigInt(0)};
};

/// num / den with den > 0 and gcd(content(num), den) = 1.
class CyclotomicRational {
 public:
  CyclotomicRational() = default;
  explicit CyclotomicRational(const CyclotomicInteger& n, const BigInt& d = 1);

  const CyclotomicInteger& num() const { return num_; }
  const BigInt& den() const { return den_; }

  CyclotomicRational operator+(const CyclotomicRational& o) const;
  CyclotomicRational operator*(const CyclotomicRational& o) const;
  CyclotomicRational divided(const BigInt& k) const;
  bool operator==(const CyclotomicRational& o) const { return num_ == o.num_ && den_ == o.den_; }

  bool is_rational() const { return num_.is_rational(); }
  Rational rational_value() const { return make_rational(num_.rational_part(), den_); }
  std::string str() const;

 private:
  void normalize();
  CyclotomicInteger num_;
  BigInt den_ = 1;
};

}  // namespace ltlab
