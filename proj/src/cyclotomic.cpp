#include "ltlab/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ltlab/errors.hpp"
#include "ltlab/ffield.hpp"

namespace ltlab {

CyclotomicInteger::CyclotomicInteger(unsigned p) : p_(p), c_(p - 1, BigInt(0)) {
  if (!is_prime(p)) throw InvalidArgument("cyclotomic order must be prime");
}

CyclotomicInteger::CyclotomicInteger(unsigned p, const BigInt& n) : CyclotomicInteger(p) { c_[0] = n; }

CyclotomicInteger CyclotomicInteger::root(unsigned p, unsigned e) {
  CyclotomicInteger r(p);
  r.add_root_multiple(e % p, 1);
  return r;
}

void CyclotomicInteger::add_root_multiple(unsigned e, const BigInt& n) {
  e %= p_;
  if (e + 1 < p_) {
    c_[e] += n;
  } else {
    for (auto& c : c_) c -= n;
  }
}

bool CyclotomicInteger::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool CyclotomicInteger::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

void CyclotomicInteger::check(const CyclotomicInteger& o) const {
  if (p_ != o.p_) throw InvalidArgument("cyclotomic order mismatch");
}

CyclotomicInteger CyclotomicInteger::operator+(const CyclotomicInteger& o) const {
  CyclotomicInteger r = *this;
  r += o;
  return r;
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& o) {
  check(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CyclotomicInteger CyclotomicInteger::operator-(const CyclotomicInteger& o) const { return *this + (-o); }

CyclotomicInteger CyclotomicInteger::operator-() const {
  CyclotomicInteger r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CyclotomicInteger CyclotomicInteger::operator*(const CyclotomicInteger& o) const {
  check(o);
  CyclotomicInteger r(p_);
  for (unsigned i = 0; i + 1 < p_; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j + 1 < p_; ++j) {
      if (o.c_[j] == 0) continue;
      r.add_root_multiple((i + j) % p_, c_[i] * o.c_[j]);
    }
  }
  return r;
}

CyclotomicInteger CyclotomicInteger::scaled(const BigInt& k) const {
  CyclotomicInteger r = *this;
  for (auto& c : r.c_) c *= k;
  return r;
}

BigInt CyclotomicInteger::content() const {
  BigInt g = 0;
  for (const auto& c : c_) g = boost::multiprecision::gcd(g, c);
  return g;
}

CyclotomicInteger CyclotomicInteger::divided_exact(const BigInt& k) const {
  CyclotomicInteger r = *this;
  for (auto& c : r.c_) {
    if (c % k != 0) throw std::logic_error("inexact cyclotomic division");
    c /= k;
  }
  return r;
}

std::complex<double> CyclotomicInteger::evaluate() const {
  std::complex<double> acc = 0;
  for (unsigned i = 0; i + 1 < p_; ++i) {
    double ang = 2 * std::numbers::pi * i / p_;
    acc += c_[i].convert_to<double>() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

std::string CyclotomicInteger::str() const {
  if (is_rational()) return c_[0].str();
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ']';
  return os.str();
}

CyclotomicRational::CyclotomicRational(const CyclotomicInteger& n, const BigInt& d) : num_(n), den_(d) {
  if (d == 0) throw InvalidArgument("zero denominator");
  normalize();
}

void CyclotomicRational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_.content(), den_);
  if (g > 1) {
    num_ = num_.divided_exact(g);
    den_ /= g;
  }
}

CyclotomicRational CyclotomicRational::operator+(const CyclotomicRational& o) const {
  return CyclotomicRational(num_.scaled(o.den_) + o.num_.scaled(den_), den_ * o.den_);
}

CyclotomicRational CyclotomicRational::operator*(const CyclotomicRational& o) const {
  return CyclotomicRational(num_ * o.num_, den_ * o.den_);
}

CyclotomicRational CyclotomicRational::divided(const BigInt& k) const { return CyclotomicRational(num_, den_ * k); }

std::string CyclotomicRational::str() const {
  if (num_.is_rational()) return to_string(rational_value());
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

}  // namespace ltlab
