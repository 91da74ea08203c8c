#pragma once

// Finite fields F_{p^m} with Conway moduli, compatible subfield embeddings,
// traces and additive characters.
//
// An element is stored as its rank: the integer sum c_i p^i of its
// coefficient digits in the power basis 1, x, ..., x^{m-1}. Ranks are the
// canonical enumeration order for every exhaustive loop in the library.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ltlab/errors.hpp"

namespace ltlab {

using Elem = std::uint32_t;

/// Largest supported field order. Arithmetic is table driven.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 22;

bool is_prime(std::uint64_t n);

class FieldDesc {
 public:
  unsigned p() const { return p_; }
  unsigned m() const { return m_; }
  Elem size() const { return size_; }
  /// Monic modulus, lowest degree first (length m + 1).
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// The class of x, a primitive element.
  Elem generator() const { return m_ == 1 ? gen_prime_ : p_; }
  /// Image of an integer in the prime field.
  Elem from_int(std::int64_t v) const;

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    return add_digits(a, b);
  }
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= order_) s -= order_;
    return exp_[s];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// a^{p^k}.
  Elem frob(Elem a, unsigned k) const;
  Elem scalar_mul(std::int64_t c, Elem a) const { return mul(from_int(c), a); }

  /// Discrete logarithm to the base generator(); a must be nonzero.
  std::uint32_t log(Elem a) const;
  Elem exp(std::uint64_t k) const { return exp_[k % order_]; }

  std::vector<unsigned> digits(Elem a) const;
  Elem from_digits(std::span<const unsigned> d) const;

  /// Absolute trace to F_p, as an integer in [0, p).
  unsigned abs_trace(Elem a) const;
  /// True when a lies in the subfield of degree d (d | m).
  bool in_subfield(Elem a, unsigned d) const;

  /// Stored embedding of the degree-d subfield; d must divide m.
  Elem embed_from(const FieldDesc& sub, Elem a) const;
  /// Inverse of embed_from; throws InvalidArgument when a is not in the image.
  Elem restrict_to(const FieldDesc& sub, Elem a) const;

  bool operator==(const FieldDesc& o) const { return p_ == o.p_ && m_ == o.m_; }

 private:
  friend std::shared_ptr<const FieldDesc> make_field(unsigned p, unsigned m);
  FieldDesc(unsigned p, unsigned m, std::vector<unsigned> modulus);
  Elem add_digits(Elem a, Elem b) const;

  unsigned p_;
  unsigned m_;
  Elem size_;
  std::uint32_t order_;  // size - 1
  Elem gen_prime_ = 1;
  std::vector<unsigned> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<unsigned> basis_trace_;  // Tr(x^i), i < m
  std::vector<Elem> pow_p_;            // p^i, i <= m
};

using FieldPtr = std::shared_ptr<const FieldDesc>;

/// Returns the registered field of order p^m, constructing its Conway
/// modulus on first use. Repeated calls return the same object.
FieldPtr make_field(unsigned p, unsigned m);

/// Conway polynomial of degree m over F_p (lowest degree first), computed by
/// search in Conway order subject to the subfield compatibility condition.
std::vector<unsigned> conway_polynomial(unsigned p, unsigned m);

/// Relative trace from F_{p^m} down to its degree-d subfield, landed in that
/// subfield via the stored embedding.
Elem rel_trace(const FieldDesc& field, Elem a, const FieldDesc& sub);

/// Lookup table of rel_trace over every element of field (index = rank).
std::vector<Elem> rel_trace_table(const FieldDesc& field, const FieldDesc& sub);

/// Value semantic wrapper used at API boundaries.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const FieldDesc* f, Elem v) : field_(f), v_(v) {}
  FieldElement(const FieldPtr& f, Elem v) : field_(f.get()), v_(v) {}

  const FieldDesc& field() const { return *field_; }
  const FieldDesc* field_ptr() const { return field_; }
  Elem value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_->neg(v_)}; }
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(v_, e)}; }
  FieldElement frob(unsigned k) const { return {field_, field_->frob(v_, k)}; }
  FieldElement inverse() const { return {field_, field_->inv(v_)}; }

  bool operator==(const FieldElement& o) const {
    return v_ == o.v_ && (field_ == o.field_ || *field_ == *o.field_);
  }

 private:
  void check_same(const FieldElement& o) const;
  const FieldDesc* field_ = nullptr;
  Elem v_ = 0;
};

/// Cache-key text form: "p^m:d0,d1,...,d_{m-1}" with little-endian base-p digits.
std::string serialize(const FieldElement& a);
FieldElement deserialize(const std::string& s);

}  // namespace ltlab
