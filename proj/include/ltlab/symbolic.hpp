#pragma once

// Sparse multivariate polynomials over F_{p^m} and exact checks of the
// polynomial identities behind the determinant constructions.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ltlab/ffield.hpp"

namespace ltlab {

/// Variable universe and coefficient field shared by a family of polynomials.
struct PolyContext {
  FieldPtr F;
  unsigned f;  // q = p^f; frob(x, i) below is the q^i-th power
  std::vector<std::string> names;
  std::size_t term_guard = 10'000'000;
};
using PolyContextPtr = std::shared_ptr<const PolyContext>;

PolyContextPtr make_poly_context(FieldPtr F, unsigned f, std::vector<std::string> names,
                                 std::size_t term_guard = 10'000'000);

using Monomial = std::vector<std::uint32_t>;

/// Graded lexicographic: total degree first, then exponent vectors lexicographically.
struct GrLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class MultiPoly {
 public:
  using Terms = std::map<Monomial, Elem, GrLex>;

  MultiPoly() = default;
  explicit MultiPoly(PolyContextPtr ctx) : ctx_(std::move(ctx)) {}
  static MultiPoly constant(PolyContextPtr ctx, Elem c);
  static MultiPoly variable(PolyContextPtr ctx, std::size_t i);
  static MultiPoly variable(PolyContextPtr ctx, const std::string& name);

  const PolyContextPtr& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::uint64_t degree() const;

  /// Adds c * m in place.
  void add_term(const Monomial& m, Elem c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(Elem c) const;
  MultiPoly pow(std::uint64_t e) const;
  /// The p^k-th power: coefficients c -> c^{p^k}, exponents times p^k.
  MultiPoly frob_p(unsigned k) const;
  /// Replaces variable var by value.
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
  Elem evaluate(const std::vector<Elem>& point) const;

  bool operator==(const MultiPoly& o) const;
  std::string str() const;

 private:
  void check(const MultiPoly& o) const;
  PolyContextPtr ctx_;
  Terms terms_;
};

/// Ring adapter for the generic determinant and skew-polynomial code.
struct PolyRing {
  using value_type = MultiPoly;
  PolyContextPtr ctx;

  MultiPoly zero() const { return MultiPoly(ctx); }
  MultiPoly one() const { return MultiPoly::constant(ctx, 1); }
  MultiPoly add(const MultiPoly& a, const MultiPoly& b) const { return a + b; }
  MultiPoly sub(const MultiPoly& a, const MultiPoly& b) const { return a - b; }
  MultiPoly neg(const MultiPoly& a) const { return -a; }
  MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const { return a * b; }
  bool is_zero(const MultiPoly& a) const { return a.is_zero(); }
  /// a^{q^i}.
  MultiPoly frob(const MultiPoly& a, unsigned i) const { return a.frob_p(ctx->f * i); }
  MultiPoly from_int(std::int64_t v) const { return MultiPoly::constant(ctx, ctx->F->from_int(v)); }
  MultiPoly var(std::size_t i) const { return MultiPoly::variable(ctx, i); }
};

struct IdentityReport {
  std::string identity;
  std::uint64_t q;
  unsigned h;
  bool holds;
  double wall_time_ms;
  std::map<std::string, std::size_t> term_counts;
  std::string note;
};

const std::vector<std::string>& identity_names();

/// Throws InvalidArgument for an unknown name and GuardExceeded when the
/// instance is too large.
IdentityReport verify_identity(const std::string& name, std::uint64_t q, unsigned h);

}  // namespace ltlab
