#include <random>

#include "doctest.h"
#include "ltlab/hypersurface.hpp"
#include "ltlab/skewpoly.hpp"
#include "ltlab/symbolic.hpp"

using namespace ltlab;

namespace {

// Product by explicit double loop into a flat map, independent of MultiPoly::operator*.
std::map<Monomial, Elem> naive_product(const MultiPoly& a, const MultiPoly& b) {
  const FieldDesc& F = *a.context()->F;
  std::map<Monomial, Elem> out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out[m] = F.add(out[m], F.mul(ca, cb));
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

MultiPoly random_poly(const PolyContextPtr& ctx, std::mt19937& rng, int terms, unsigned maxdeg) {
  MultiPoly r(ctx);
  for (int t = 0; t < terms; ++t) {
    Monomial m(ctx->names.size());
    for (auto& e : m) e = rng() % (maxdeg + 1);
    r.add_term(m, rng() % ctx->F->size());
  }
  return r;
}

}  // namespace

TEST_CASE("basic polynomial arithmetic") {
  auto F = make_field(2, 2);
  auto ctx = make_poly_context(F, 1, {"X", "Y", "Z"});
  auto X = MultiPoly::variable(ctx, "X"), Y = MultiPoly::variable(ctx, "Y");
  CHECK((X + Y).pow(2) == X.pow(2) + Y.pow(2));
  CHECK((X + Y).pow(4) == X.frob_p(2) + Y.frob_p(2));
  CHECK((X + X).is_zero());
  CHECK((X * Y - Y * X).is_zero());
  CHECK((X + Y).pow(3).size() == 4);
  CHECK_THROWS_AS(MultiPoly::variable(ctx, "W"), InvalidArgument);

  auto G = make_field(3, 1);
  auto c3 = make_poly_context(G, 1, {"X", "Y"});
  auto a = MultiPoly::variable(c3, 0), b = MultiPoly::variable(c3, 1);
  CHECK((a + b).pow(3) == a.pow(3) + b.pow(3));
  CHECK((a + b).pow(2).size() == 3);
  // substitution: X -> X + Y in X^2 gives X^2 + 2XY + Y^2
  CHECK(a.pow(2).substitute(0, a + b) == (a + b) * (a + b));
  CHECK(a.pow(2).evaluate({2, 1}) == 1);
  // mixed universes
  auto other = make_poly_context(G, 1, {"U", "V"});
  CHECK_THROWS_AS(a + MultiPoly::variable(other, 0), InvalidArgument);
}

TEST_CASE("multiplication agrees with naive product and is associative") {
  auto F = make_field(2, 2);
  auto ctx = make_poly_context(F, 1, {"X", "Y", "Z"});
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    auto a = random_poly(ctx, rng, 6, 3), b = random_poly(ctx, rng, 6, 3), c = random_poly(ctx, rng, 5, 2);
    auto ab = a * b;
    CHECK(std::map<Monomial, Elem>(ab.terms().begin(), ab.terms().end()) == naive_product(a, b));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    std::vector<Elem> pt{static_cast<Elem>(rng() % 4), static_cast<Elem>(rng() % 4), static_cast<Elem>(rng() % 4)};
    CHECK(ab.evaluate(pt) == F->mul(a.evaluate(pt), b.evaluate(pt)));
  }
}

TEST_CASE("term guard") {
  auto F = make_field(2, 1);
  auto ctx = make_poly_context(F, 1, {"X", "Y"}, 50);
  auto s = MultiPoly::variable(ctx, 0) + MultiPoly::variable(ctx, 1) + MultiPoly::constant(ctx, 1);
  CHECK_THROWS_AS(s.pow(15), GuardExceeded);
}

TEST_CASE("d_full splits as d_as plus the last-variable term, symbolically") {
  for (auto [p, f, h] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 1, 2}, {3, 1, 2}, {2, 1, 3}, {2, 2, 2}}) {
    std::vector<std::string> names;
    for (unsigned i = 1; i <= h; ++i) names.push_back("V" + std::to_string(i));
    auto ctx = make_poly_context(make_field(p, f), f, names);
    PolyRing R{ctx};
    std::vector<MultiPoly> V;
    for (unsigned i = 0; i < h; ++i) V.push_back(R.var(i));
    std::vector<MultiPoly> head(V.begin(), V.end() - 1);
    MultiPoly last = R.frob(V.back(), h) - V.back();
    if (h % 2 == 0) last = -last;
    CHECK(d_full(R, V) == d_as(R, head) + last);
  }
}

TEST_CASE("identities hold for small parameters") {
  for (const auto& name : identity_names())
    for (auto [q, h] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {3, 2}, {2, 3}, {4, 2}, {2, 4}}) {
      CAPTURE(name);
      CAPTURE(q);
      CAPTURE(h);
      auto rep = verify_identity(name, q, h);
      CHECK(rep.holds);
      CHECK(rep.wall_time_ms >= 0);
      CHECK_FALSE(rep.term_counts.empty());
    }
}

TEST_CASE("identity guards and names") {
  CHECK_THROWS_AS(verify_identity("nope", 2, 2), InvalidArgument);
  CHECK_THROWS_AS(verify_identity("prodmu", 3, 4), GuardExceeded);
  CHECK_THROWS_AS(verify_identity("BV", 6, 2), InvalidArgument);
  auto r = verify_identity("remark12", 3, 2);
  CHECK(r.note.find("fails") != std::string::npos);
  auto r3 = verify_identity("remark12", 2, 3);
  CHECK(r3.note.find("also holds") != std::string::npos);
}

TEST_CASE("height one and explicit small cases") {
  CHECK(verify_identity("prodmu", 2, 1).holds);
  CHECK(verify_identity("prodmu", 5, 1).holds);
  CHECK(verify_identity("b_involution", 2, 2).holds);
  // tau^2 coefficient for q = 2, h = 2, written out by hand
  auto ctx = make_poly_context(make_field(2, 1), 1, {"V1", "V2"});
  PolyRing R{ctx};
  auto V1 = R.var(0), V2 = R.var(1);
  SkewPolynomial<PolyRing> g(R, 2, {R.one(), V1, V2});
  auto top = d_operator(g, 2)[2];
  CHECK(top == (V1.pow(4) - V1) * V1.pow(2) - (V2.pow(4) - V2));
  CHECK(top == d_full(R, {V1, V2}));
}
