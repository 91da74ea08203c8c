#include <complex>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "ltlab/characters.hpp"
#include "ltlab/cyclotomic.hpp"
#include "ltlab/ffield.hpp"

using namespace ltlab;

namespace {

// Schoolbook product of digit vectors modulo the field modulus.
Elem naive_mul(const FieldDesc& F, Elem a, Elem b) {
  const unsigned p = F.p(), m = F.m();
  auto da = F.digits(a), db = F.digits(b);
  std::vector<unsigned> prod(2 * m, 0);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  const auto& f = F.modulus();
  for (unsigned k = 2 * m - 1; k >= m; --k) {
    unsigned c = prod[k];
    prod[k] = 0;
    for (unsigned i = 0; i < m; ++i) prod[k - m + i] = (prod[k - m + i] + (p - c) * f[i]) % p;
  }
  prod.resize(m);
  return F.from_digits(prod);
}

}  // namespace

TEST_CASE("Conway moduli match the standard table") {
  std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> known = {
      {{2, 1}, {1, 1}},
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 1}, {1, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
      {{5, 1}, {3, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{5, 4}, {2, 4, 4, 0, 1}},
  };
  for (const auto& [pm, poly] : known) {
    CAPTURE(pm.first);
    CAPTURE(pm.second);
    CHECK(conway_polynomial(pm.first, pm.second) == poly);
  }
}

TEST_CASE("make_field validates and is reproducible") {
  CHECK_THROWS_AS(make_field(4, 1), InvalidArgument);
  CHECK_THROWS_AS(make_field(2, 0), InvalidArgument);
  CHECK_THROWS_AS(make_field(2, 23), GuardExceeded);
  auto a = make_field(2, 2), b = make_field(2, 2);
  CHECK(a.get() == b.get());
  CHECK(a->size() == 4);
  auto f2 = make_field(2, 1);
  CHECK(f2->size() == 2);
}

TEST_CASE("table multiplication agrees with schoolbook multiplication") {
  for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 4}, {3, 2}, {3, 3}, {5, 2}, {2, 6}}) {
    auto F = make_field(p, m);
    for (Elem a = 0; a < F->size(); ++a)
      for (Elem b = 0; b < F->size(); ++b) REQUIRE(F->mul(a, b) == naive_mul(*F, a, b));
  }
}

TEST_CASE("F_9 group axioms by exhaustion") {
  auto F = make_field(3, 2);
  for (Elem a = 1; a < 9; ++a) {
    CHECK(F->pow(a, 8) == 1);
    CHECK(F->mul(a, F->inv(a)) == 1);
    for (Elem b = 0; b < 9; ++b) {
      CHECK(F->add(a, b) == F->add(b, a));
      CHECK(F->sub(F->add(a, b), b) == a);
    }
  }
  std::set<Elem> powers;
  for (unsigned k = 0; k < 8; ++k) powers.insert(F->pow(F->generator(), k));
  CHECK(powers.size() == 8);
}

TEST_CASE("Frobenius is an automorphism fixing exactly the prime field") {
  for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 8}, {3, 4}, {2, 16}}) {
    auto F = make_field(p, m);
    std::vector<bool> seen(F->size(), false);
    unsigned fixed = 0;
    for (Elem a = 0; a < F->size(); ++a) {
      Elem b = F->frob(a, 1);
      REQUIRE(!seen[b]);
      seen[b] = true;
      if (b == a) ++fixed;
      if (a < 64)
        for (Elem c = 0; c < 64 && c < F->size(); ++c) {
          REQUIRE(F->frob(F->mul(a, c), 1) == F->mul(b, F->frob(c, 1)));
          REQUIRE(F->frob(F->add(a, c), 1) == F->add(b, F->frob(c, 1)));
        }
    }
    CHECK(fixed == p);
  }
}

TEST_CASE("embeddings are homomorphisms commuting with Frobenius") {
  for (auto [p, d, m] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 2, 4}, {2, 3, 6}, {2, 4, 12}, {3, 2, 6}, {2, 6, 12}}) {
    auto S = make_field(p, d), F = make_field(p, m);
    for (Elem a = 0; a < S->size(); ++a) {
      Elem ea = F->embed_from(*S, a);
      CHECK(F->in_subfield(ea, d));
      CHECK(F->restrict_to(*S, ea) == a);
      CHECK(F->frob(ea, 1) == F->embed_from(*S, S->frob(a, 1)));
      for (Elem b = 0; b < S->size(); ++b) {
        CHECK(F->embed_from(*S, S->mul(a, b)) == F->mul(ea, F->embed_from(*S, b)));
        CHECK(F->embed_from(*S, S->add(a, b)) == F->add(ea, F->embed_from(*S, b)));
      }
    }
    // Embedding d -> m factors through any intermediate field.
  }
  auto F2 = make_field(2, 2), F4 = make_field(2, 4), F8 = make_field(2, 8);
  for (Elem a = 0; a < 4; ++a) CHECK(F8->embed_from(*F4, F4->embed_from(*F2, a)) == F8->embed_from(*F2, a));
  CHECK_THROWS_AS(F8->restrict_to(*F2, F8->generator()), InvalidArgument);
}

TEST_CASE("relative traces") {
  auto F1 = make_field(2, 1), F2 = make_field(2, 2), F4 = make_field(2, 4);
  CHECK(rel_trace(*F2, 1, *F1) == 0);
  for (Elem a = 0; a < 16; ++a) {
    CHECK(rel_trace(*F4, a, *F4) == a);
    CHECK(rel_trace(*F2, rel_trace(*F4, a, *F2), *F1) == rel_trace(*F4, a, *F1));
    CHECK(rel_trace(*F4, a, *F1) == F4->abs_trace(a));
  }
  auto tab = rel_trace_table(*F4, *F2);
  for (Elem a = 0; a < 16; ++a) CHECK(tab[a] == rel_trace(*F4, a, *F2));
  auto G = make_field(3, 4), H = make_field(3, 2);
  auto tab3 = rel_trace_table(*G, *H);
  for (Elem a = 0; a < G->size(); ++a) CHECK(tab3[a] == rel_trace(*G, a, *H));
  CHECK_THROWS_AS(rel_trace(*F4, 1, *make_field(2, 3)), InvalidArgument);
}

TEST_CASE("serialization round-trips") {
  auto F = make_field(3, 4);
  for (Elem a = 0; a < F->size(); a += 7) {
    FieldElement x(F, a);
    auto s = serialize(x);
    CHECK(deserialize(s) == x);
  }
  CHECK(serialize(FieldElement(make_field(2, 4), 0b1011)) == "2^4:1,1,0,1");
  CHECK_THROWS_AS(deserialize("garbage"), InvalidArgument);
}

TEST_CASE("FieldElement rejects mixed fields") {
  FieldElement a(make_field(2, 2), 1), b(make_field(2, 3), 1);
  CHECK_THROWS_AS(a + b, InvalidArgument);
}

TEST_CASE("cyclotomic normal form and evaluation oracle") {
  std::mt19937 rng(7);
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (int trial = 0; trial < 40; ++trial) {
      CyclotomicInteger a(p), b(p);
      for (unsigned i = 0; i + 1 < p; ++i) {
        a.add_root_multiple(i, static_cast<int>(rng() % 11) - 5);
        b.add_root_multiple(i, static_cast<int>(rng() % 11) - 5);
      }
      auto c = a * b, s = a + b;
      CHECK(std::abs(c.evaluate() - a.evaluate() * b.evaluate()) < 1e-9);
      CHECK(std::abs(s.evaluate() - (a.evaluate() + b.evaluate())) < 1e-9);
      bool looks_real_int = std::abs(c.evaluate().imag()) < 1e-9 &&
                            std::abs(c.evaluate().real() - std::round(c.evaluate().real())) < 1e-9;
      if (c.is_rational()) CHECK(looks_real_int);
    }
    // 1 + zeta + ... + zeta^{p-1} = 0
    CyclotomicInteger sum(p);
    for (unsigned e = 0; e < p; ++e) sum += CyclotomicInteger::root(p, e);
    CHECK(sum.is_zero());
  }
}

TEST_CASE("additive characters") {
  auto F4 = make_field(2, 2);
  FieldElement zero(F4, 0);
  for (Elem a = 0; a < 4; ++a) CHECK(psi_value(zero, FieldElement(F4, a)) == CyclotomicInteger(2, 1));
  for (Elem l = 1; l < 4; ++l) {
    CyclotomicInteger s(2);
    for (Elem a = 0; a < 4; ++a) {
      auto v = psi_value(FieldElement(F4, l), FieldElement(F4, a));
      int sign = F4->abs_trace(F4->mul(l, a)) ? -1 : 1;
      CHECK(v == CyclotomicInteger(2, sign));
      s += v;
    }
    CHECK(s.is_zero());
  }
  // orthogonality in odd characteristic
  auto F9 = make_field(3, 2);
  for (Elem l = 0; l < 9; ++l) {
    CyclotomicInteger s(3);
    for (Elem a = 0; a < 9; ++a) s += psi_value(FieldElement(F9, l), FieldElement(F9, a));
    CHECK(s == CyclotomicInteger(3, l == 0 ? 9 : 0));
  }
  CHECK_THROWS_AS(psi_value(FieldElement(F4, 1), FieldElement(F9, 1)), InvalidArgument);
}

TEST_CASE("primitive characters") {
  auto F4 = make_field(2, 2);
  CHECK_FALSE(is_primitive_char(FieldElement(F4, 0), 2, 2));
  int count = 0;
  for (Elem l = 0; l < 4; ++l) count += is_primitive_char(FieldElement(F4, l), 2, 2);
  CHECK(count == 2);
  auto F2 = make_field(2, 1);
  CHECK(is_primitive_char(FieldElement(F2, 1), 2, 1));
  // q = 4, h = 2: F_16 minus F_4
  auto F16 = make_field(2, 4);
  count = 0;
  for (Elem l = 0; l < 16; ++l) count += is_primitive_char(FieldElement(F16, l), 4, 2);
  CHECK(count == 12);
  CHECK(prime_power(9).p == 3);
  CHECK(prime_power(9).f == 2);
  CHECK_THROWS_AS(prime_power(6), InvalidArgument);
}
