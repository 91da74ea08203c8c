#include <random>

#include "doctest.h"
#include "ltlab/skewpoly.hpp"

using namespace ltlab;

namespace {

FieldSkew random_skew(const UnitFieldRing& R, unsigned h, std::mt19937& rng, bool unit) {
  FieldSkew s(R, h);
  for (unsigned i = 0; i <= h; ++i) s[i] = rng() % R.F->size();
  if (unit && s[0] == 0) s[0] = 1;
  return s;
}

}  // namespace

TEST_CASE("skew multiplication") {
  auto F4 = make_field(2, 2);
  UnitFieldRing R{{F4.get(), 1}};
  Elem a = F4->generator();
  FieldSkew tau(R, 2, {0, 1}), alpha(R, 2, {a});
  CHECK(tau * alpha == FieldSkew(R, 2, {0, F4->frob(a, 1)}));
  CHECK(!(tau * alpha == alpha * tau));
  CHECK(alpha * FieldSkew::one(R, 2) == alpha);
  CHECK(tau * tau * tau == FieldSkew(R, 2));  // truncated

  auto F8 = make_field(2, 3);
  UnitFieldRing R8{{F8.get(), 1}};
  std::mt19937 rng(1);
  for (int i = 0; i < 100; ++i) {
    auto x = random_skew(R8, 3, rng, false), y = random_skew(R8, 3, rng, false), z = random_skew(R8, 3, rng, false);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
  }
  auto F16 = make_field(2, 4);
  UnitFieldRing R16{{F16.get(), 1}};
  CHECK_THROWS_AS(FieldSkew(R16, 2) * FieldSkew(R8, 2), InvalidArgument);
}

TEST_CASE("skew inverse") {
  auto F3 = make_field(3, 1);
  UnitFieldRing R{{F3.get(), 1}};
  FieldSkew u(R, 4, {1, 1});
  CHECK(u.inverse() == FieldSkew(R, 4, {1, 2, 1, 2, 1}));
  auto F16 = make_field(2, 4);
  UnitFieldRing R16{{F16.get(), 1}};
  for (Elem a = 1; a < 16; ++a) CHECK(FieldSkew(R16, 4, {a}).inverse() == FieldSkew(R16, 4, {F16->inv(a)}));
  std::mt19937 rng(2);
  for (int i = 0; i < 100; ++i) {
    auto x = random_skew(R16, 4, rng, true);
    CHECK(x * x.inverse() == FieldSkew::one(R16, 4));
    CHECK(x.inverse() * x == FieldSkew::one(R16, 4));
  }
  CHECK_THROWS_AS(FieldSkew(R16, 4, {0, 1}).inverse(), InvalidArgument);
}

TEST_CASE("d_operator") {
  auto F16 = make_field(2, 4);
  UnitFieldRing R{{F16.get(), 1}};
  for (Elem v = 0; v < 16; ++v) {
    auto d = d_operator(FieldSkew(R, 1, {1, v}), 1);
    CHECK(d == FieldSkew(R, 1, {1, F16->sub(F16->frob(v, 1), v)}));
  }
  for (Elem a = 0; a < 16; ++a)
    for (Elem b = 0; b < 16; ++b) {
      auto d = d_operator(FieldSkew(R, 2, {1, a, b}), 2);
      CHECK(d[2] == d_full(R, {a, b}));
      CHECK(d[0] == 1);
    }
  // coefficients in F_{q^h} are fixed by the q^h-power map
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      Elem ea = F16->embed_from(*make_field(2, 2), a), eb = F16->embed_from(*make_field(2, 2), b);
      CHECK(d_operator(FieldSkew(R, 2, {1, ea, eb}), 2) == FieldSkew::one(R, 2));
    }
  // odd characteristic: the top coefficient is (-1)^{h-1} d_full
  auto F81 = make_field(3, 4);
  UnitFieldRing R3{{F81.get(), 1}};
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    Elem a = rng() % 81, b = rng() % 81;
    CHECK(d_operator(FieldSkew(R3, 2, {1, a, b}), 2)[2] == F81->neg(d_full(R3, {a, b})));
  }
  auto F729 = make_field(3, 6);
  UnitFieldRing R33{{F729.get(), 1}};
  for (int i = 0; i < 50; ++i) {
    std::vector<Elem> V{static_cast<Elem>(rng() % 729), static_cast<Elem>(rng() % 729), static_cast<Elem>(rng() % 729)};
    CHECK(d_operator(point_to_skew(R33, V), 3)[3] == d_full(R33, V));
  }
}

TEST_CASE("unit action") {
  auto F4 = make_field(2, 2), F16 = make_field(2, 4);
  UnitFieldRing R{{F16.get(), 1}}, K{{F4.get(), 1}};
  FieldSkew g(R, 2, {1, 7, 9});
  CHECK(r_action(FieldSkew::one(R, 2), g) == g);
  for (Elem a = 1; a < 4; ++a) {
    Elem alpha = F16->embed_from(*F4, a);
    auto img = r_action(FieldSkew(R, 2, {alpha}), g);
    for (unsigned i = 1; i <= 2; ++i)
      CHECK(img[i] == F16->mul(F16->mul(alpha, F16->inv(F16->frob(alpha, i))), g[i]));
  }
  auto emb = embed_skew(FieldSkew(K, 2, {1, 2, 3}), R);
  CHECK(emb[1] == F16->embed_from(*F4, 2));
}

TEST_CASE("symmetry suites") {
  for (auto [q, h, n] : std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>{{2, 2, 1}, {2, 2, 2}, {3, 2, 1}, {2, 3, 1}, {3, 2, 2}}) {
    auto rep = symmetry_suite(q, h, n);
    CAPTURE(q);
    CAPTURE(h);
    CAPTURE(n);
    CHECK(rep.translation_preserves);
    CHECK(rep.action_preserves);
    CHECK(rep.center_is_translation);
    CHECK(rep.scalar_formula);
    CHECK(rep.action_law);
    CHECK(rep.d_operator_matches);
    CHECK(rep.points == count_points({q, h, n}));
  }
  auto r = symmetry_suite(2, 2, 2);
  CHECK(r.units == 3 * 16);
  CHECK(r.action_checks == r.units * r.points);
}
