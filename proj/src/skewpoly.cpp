#include "ltlab/skewpoly.hpp"

#include <random>

namespace ltlab {

FieldSkew point_to_skew(const UnitFieldRing& ring, const std::vector<Elem>& V) {
  std::vector<Elem> c{1};
  c.insert(c.end(), V.begin(), V.end());
  return FieldSkew(ring, static_cast<unsigned>(V.size()), c);
}

std::vector<Elem> skew_to_point(const FieldSkew& g) {
  return std::vector<Elem>(g.coeffs().begin() + 1, g.coeffs().end());
}

FieldSkew embed_skew(const FieldSkew& r, const UnitFieldRing& target) {
  FieldSkew out(target, r.h());
  for (unsigned i = 0; i <= r.h(); ++i) out[i] = target.F->embed_from(*r.ring().F, r[i]);
  return out;
}

namespace {

// Calls fn(V) for every V in F^len in rank order.
template <class Fn>
void for_each_vector(Elem size, unsigned len, Fn&& fn) {
  std::vector<Elem> V(len, 0);
  while (true) {
    fn(V);
    unsigned i = 0;
    for (; i < len; ++i) {
      if (++V[i] < size) break;
      V[i] = 0;
    }
    if (i == len) return;
  }
}

}  // namespace

SymmetryReport symmetry_suite(std::uint64_t q, unsigned h, unsigned n, std::uint64_t guard) {
  Tower t = make_tower({q, h, n});
  const FieldDesc& F = *t.Fqhn;
  const FieldDesc& K = *t.Fqh;
  const UnitFieldRing ring{{&F, t.f}};
  const UnitFieldRing kring{{&K, t.f}};
  HyperEval ev(F, t.f, h);

  SymmetryReport rep{q, h, n, 0, 0, 0, true, 0, true, true, true, true, true};

  std::uint64_t space = 1;
  for (unsigned i = 0; i < h; ++i) {
    if (space > guard / F.size()) throw GuardExceeded("symmetry suite: point enumeration exceeds guard");
    space *= F.size();
  }
  std::vector<std::vector<Elem>> points;
  for_each_vector(F.size(), h, [&](const std::vector<Elem>& V) {
    if (ev.d_full(V.data()) == 0) points.push_back(V);
  });
  rep.points = points.size();

  // Translations by F_{q^h} on V_h.
  for (const auto& P : points)
    for (Elem g = 0; g < K.size(); ++g) {
      auto img = P;
      img.back() = F.add(img.back(), F.embed_from(K, g));
      ++rep.translation_checks;
      if (ev.d_full(img.data()) != 0) rep.translation_preserves = false;
    }

  // Every unit r over F_{q^h}: r_0 g r^{-1} maps X into X. The map is a bijection
  // on {1 + tau(...)}, so this also shows it maps the complement into itself.
  rep.units = (K.size() - 1);
  for (unsigned i = 0; i < h; ++i) rep.units *= K.size();
  if (rep.units > guard / std::max<std::uint64_t>(1, points.size()))
    throw GuardExceeded("symmetry suite: action checks exceed guard");
  std::vector<std::vector<Elem>> fr(h + 1, std::vector<Elem>(h + 1));
  std::vector<Elem> img(h + 1);
  for_each_vector(K.size(), h + 1, [&](const std::vector<Elem>& rc) {
    if (rc[0] == 0) return;
    FieldSkew r(kring, h, rc);
    FieldSkew rinv = embed_skew(r.inverse(), ring);
    const Elem r0 = F.embed_from(K, rc[0]);
    for (unsigned i = 0; i <= h; ++i)
      for (unsigned j = 0; i + j <= h; ++j) fr[i][j] = ring.frob(rinv[j], i);
    for (const auto& P : points) {
      for (unsigned k = 0; k <= h; ++k) {
        Elem acc = fr[0][k];  // g_0 = 1
        for (unsigned i = 1; i <= k; ++i) acc = F.add(acc, F.mul(P[i - 1], fr[i][k - i]));
        img[k] = F.mul(r0, acc);
      }
      ++rep.action_checks;
      if (img[0] != 1 || ev.d_full(img.data() + 1) != 0) rep.action_preserves = false;
    }
  });

  // Center 1 + c tau^h against the translation action.
  for (Elem c = 0; c < K.size(); ++c) {
    std::vector<Elem> rc(h + 1, 0);
    rc[0] = 1;
    rc[h] = c;
    FieldSkew r = embed_skew(FieldSkew(kring, h, rc), ring);
    for (const auto& P : points) {
      auto moved = skew_to_point(r_action(r, point_to_skew(ring, P)));
      if (moved != h_translate(t, P, K.neg(c))) rep.center_is_translation = false;
    }
  }

  // Scalars.
  for (Elem a = 1; a < K.size(); ++a) {
    const Elem alpha = F.embed_from(K, a);
    FieldSkew r(ring, h, {alpha});
    for (std::size_t s = 0; s < points.size(); s += 1 + points.size() / 64) {
      const auto& P = points[s];
      auto moved = skew_to_point(r_action(r, point_to_skew(ring, P)));
      for (unsigned i = 1; i <= h; ++i)
        if (moved[i - 1] != F.mul(F.mul(alpha, ring.frob(F.inv(alpha), i)), P[i - 1])) rep.scalar_formula = false;
    }
  }

  // Group action law on random triples, and the tau^h coefficient of d_operator.
  std::mt19937_64 rng(q * 1000 + h * 10 + n);
  auto random_unit = [&] {
    std::vector<Elem> rc(h + 1);
    rc[0] = 1 + static_cast<Elem>(rng() % (K.size() - 1));
    for (unsigned i = 1; i <= h; ++i) rc[i] = static_cast<Elem>(rng() % K.size());
    return embed_skew(FieldSkew(kring, h, rc), ring);
  };
  for (int trial = 0; trial < 200; ++trial) {
    FieldSkew r1 = random_unit(), r2 = random_unit();
    std::vector<Elem> V(h);
    for (auto& v : V) v = static_cast<Elem>(rng() % F.size());
    FieldSkew g = point_to_skew(ring, V);
    if (!(r_action(r1, r_action(r2, g)) == r_action(r1 * r2, g))) rep.action_law = false;
    Elem top = d_operator(g, h)[h];
    Elem expect = ev.d_full(V.data());
    if (h % 2 == 0) expect = F.neg(expect);
    if (top != expect || d_operator(g, h)[0] != 1) rep.d_operator_matches = false;
  }
  return rep;
}

}  // namespace ltlab
