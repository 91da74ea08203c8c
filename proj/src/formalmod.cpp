#include "ltlab/formalmod.hpp"

#include <algorithm>
#include <thread>

#include "ltlab/characters.hpp"
#include "ltlab/hypersurface.hpp"

namespace ltlab {

namespace {

long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

struct Active {
  unsigned i;
  long val;
  long qi;  // q^i
};

std::vector<Active> active_terms(const SeriesAdditive& f, std::uint64_t q) {
  std::vector<Active> out;
  long qi = 1;
  for (unsigned i = 0; i < f.a.size(); ++i, qi *= static_cast<long>(q))
    if (!f.a[i].is_zero()) out.push_back({i, f.a[i].valuation(), qi});
  if (out.empty()) throw InvalidArgument("additive polynomial is zero to precision");
  return out;
}

// Least j with every term val_i + j q^i >= target.
long first_position(const std::vector<Active>& act, long target) {
  long j = LONG_MIN;
  for (const auto& a : act) j = std::max(j, ceil_div(target - a.val, a.qi));
  return j;
}

TruncatedSeries apply_monomial(const SeriesAdditive& f, const FieldDesc& F, unsigned fq, Elem c, long j, long q) {
  TruncatedSeries acc(f.a.front().context());
  long qi = 1;
  for (unsigned i = 0; i < f.a.size(); ++i, qi *= q) {
    if (f.a[i].is_exact_zero()) continue;
    acc = acc + f.a[i].shifted(static_cast<int>(j * qi)).scaled(F.frob(c, fq * i));
  }
  return acc;
}

}  // namespace

TruncatedSeries additive_root_lift(const SeriesRing& ring, const SeriesAdditive& f, const TruncatedSeries& target,
                                   const TruncatedSeries& seed, const LiftParams& params) {
  const FieldDesc& F = *ring.ctx->F;
  const unsigned fq = ring.ctx->f;
  const long q = static_cast<long>(ipow(F.p(), fq));
  const auto act = active_terms(f, static_cast<std::uint64_t>(q));
  const unsigned m = F.m();

  TruncatedSeries X = seed;
  TruncatedSeries R = target - f.evaluate(ring, seed);
  const int budget = 8 * ring.ctx->cap + 64;
  for (int step = 0; !R.is_zero(); ++step) {
    if (step > budget) throw ConvergenceError("root lifting exceeded its digit budget");
    const long jR = R.valuation();
    const long j = first_position(act, jR);
    std::vector<const Active*> dom;
    for (const auto& a : act)
      if (a.val + j * a.qi == jR) dom.push_back(&a);
    if (dom.empty()) throw NoGain("no digit position reaches the residual; the root is ramified over the series field");
    const Elem r = R.leading();
    Elem c = 0;
    if (dom.size() == 1) {
      const Active& a = *dom.front();
      Elem y = F.div(r, f.a[a.i].leading());
      c = F.frob(y, (m - (fq * a.i) % m) % m);
    } else {
      bool found = false;
      for (Elem cand = 0; cand < F.size(); ++cand) {
        Elem cc = params.tie == TieBreak::LeastRank ? cand : F.size() - 1 - cand;
        Elem s = 0;
        for (const Active* a : dom) s = F.add(s, F.mul(f.a[a->i].leading(), F.frob(cc, fq * a->i)));
        if (s == r) {
          c = cc;
          found = true;
          break;
        }
      }
      if (!found) throw ResidueUnsolvable("residue equation has no solution in F_" + std::to_string(F.p()) + "^" +
                                          std::to_string(m));
    }
    X = X + TruncatedSeries::monomial(ring.ctx, c, static_cast<int>(j));
    R = R - apply_monomial(f, F, fq, c, j, q);
  }
  const long jp = first_position(act, R.precision());
  X = X.with_precision(static_cast<int>(std::min<long>(jp, ring.ctx->cap)));
  const TruncatedSeries diff = X - seed;
  const Rational need = make_rational(seed.valuation(), params.e) + params.min_gain;
  if (!seed.is_zero() && !diff.is_zero() && make_rational(diff.valuation(), params.e) < need)
    throw NoGain("root is not near the seed");
  return X;
}

SeriesModel build_series_model(std::uint64_t q, unsigned h, unsigned prec, unsigned residue_degree,
                               std::uint64_t guard) {
  if (h == 0) throw InvalidArgument("height must be positive");
  const auto pp = prime_power(q);
  const std::uint64_t Q = ipow(q, h);
  if (Q > guard) throw GuardExceeded("q^h exceeds the series-model guard");
  if (prec == 0) prec = static_cast<unsigned>(q) + 2;
  if (residue_degree == 0) residue_degree = 2 * h;
  if (residue_degree % h) throw InvalidArgument("residue degree must be a multiple of h");

  SeriesModel m;
  m.q = q;
  m.h = h;
  m.p = pp.p;
  m.f = pp.f;
  m.M = residue_degree;
  m.Q = Q;
  m.e = static_cast<int>(Q * (Q - 1));
  if (m.e == 0) throw InvalidArgument("degenerate model");
  m.N = m.e * static_cast<int>(prec);
  m.Fq = make_field(pp.p, pp.f);
  m.Fqh = make_field(pp.p, pp.f * h);
  m.Fres = make_field(pp.p, pp.f * residue_degree);
  m.ctx = make_series_context(m.Fres, pp.f, m.N, -m.N);
  const auto& ctx = m.ctx;
  const Elem minus1 = m.Fres->neg(1);

  m.lambda = TruncatedSeries::monomial(ctx, 1, 1);
  const TruncatedSeries tQ = TruncatedSeries::monomial(ctx, 1, static_cast<int>(Q));
  // pi = -(pi t + t^Q)^{Q-1}, starting from -t^{Q(Q-1)}.
  TruncatedSeries pi = TruncatedSeries::monomial(ctx, minus1, m.e);
  for (int it = 0;; ++it) {
    if (it > 4 * m.N + 16) throw ConvergenceError("pi fixed point did not converge");
    TruncatedSeries next = -(pi * m.lambda + tQ).pow(Q - 1);
    if (next.equals(pi) && next.precision() >= m.N) {
      m.pi_iterations = it + 1;
      pi = next;
      break;
    }
    pi = next;
  }
  m.pi = pi;
  m.z = pi * m.lambda + tQ;
  SeriesRing R{ctx};
  const Elem g = m.Fqh->generator();
  for (unsigned i = 0; i < h; ++i) {
    m.omega.push_back(m.embed(m.Fqh->pow(g, i)));
    m.x2.push_back(m.lambda.scaled(m.omega.back()));
    m.x1.push_back(m.z.scaled(m.omega.back()));
  }
  m.Delta = moore(R, m.x1);
  return m;
}

SeriesAdditive univ_module(const SeriesModel& m, const std::vector<TruncatedSeries>& u) {
  return make_univ(m.ring(), m.pi, u, m.h);
}

SeriesAdditive lt_module(const SeriesModel& m) { return make_lt(m.ring(), m.pi, m.h); }

TruncatedSeries pi_power(const SeriesModel& m, const SeriesAdditive& module, const TruncatedSeries& x, unsigned a) {
  TruncatedSeries r = x;
  const SeriesRing R = m.ring();
  for (unsigned i = 0; i < a; ++i) r = module.evaluate(R, r);
  return r;
}

TruncatedSeries mu_n(const SeriesModel& m, const std::vector<TruncatedSeries>& points, unsigned n,
                     const SeriesAdditive& module) {
  const unsigned h = m.h;
  if (points.size() != h) throw InvalidArgument("mu_n needs h points");
  if (n == 0) throw InvalidArgument("level must be positive");
  const SeriesRing R = m.ring();
  std::vector<std::vector<TruncatedSeries>> pw(h);
  for (unsigned i = 0; i < h; ++i) {
    pw[i].push_back(points[i]);
    for (unsigned a = 1; a < n; ++a) pw[i].push_back(module.evaluate(R, pw[i].back()));
  }
  const unsigned total = (h - 1) * (n - 1);
  TruncatedSeries acc(m.ctx);
  std::vector<unsigned> a(h, 0);
  while (true) {
    unsigned s = 0;
    for (unsigned v : a) s += v;
    if (s == total) {
      std::vector<TruncatedSeries> args;
      for (unsigned i = 0; i < h; ++i) args.push_back(pw[i][a[i]]);
      acc = acc + moore(R, args);
    }
    unsigned i = 0;
    while (i < h && ++a[i] == n) a[i++] = 0;
    if (i == h) break;
  }
  return acc;
}

namespace {

// Meaningful only when the residual is known beyond the compared magnitude.
constexpr int kDecisionMargin = 1;  // pi-units

void require_precision(const SeriesModel& m, const TruncatedSeries& residual, int ref_val) {
  if (residual.precision() < ref_val + kDecisionMargin * m.e)
    throw PrecisionError("precision too low to decide the Drinfeld condition");
}

bool level1_check(const SeriesModel& m, const std::vector<TruncatedSeries>& pts, const SeriesAdditive& f) {
  const std::uint64_t count = ipow(m.q, static_cast<unsigned>(pts.size()));
  if (count != ipow(m.q, static_cast<unsigned>(f.a.size() - 1))) return false;  // root count must match deg [pi]
  std::vector<TruncatedSeries> poly{TruncatedSeries::constant(m.ctx, 1)};
  std::vector<Elem> a(pts.size(), 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t r = idx;
    TruncatedSeries root(m.ctx);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      a[i] = static_cast<Elem>(r % m.q);
      r /= m.q;
      if (a[i]) root = root + pts[i].scaled(m.embed_q(a[i]));
    }
    std::vector<TruncatedSeries> next(poly.size() + 1, TruncatedSeries(m.ctx));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] = next[k + 1] + poly[k];
      next[k] = next[k] - root * poly[k];
    }
    poly = std::move(next);
  }
  const TruncatedSeries& lc = f.a.back();
  std::size_t deg_i = 0;
  std::uint64_t qi = 1;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    TruncatedSeries target(m.ctx);
    if (deg_i < f.a.size() && k == qi) {
      target = f.a[deg_i];
      ++deg_i;
      qi *= m.q;
    }
    TruncatedSeries diff = poly[k] * lc - target;
    if (!diff.is_zero()) return false;
    require_precision(m, diff, target.is_exact_zero() ? 0 : target.valuation());
  }
  return true;
}

}  // namespace

bool drinfeld_check(const SeriesModel& m, const DrinfeldBasis& basis) {
  if (basis.module.a.empty()) throw InvalidArgument("empty module polynomial");
  if (basis.level == 1) return level1_check(m, basis.points, basis.module);
  if (basis.level == 2) {
    const SeriesRing R = m.ring();
    std::vector<TruncatedSeries> images;
    for (const auto& y : basis.points) {
      auto x = basis.module.evaluate(R, y);
      if (x.is_zero()) return false;  // a basis point of order pi^2 cannot be pi-torsion
      auto zero = basis.module.evaluate(R, x);
      if (!zero.is_zero()) return false;
      require_precision(m, zero, x.valuation());
      images.push_back(x);
    }
    return level1_check(m, images, basis.module);
  }
  throw InvalidArgument("drinfeld_check supports levels 1 and 2");
}

TruncatedSeries random_integral(const SeriesModel& m, std::mt19937_64& rng) {
  std::vector<Elem> c(static_cast<std::size_t>(m.e));
  for (auto& x : c) x = static_cast<Elem>(rng() % m.Fres->size());
  return TruncatedSeries::from_coeffs(m.ctx, 0, std::move(c), m.N);
}

void lift_bases(const SeriesModel& m, const SeriesAdditive& module, std::vector<TruncatedSeries>& X,
                std::vector<TruncatedSeries>* Y, TieBreak tie) {
  const SeriesRing R = m.ring();
  const auto Qm1 = static_cast<long>(m.Q - 1);
  X.clear();
  for (unsigned r = 0; r < m.h; ++r)
    X.push_back(additive_root_lift(R, module, TruncatedSeries(m.ctx), m.x1[r],
                                   {make_rational(static_cast<long>(m.q) - 1, Qm1), m.e, tie}));
  if (!Y) return;
  Y->clear();
  for (unsigned r = 0; r < m.h; ++r)
    Y->push_back(additive_root_lift(R, module, X[r], m.x2[r], {make_rational(1, m.e), m.e, tie}));
}

bool Section3Sample::holds() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.holds; });
}

bool Section3Report::holds() const {
  return std::all_of(samples.begin(), samples.end(), [](const Section3Sample& s) { return s.holds(); });
}

namespace {

CheckResult residual_check(const SeriesModel& m, std::string name, const TruncatedSeries& residual, int ref_val) {
  CheckResult c{std::move(name), false, pi_valuation(residual, m.e)};
  c.holds = residual.is_zero() && residual.precision() >= ref_val + kDecisionMargin * m.e;
  return c;
}

CheckResult bool_check(std::string name, bool ok) { return {std::move(name), ok, std::nullopt}; }

Elem det_small(const FieldDesc& F, const Matrix<Elem>& c) {
  FieldRing R{&F, 1};
  return determinant(R, c);
}

void run_sample(const SeriesModel& m, Section3Sample& s, std::uint64_t seed) {
  const SeriesRing R = m.ring();
  const auto module = univ_module(m, s.u);
  const auto lt = lt_module(m);
  lift_bases(m, module, s.X, &s.Y);
  const unsigned h = m.h;
  std::mt19937_64 rng(seed);

  // (a) [pi]_LT(mu_2(Y)) = mu_1([pi] Y)
  std::vector<TruncatedSeries> piY;
  for (const auto& y : s.Y) piY.push_back(module.evaluate(R, y));
  const TruncatedSeries Delta2 = mu_n(m, s.Y, 2, module);
  const TruncatedSeries Delta1 = mu_n(m, piY, 1, module);
  s.checks.push_back(residual_check(m, "mu_n_compatibility", lt.evaluate(R, Delta2) - Delta1, Delta1.valuation()));

  // (b) mu_2(Y) is a level pi^2 structure for LT
  bool lt_ok = false;
  try {
    lt_ok = drinfeld_check(m, {2, {Delta2}, lt});
  } catch (const PrecisionError&) {
    lt_ok = false;
  }
  s.checks.push_back(bool_check("lt_level2_structure", lt_ok));

  // (c) trace lemma for matrices over O_F / pi^2
  const FieldDesc& Fq = *m.Fq;
  auto apply_M = [&](const std::vector<std::vector<std::pair<Elem, Elem>>>& M, unsigned r) {
    TruncatedSeries acc(m.ctx);
    for (unsigned j = 0; j < h; ++j) {
      auto [a0, a1] = M[r][j];
      if (a0) acc = acc + s.Y[j].scaled(m.embed_q(a0));
      if (a1) acc = acc + piY[j].scaled(m.embed_q(a1));
    }
    return acc;
  };
  bool trm_ok = true;
  std::optional<PiValuation> trm_worst;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<std::pair<Elem, Elem>>> M(h, std::vector<std::pair<Elem, Elem>>(h, {0, 0}));
    if (trial == 0) {
      for (unsigned i = 0; i < h; ++i) M[i][i] = {1, 0};
    } else {
      for (auto& row : M)
        for (auto& ent : row) ent = {static_cast<Elem>(rng() % m.q), static_cast<Elem>(rng() % m.q)};
    }
    TruncatedSeries lhs(m.ctx);
    for (unsigned r = 0; r < h; ++r) {
      auto args = s.Y;
      args[r] = apply_M(M, r);
      lhs = lhs + mu_n(m, args, 2, module);
    }
    Elem t0 = 0, t1 = 0;
    for (unsigned i = 0; i < h; ++i) {
      t0 = Fq.add(t0, M[i][i].first);
      t1 = Fq.add(t1, M[i][i].second);
    }
    TruncatedSeries rhs = Delta2.scaled(m.embed_q(t0)) + lt.evaluate(R, Delta2).scaled(m.embed_q(t1));
    auto c = residual_check(m, "trace_lemma", lhs - rhs, Delta2.valuation());
    trm_ok = trm_ok && c.holds;
    if (!trm_worst || c.discrepancy->value < trm_worst->value) trm_worst = c.discrepancy;
  }
  s.checks.push_back({"trace_lemma", trm_ok, trm_worst});

  // (d) Delta^{q-1} = (-1)^h pi
  const TruncatedSeries D = moore(R, s.X);
  TruncatedSeries rhs_d = h % 2 ? -m.pi : m.pi;
  s.checks.push_back(residual_check(m, "delta_power", D.pow(m.q - 1) - rhs_d, m.e));

  // (e) k-multilinear and alternating
  bool ml_ok = true;
  std::optional<PiValuation> ml_worst;
  for (int trial = 0; trial < 4; ++trial) {
    Matrix<Elem> C(h, std::vector<Elem>(h, 0));
    if (trial == 0) {
      for (unsigned i = 0; i < h; ++i) C[i][(i + 1) % h] = 1;  // cyclic permutation
    } else {
      for (auto& row : C)
        for (auto& x : row) x = static_cast<Elem>(rng() % m.q);
    }
    std::vector<TruncatedSeries> Z;
    for (unsigned i = 0; i < h; ++i) {
      TruncatedSeries acc(m.ctx);
      for (unsigned j = 0; j < h; ++j)
        if (C[i][j]) acc = acc + s.Y[j].scaled(m.embed_q(C[i][j]));
      Z.push_back(acc);
    }
    Elem d = det_small(Fq, C);
    auto c = residual_check(m, "multilinear_alternating", mu_n(m, Z, 2, module) - Delta2.scaled(m.embed_q(d)),
                            Delta2.valuation());
    ml_ok = ml_ok && c.holds;
    if (!ml_worst || c.discrepancy->value < ml_worst->value) ml_worst = c.discrepancy;
  }
  s.checks.push_back({"multilinear_alternating", ml_ok, ml_worst});

  bool d1 = false, d2 = false;
  try {
    d1 = drinfeld_check(m, {1, s.X, module});
    d2 = drinfeld_check(m, {2, s.Y, module});
  } catch (const PrecisionError&) {
  }
  s.checks.push_back(bool_check("drinfeld_level1", d1));
  s.checks.push_back(bool_check("drinfeld_level2", d2));
}

}  // namespace

Section3Report verify_section3(std::uint64_t q, unsigned h, unsigned samples, unsigned prec, unsigned residue_degree,
                               std::uint64_t seed, unsigned threads) {
  const SeriesModel m = build_series_model(q, h, prec, residue_degree);
  Section3Report rep{q, h, static_cast<unsigned>(m.N / m.e), m.M, seed, {}};
  std::mt19937_64 rng(seed);
  rep.samples.resize(samples);
  std::vector<std::uint64_t> sample_seeds(samples);
  const TruncatedSeries pi2 = m.pi * m.pi;
  for (unsigned s = 0; s < samples; ++s) {
    for (unsigned i = 0; i + 1 < h; ++i)
      rep.samples[s].u.push_back(s == 0 ? TruncatedSeries(m.ctx) : pi2 * random_integral(m, rng));
    sample_seeds[s] = rng();
  }
  unsigned T = std::max(1u, std::min(threads ? threads : std::thread::hardware_concurrency(), samples));
  if (T <= 1) {
    for (unsigned s = 0; s < samples; ++s) run_sample(m, rep.samples[s], sample_seeds[s]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(T);
    for (unsigned t = 0; t < T; ++t)
      pool.emplace_back([&, t] {
        try {
          for (unsigned s = t; s < samples; s += T) run_sample(m, rep.samples[s], sample_seeds[s]);
        } catch (...) {
          errs[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  }
  return rep;
}

}  // namespace ltlab
