#include "ltlab/congruence.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "ltlab/hypersurface.hpp"

namespace ltlab {

namespace {

constexpr unsigned kMaxRedraws = 1024;

Rational rat(long n, long d) { return make_rational(n, d); }

std::vector<Elem> q_powers(const FieldDesc& F, unsigned f, Elem a, unsigned h) {
  std::vector<Elem> out;
  for (unsigned i = 0; i < h; ++i) out.push_back(F.frob(a, f * i));
  return out;
}

Matrix2 mul2(const FieldDesc& Fq, const Matrix2& A, const Matrix2& B) {
  const std::size_t h = A.size();
  Matrix2 C(h, std::vector<Digit2>(h));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j)
      for (std::size_t k = 0; k < h; ++k) {
        const Digit2 &a = A[i][k], &b = B[k][j];
        C[i][j].a0 = Fq.add(C[i][j].a0, Fq.mul(a.a0, b.a0));
        C[i][j].a1 = Fq.add(C[i][j].a1, Fq.add(Fq.mul(a.a0, b.a1), Fq.mul(a.a1, b.a0)));
      }
  return C;
}

}  // namespace

Thresholds thresholds(std::uint64_t q, unsigned h) {
  long Q = 1;
  for (unsigned i = 0; i < h; ++i) Q *= static_cast<long>(q);
  const long qq = static_cast<long>(q);
  return {Rational(qq - 1) + rat(qq, Q - 1), Rational(qq - 1) + rat(qq - 1, Q - 1) + rat(1, qq - 1),
          Rational(qq - 2) + rat(qq - 1, Q - 1)};
}

ValuationCheck valuation_check(unsigned index, const TruncatedSeries& residual, const Rational& threshold, int e) {
  ValuationCheck c{index, pi_valuation(residual, e), threshold, false};
  c.pass = c.achieved.value >= threshold;
  return c;
}

Matrix2 find_embedding_matrix(const SeriesModel& m, Elem zeta_in_Fqh) {
  const unsigned h = m.h;
  const std::uint64_t q = m.q;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < 2 * h; ++i) total *= q;
  const Elem z = m.embed(zeta_in_Fqh);
  Matrix2 M(h, std::vector<Digit2>(h));
  for (unsigned i = 0; i < h; ++i) {
    const TruncatedSeries target = m.x2[i].scaled(z);
    bool found = false;
    for (std::uint64_t idx = 0; idx < total && !found; ++idx) {
      std::uint64_t rest = idx;
      std::vector<Digit2> row(h);
      TruncatedSeries acc(m.ctx);
      for (unsigned j = 0; j < h; ++j) {
        row[j].a0 = static_cast<Elem>(rest % q);
        rest /= q;
        row[j].a1 = static_cast<Elem>(rest % q);
        rest /= q;
        if (row[j].a0) acc = acc + m.x2[j].scaled(m.embed_q(row[j].a0));
        if (row[j].a1) acc = acc + m.x1[j].scaled(m.embed_q(row[j].a1));
      }
      if (acc.equals(target)) {
        M[i] = row;
        found = true;
      }
    }
    if (!found) throw InvalidArgument("no embedding matrix reproduces the action on the torsion points");
  }
  return M;
}

bool embedding_is_homomorphism(const TowerModel& t) {
  const FieldDesc& K = *t.base.Fqh;
  const FieldDesc& Fq = *t.base.Fq;
  const unsigned h = t.base.h;
  for (unsigned a = 0; a < h; ++a)
    for (unsigned b = 0; b < h; ++b) {
      const Matrix2 Mab = find_embedding_matrix(t.base, K.mul(t.zeta_powers[a], t.zeta_powers[b]));
      if (!(mul2(Fq, t.M[a], t.M[b]) == Mab) || !(mul2(Fq, t.M[b], t.M[a]) == Mab)) return false;
    }
  return true;
}

TowerModel build_tower(std::uint64_t q, unsigned h, unsigned prec, unsigned residue_degree, std::uint64_t guard) {
  TowerModel t{build_series_model(q, h, prec, residue_degree, guard), 0, 0, {}, {}};
  const SeriesModel& m = t.base;
  const FieldDesc& K = *m.Fqh;
  FieldRing RK{&K, m.f};
  bool found = false;
  for (Elem z = 1; z < K.size() && !found; ++z)
    if (moore(RK, q_powers(K, m.f, z, h)) != 0) {
      t.zeta = z;
      found = true;
    }
  if (!found) throw std::logic_error("no normal basis generator");
  t.zeta_powers = q_powers(K, m.f, t.zeta, h);
  found = false;
  for (Elem b = 0; b < K.size() && !found; ++b) {
    bool ok = true;
    for (unsigned i = 0; i < h && ok; ++i) ok = rel_trace(K, K.mul(b, t.zeta_powers[i]), *m.Fq) == (i == 0 ? 1u : 0u);
    if (ok) {
      t.beta = b;
      found = true;
    }
  }
  if (!found) throw std::logic_error("no trace-dual element");
  for (unsigned j = 0; j < h; ++j) t.M.push_back(find_embedding_matrix(m, t.zeta_powers[j]));
  return t;
}

SamplePoint make_sample(const TowerModel& t, std::vector<TruncatedSeries> V) {
  const SeriesModel& m = t.base;
  if (V.size() + 1 != m.h) throw InvalidArgument("a sample needs h-1 coordinates");
  SamplePoint s;
  s.V = std::move(V);
  for (const auto& v : s.V) {
    if (v.valuation() < 0) throw InvalidArgument("sample coordinates must be integral");
    s.u.push_back(m.pi * v);
  }
  s.module = univ_module(m, s.u);
  lift_bases(m, s.module, s.X, nullptr);
  s.Delta = moore(m.ring(), s.X);
  return s;
}

TruncatedSeries trivialization_det(const SeriesModel& m, const std::vector<TruncatedSeries>& V,
                                   const TruncatedSeries& xr) {
  const SeriesRing R = m.ring();
  const unsigned h = m.h;
  std::vector<TruncatedSeries> row(V.begin(), V.end()), Vext(V.begin(), V.end());
  row.push_back(xr);
  Vext.push_back(R.zero());
  auto mat = staircase_matrix(R, row, Vext);
  for (unsigned i = 1; i < h; ++i) mat[i][h - 1] = R.frob(xr, i) + m.pi * xr * R.frob(V[h - 1 - i], i);
  auto d = determinant(R, mat);
  return h % 2 ? d : -d;
}

std::vector<ValuationCheck> check_prop41(const TowerModel& t, const SamplePoint& s) {
  const SeriesModel& m = t.base;
  const Rational thr = thresholds(m.q, m.h).prop41;
  std::vector<ValuationCheck> out;
  for (unsigned r = 0; r < m.h; ++r)
    out.push_back(valuation_check(r + 1, s.X[r] - trivialization_det(m, s.V, m.x1[r]), thr, m.e));
  return out;
}

std::vector<TruncatedSeries> apply_embedding(const SeriesModel& m, const Matrix2& M, const SeriesAdditive& module,
                                             const std::vector<TruncatedSeries>& X) {
  const SeriesRing R = m.ring();
  std::vector<TruncatedSeries> out;
  for (unsigned r = 0; r < m.h; ++r) {
    TruncatedSeries acc(m.ctx);
    for (unsigned s = 0; s < m.h; ++s) {
      if (M[r][s].a0) acc = acc + X[s].scaled(m.embed_q(M[r][s].a0));
      if (M[r][s].a1) acc = acc + module.evaluate(R, X[s]).scaled(m.embed_q(M[r][s].a1));
    }
    out.push_back(acc);
  }
  return out;
}

WYRecord w_y_functions(const TowerModel& t, const SamplePoint& s, unsigned j, TieBreak tie) {
  const SeriesModel& m = t.base;
  const SeriesRing R = m.ring();
  const unsigned h = m.h;
  if (j >= h) throw InvalidArgument("zeta power index out of range");
  const Elem zeta = m.embed(t.zeta_powers[j]);
  WYRecord rec{j, {}, {}, {}, {}, false, {}};

  rec.w = TruncatedSeries(m.ctx);
  for (unsigned r = 0; r < h; ++r) {
    auto args = m.x1;
    args[r] = m.x2[r].scaled(zeta);
    rec.w = rec.w + moore(R, args);
  }
  const auto lt = lt_module(m);
  rec.eq_w = valuation_check(0, lt.evaluate(R, rec.w) - m.Delta.scaled(zeta), thresholds(m.q, h).eq_w, m.e);

  const auto zX = apply_embedding(m, t.M[j], s.module, s.X);
  Matrix<TruncatedSeries> mat = moore_matrix(R, s.X);
  for (unsigned r = 0; r < h; ++r) mat[r][0] = zX[r];
  rec.lt_image = determinant(R, mat);

  rec.W = additive_root_lift(R, lt, rec.lt_image, rec.w, {make_rational(1, static_cast<long>(m.Q)), m.e, tie});
  rec.root_ok = (lt.evaluate(R, rec.W) - rec.lt_image).is_zero();
  rec.Yz = (rec.W - rec.w) / m.Delta;
  if (h % 2 == 0) rec.Yz = -rec.Yz;
  return rec;
}

TruncatedSeries yzeta_rhs(const SeriesModel& m, const std::vector<TruncatedSeries>& V, Elem zeta_in_Fqh) {
  const SeriesRing R = m.ring();
  const FieldDesc& K = *m.Fqh;
  const unsigned h = m.h;
  std::vector<TruncatedSeries> row(V.begin(), V.end()), Vext(V.begin(), V.end());
  row.push_back(R.zero());
  Vext.push_back(R.zero());
  auto mat = staircase_matrix(R, row, Vext);
  for (unsigned i = 1; i < h; ++i) {
    const Elem c = m.embed(K.sub(K.frob(zeta_in_Fqh, m.f * i), zeta_in_Fqh));
    mat[i][h - 1] = R.frob(V[h - 1 - i], i).scaled(c);
  }
  return determinant(R, mat);
}

ValuationCheck check_prop_yzeta(const TowerModel& t, const SamplePoint& s, const WYRecord& rec) {
  const SeriesModel& m = t.base;
  const SeriesRing R = m.ring();
  const auto rhs = yzeta_rhs(m, s.V, t.zeta_powers[rec.j]);
  return valuation_check(rec.j, R.frob(rec.Yz, 1) - rec.Yz - rhs, thresholds(m.q, m.h).eps, m.e);
}

YpropResult check_prop_yprop(const TowerModel& t, const SamplePoint& s, const std::vector<WYRecord>& recs) {
  const SeriesModel& m = t.base;
  const SeriesRing R = m.ring();
  const FieldDesc& K = *m.Fqh;
  const unsigned h = m.h;
  if (recs.size() != h) throw InvalidArgument("Y needs one record per power of zeta");
  YpropResult out;
  out.Y = TruncatedSeries(m.ctx);
  for (unsigned i = 0; i < h; ++i) out.Y = out.Y + recs[i].Yz.scaled(m.embed(K.frob(t.beta, m.f * i)));
  out.check = valuation_check(0, R.frob(out.Y, h) - out.Y - d_as(R, s.V), thresholds(m.q, h).eps, m.e);

  Tower tower = make_tower({m.q, h, m.M / h});
  for (const auto& v : s.V) out.reduced_point.push_back(v.coeff(0));
  Elem yb = out.Y.valuation() >= 0 ? out.Y.coeff(0) : 0;
  out.reduced_point.push_back(h % 2 ? yb : m.Fres->neg(yb));
  out.reduced_on_x = out.Y.valuation() >= 0 && on_hypersurface(tower, out.reduced_point, Convention::ArtinSchreier);
  return out;
}

bool CongruenceSample::holds() const {
  auto all = [](const std::vector<ValuationCheck>& v) {
    return std::all_of(v.begin(), v.end(), [](const ValuationCheck& c) { return c.pass; });
  };
  return delta_locally_constant && all(prop41) && all(eq_w) && all(yzeta) &&
         std::all_of(w_roots_ok.begin(), w_roots_ok.end(), [](bool b) { return b; }) && yprop.check.pass &&
         yprop.reduced_on_x;
}

bool CongruenceReport::holds() const {
  return homomorphism &&
         std::all_of(samples.begin(), samples.end(), [](const CongruenceSample& s) { return s.holds(); });
}

namespace {

void run_sample(const TowerModel& t, CongruenceSample& out, std::uint64_t seed, TieBreak tie) {
  const SeriesModel& m = t.base;
  std::mt19937_64 rng(seed);
  for (out.redraws = 0;; ++out.redraws) {
    if (out.redraws > kMaxRedraws) throw GuardExceeded("too many unsolvable sample draws");
    std::vector<TruncatedSeries> V;
    for (unsigned i = 0; i + 1 < m.h; ++i)
      V.push_back(out.index == 0 ? TruncatedSeries(m.ctx) : random_integral(m, rng));
    const SamplePoint s = make_sample(t, V);
    std::vector<WYRecord> recs;
    try {
      for (unsigned j = 0; j < m.h; ++j) recs.push_back(w_y_functions(t, s, j, tie));
    } catch (const ResidueUnsolvable&) {
      if (out.index == 0) throw;
      continue;
    }
    out.V_residues.clear();
    for (const auto& v : s.V) out.V_residues.push_back(v.coeff(0));
    out.delta_locally_constant = s.Delta.equals(m.Delta);
    out.prop41 = check_prop41(t, s);
    out.eq_w.clear();
    out.yzeta.clear();
    out.w_roots_ok.clear();
    for (const auto& rec : recs) {
      out.eq_w.push_back(rec.eq_w);
      out.eq_w.back().index = rec.j;
      out.yzeta.push_back(check_prop_yzeta(t, s, rec));
      out.w_roots_ok.push_back(rec.root_ok);
    }
    out.yprop = check_prop_yprop(t, s, recs);
    return;
  }
}

}  // namespace

CongruenceReport congruence_verify(std::uint64_t q, unsigned h, unsigned samples, unsigned prec,
                                   unsigned residue_degree, std::uint64_t seed, TieBreak tie, unsigned threads) {
  const TowerModel t = build_tower(q, h, prec, residue_degree);
  CongruenceReport rep{q, h, static_cast<unsigned>(t.base.N / t.base.e), t.base.M, seed, tie, thresholds(q, h),
                       embedding_is_homomorphism(t), {}};
  rep.samples.resize(samples);
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> seeds(samples);
  for (unsigned s = 0; s < samples; ++s) {
    rep.samples[s].index = s;
    seeds[s] = rng();
  }
  const unsigned T = std::max(1u, std::min(threads ? threads : std::thread::hardware_concurrency(), samples));
  std::vector<std::exception_ptr> errs(T);
  auto work = [&](unsigned k) {
    try {
      for (unsigned s = k; s < samples; s += T) run_sample(t, rep.samples[s], seeds[s], tie);
    } catch (...) {
      errs[k] = std::current_exception();
    }
  };
  if (T == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < T; ++k) pool.emplace_back(work, k);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return rep;
}

}  // namespace ltlab
