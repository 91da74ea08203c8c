#include "ltlab/lfunc.hpp"

#include <sstream>

namespace ltlab {

namespace {

std::string record_key(const HyperParams& p, const FieldElement& lambda, Convention conv) {
  std::ostringstream os;
  os << "charsum-q" << p.q << "-h" << p.h << "-n" << p.n << "-l" << serialize(lambda) << "-" << to_string(conv);
  return os.str();
}

std::string encode(const CyclotomicInteger& v) {
  std::ostringstream os;
  os << v.p();
  for (const auto& c : v.coords()) os << ' ' << c;
  return os.str();
}

CyclotomicInteger decode(const std::string& s) {
  std::istringstream is(s);
  unsigned p;
  if (!(is >> p)) throw std::runtime_error("corrupt cache entry");
  CyclotomicInteger v(p);
  for (unsigned i = 0; i + 1 < p; ++i) {
    std::string tok;
    if (!(is >> tok)) throw std::runtime_error("corrupt cache entry");
    v.add_root_multiple(i, BigInt(tok));
  }
  return v;
}

}  // namespace

std::vector<CyclotomicInteger> character_transform(const FieldDesc& Fqh, const std::vector<std::uint64_t>& hist) {
  const unsigned p = Fqh.p();
  std::vector<CyclotomicInteger> out;
  out.reserve(Fqh.size());
  std::vector<std::uint64_t> bins(p);
  for (Elem l = 0; l < Fqh.size(); ++l) {
    std::fill(bins.begin(), bins.end(), 0);
    for (Elem b = 0; b < Fqh.size(); ++b)
      if (hist[b]) bins[Fqh.abs_trace(Fqh.mul(l, b))] += hist[b];
    CyclotomicInteger s(p);
    for (unsigned e = 0; e < p; ++e)
      if (bins[e]) s.add_root_multiple(e, BigInt(bins[e]));
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<CharSumRecord> char_sums_all(const HyperParams& params, const SumOptions& opt) {
  Tower t = make_tower(params);
  const FieldDesc& K = *t.Fqh;
  std::vector<CharSumRecord> recs;
  recs.reserve(K.size());

  if (opt.cache) {
    bool complete = true;
    for (Elem l = 0; l < K.size() && complete; ++l) {
      FieldElement lam(t.Fqh, l);
      auto hit = opt.cache->lookup(record_key(params, lam, opt.convention));
      if (!hit) {
        complete = false;
        break;
      }
      recs.push_back({params.q, params.h, params.n, lam, decode(*hit), is_primitive_char(lam, params.q, params.h),
                      opt.convention});
    }
    if (complete) return recs;
    recs.clear();
  }

  auto hist = subtrace_histogram(t, opt.threads, opt.guard);
  if (opt.convention == Convention::Full && params.h % 2 == 1) {
    // X is d_as(V) = (-1)^h (V_h^Q - V_h) here, so the sheaf function is -d_as.
    std::vector<std::uint64_t> flipped(hist.size());
    for (Elem b = 0; b < K.size(); ++b) flipped[b] = hist[K.neg(b)];
    hist.swap(flipped);
  }
  auto sums = character_transform(K, hist);
  for (Elem l = 0; l < K.size(); ++l) {
    FieldElement lam(t.Fqh, l);
    recs.push_back({params.q, params.h, params.n, lam, sums[l], is_primitive_char(lam, params.q, params.h),
                    opt.convention});
    if (opt.cache) opt.cache->store(record_key(params, lam, opt.convention), encode(sums[l]));
  }
  return recs;
}

CharSumRecord char_sum(const HyperParams& params, Elem lambda, const SumOptions& opt) {
  auto all = char_sums_all(params, opt);
  if (lambda >= all.size()) throw InvalidArgument("lambda must lie in F_{q^h}");
  return all[lambda];
}

BigInt predicted_S(std::uint64_t q, unsigned h, unsigned n) {
  BigInt c = ipow_big(BigInt(q), h * (h - 1) / 2);
  if (h % 2 == 1) c = -c;
  BigInt s = ipow_big(c, n + 1);
  return n % 2 == 1 ? s : BigInt(-s);
}

std::vector<CyclotomicRational> l_series(const std::vector<CyclotomicRational>& S) {
  const unsigned p = S.empty() ? 2 : S[0].num().p();
  std::vector<CyclotomicRational> l{CyclotomicRational(CyclotomicInteger(p, 1))};
  for (std::size_t m = 1; m <= S.size(); ++m) {
    CyclotomicRational acc(CyclotomicInteger(p, 0));
    for (std::size_t n = 1; n <= m; ++n) acc = acc + S[n - 1] * l[m - n];
    l.push_back(acc.divided(BigInt(m)));
  }
  return l;
}

std::vector<CyclotomicRational> l_series(const std::vector<CyclotomicInteger>& S) {
  std::vector<CyclotomicRational> r;
  for (const auto& s : S) r.emplace_back(s);
  return l_series(r);
}

ConjectureReport conjecture_report(std::uint64_t q, unsigned h, unsigned N, const SumOptions& opt) {
  if (N == 0) throw InvalidArgument("N must be positive");
  Tower t = make_tower({q, h, 1});
  const FieldDesc& K = *t.Fqh;
  ConjectureReport rep;
  rep.q = q;
  rep.h = h;
  rep.N = N;
  rep.convention = opt.convention;
  rep.D = ipow_big(BigInt(q), h * (h - 1) / 2);
  rep.implied_eigenvalue = Rational(h % 2 ? rep.D : BigInt(-rep.D));
  rep.implied_virtual_dimension = h % 2 ? 1 : -1;

  std::vector<std::vector<CyclotomicInteger>> sums(K.size());
  for (unsigned n = 1; n <= N; ++n) {
    auto recs = char_sums_all({q, h, n}, opt);
    for (Elem l = 0; l < K.size(); ++l) sums[l].push_back(recs[l].value);
  }

  rep.all_match = true;
  rep.orbit_consistent = true;
  rep.dimension_consistent = N >= 2;
  rep.eigenvalue_is_D = N >= 2;
  rep.eigenvalue_abs_is_D = N >= 2;
  for (Elem l = 0; l < K.size(); ++l) {
    LambdaReport lr;
    lr.lambda = FieldElement(t.Fqh, l);
    lr.primitive = is_primitive_char(lr.lambda, q, h);
    lr.S = sums[l];
    lr.match = lr.primitive;
    if (lr.primitive) {
      for (unsigned n = 1; n <= N; ++n) {
        lr.predicted.push_back(predicted_S(q, h, n));
        const auto& s = lr.S[n - 1];
        if (!s.is_rational() || s.rational_part() != lr.predicted.back()) lr.match = false;
      }
      if (!lr.match) rep.all_match = false;
    }
    if (sums[K.frob(l, t.f)] != sums[l]) rep.orbit_consistent = false;
    lr.L = l_series(lr.S);
    if (lr.primitive && N >= 2 && lr.S[0].is_rational() && lr.S[1].is_rational() && !lr.S[0].is_zero() &&
        !lr.S[1].is_zero()) {
      const BigInt &s1 = lr.S[0].rational_part(), &s2 = lr.S[1].rational_part();
      lr.eigenvalue = make_rational(s2, s1);
      lr.virtual_dimension = make_rational(s1 * s1, s2 * rep.D);
    }
    if (lr.primitive && N >= 2) {
      if (!lr.eigenvalue) {
        rep.dimension_consistent = rep.eigenvalue_is_D = rep.eigenvalue_abs_is_D = false;
      } else {
        if (*lr.virtual_dimension != Rational(rep.implied_virtual_dimension)) rep.dimension_consistent = false;
        if (*lr.eigenvalue != Rational(rep.D)) rep.eigenvalue_is_D = false;
        if (abs(*lr.eigenvalue) != Rational(rep.D)) rep.eigenvalue_abs_is_D = false;
      }
    }
    rep.per_lambda.push_back(std::move(lr));
  }
  return rep;
}

ZetaReport zeta_consistency(const HyperParams& params, const SumOptions& opt, std::uint64_t brute_guard) {
  ZetaReport rep;
  rep.q = params.q;
  rep.h = params.h;
  rep.n = params.n;
  auto recs = char_sums_all(params, opt);
  rep.character_total = CyclotomicInteger(recs.front().value.p());
  for (const auto& r : recs) rep.character_total += r.value;
  rep.total_is_rational = rep.character_total.is_rational();
  rep.count_points = count_points(params, opt.threads, opt.guard);
  try {
    rep.brute_count = brute_count(params, opt.convention, brute_guard);
  } catch (const GuardExceeded&) {
  }
  // Orthogonality: sum over lambda of S(lambda) = q^h #{V : subtrace zero}.
  rep.holds = rep.total_is_rational && rep.character_total.rational_part() == BigInt(rep.count_points) &&
              (!rep.brute_count || *rep.brute_count == rep.count_points);
  return rep;
}

}  // namespace ltlab
