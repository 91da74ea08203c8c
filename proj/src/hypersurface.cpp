#include "ltlab/hypersurface.hpp"

#include <algorithm>
#include <thread>

namespace ltlab {

std::string to_string(Convention c) { return c == Convention::Full ? "full" : "artin_schreier"; }

Convention parse_convention(const std::string& s) {
  if (s == "full") return Convention::Full;
  if (s == "artin_schreier" || s == "as") return Convention::ArtinSchreier;
  throw InvalidArgument("unknown convention: " + s);
}

std::uint64_t Tower::Q() const {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < h; ++i) r *= q;
  return r;
}

Tower make_tower(const HyperParams& params) {
  if (params.h == 0) throw InvalidArgument("height must be positive");
  if (params.n == 0) throw InvalidArgument("extension index must be positive");
  auto [p, f] = prime_power(params.q);
  Tower t{params.q, p, f, params.h, params.n, nullptr, nullptr, nullptr};
  t.Fq = make_field(p, f);
  t.Fqh = make_field(p, f * params.h);
  t.Fqhn = make_field(p, f * params.h * params.n);
  return t;
}

HyperEval::HyperEval(const FieldDesc& F, unsigned f, unsigned h) : F_(F), f_(f), h_(h) {
  if (h == 0) throw InvalidArgument("height must be positive");
  if (static_cast<std::uint64_t>(F.size()) * (h + 1) <= (1u << 24)) {
    frob_table_.assign(h + 1, std::vector<Elem>(F.size()));
    for (unsigned i = 0; i <= h; ++i)
      for (Elem a = 0; a < F.size(); ++a) frob_table_[i][a] = F.frob(a, f * i);
  }
}

Elem HyperEval::frob_q(Elem a, unsigned i) const {
  if (!frob_table_.empty()) return frob_table_[i][a];
  return F_.frob(a, f_ * i);
}

Elem HyperEval::eliminate(Elem* row, const Elem* V, Elem* leading) const {
  for (unsigned i = 1; i < h_; ++i) {
    Elem c = row[i - 1];
    if (leading) leading[i - 1] = c;
    if (c == 0) continue;
    for (unsigned j = i; j < h_; ++j) row[j] = F_.sub(row[j], F_.mul(c, frob_q(V[j - i], i)));
  }
  if (leading) leading[h_ - 1] = row[h_ - 1];
  Elem r = row[h_ - 1];
  return (h_ % 2 == 1) ? r : F_.neg(r);
}

Elem HyperEval::d_full(const Elem* V) const {
  Elem row[32];
  if (h_ > 32) throw InvalidArgument("height too large");
  for (unsigned j = 0; j < h_; ++j) row[j] = F_.sub(frob_q(V[j], h_), V[j]);
  return eliminate(row, V, nullptr);
}

Elem HyperEval::d_as(const Elem* V) const {
  Elem row[32];
  if (h_ > 32) throw InvalidArgument("height too large");
  for (unsigned j = 0; j + 1 < h_; ++j) row[j] = F_.sub(frob_q(V[j], h_), V[j]);
  row[h_ - 1] = 0;
  return eliminate(row, V, nullptr);
}

void HyperEval::minors_b(const Elem* V, Elem* B) const {
  Elem row[32];
  if (h_ > 32) throw InvalidArgument("height too large");
  for (unsigned j = 0; j + 1 < h_; ++j) row[j] = V[j];
  row[h_ - 1] = 0;
  // The leading i x i minor is (-1)^{i-1} times the pivot seen before step i,
  // so B_i = -pivot.
  eliminate(row, V, B);
  for (unsigned i = 0; i < h_; ++i) B[i] = F_.neg(B[i]);
}

namespace {

std::uint64_t checked_power(std::uint64_t base, unsigned e, std::uint64_t guard) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > guard / base) throw GuardExceeded("enumeration exceeds guard");
    r *= base;
  }
  if (r > guard) throw GuardExceeded("enumeration exceeds guard");
  return r;
}

unsigned worker_count(unsigned threads, std::uint64_t total) {
  unsigned t = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  if (total < 4096) t = 1;
  return t;
}

}  // namespace

std::vector<std::uint64_t> subtrace_histogram(const Tower& tower, unsigned threads, std::uint64_t guard) {
  const FieldDesc& F = *tower.Fqhn;
  const unsigned h = tower.h;
  const std::uint64_t S = F.size();
  const std::uint64_t total = checked_power(S, h - 1, guard);
  const auto trace = rel_trace_table(F, *tower.Fqh);
  HyperEval ev(F, tower.f, h);
  const unsigned T = worker_count(threads, total);
  std::vector<std::vector<std::uint64_t>> partial(T, std::vector<std::uint64_t>(tower.Fqh->size(), 0));

  auto work = [&](unsigned k) {
    const std::uint64_t lo = total * k / T, hi = total * (k + 1) / T;
    std::vector<Elem> V(h > 1 ? h - 1 : 1, 0);
    std::uint64_t rest = lo;
    for (unsigned i = 0; i + 1 < h; ++i) {
      V[i] = static_cast<Elem>(rest % S);
      rest /= S;
    }
    auto& hist = partial[k];
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      ++hist[trace[ev.d_as(V.data())]];
      for (unsigned i = 0; i + 1 < h; ++i) {
        if (++V[i] < S) break;
        V[i] = 0;
      }
    }
  };
  if (T == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < T; ++k) pool.emplace_back(work, k);
    for (auto& th : pool) th.join();
  }
  std::vector<std::uint64_t> hist(tower.Fqh->size(), 0);
  for (const auto& part : partial)
    for (std::size_t b = 0; b < hist.size(); ++b) hist[b] += part[b];
  return hist;
}

std::uint64_t count_points(const HyperParams& params, unsigned threads, std::uint64_t guard) {
  Tower t = make_tower(params);
  auto hist = subtrace_histogram(t, threads, guard);
  return t.Q() * hist[0];
}

std::uint64_t brute_count(const HyperParams& params, Convention conv, std::uint64_t guard) {
  Tower t = make_tower(params);
  const FieldDesc& F = *t.Fqhn;
  const unsigned h = t.h;
  const std::uint64_t S = F.size();
  const std::uint64_t total = checked_power(S, h, guard);
  std::vector<Elem> V(h, 0);
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (on_hypersurface(t, V, conv)) ++count;
    for (unsigned i = 0; i < h; ++i) {
      if (++V[i] < S) break;
      V[i] = 0;
    }
  }
  return count;
}

bool on_hypersurface(const Tower& tower, const std::vector<Elem>& V, Convention conv) {
  if (V.size() != tower.h) throw InvalidArgument("point must have h coordinates");
  const FieldDesc& F = *tower.Fqhn;
  if (conv == Convention::Full) {
    FieldRing R{&F, tower.f};
    // Elimination is cheap enough here; avoid building tables per call.
    Elem row[32];
    const unsigned h = tower.h;
    for (unsigned j = 0; j < h; ++j) row[j] = F.sub(R.frob(V[j], h), V[j]);
    for (unsigned i = 1; i < h; ++i) {
      Elem c = row[i - 1];
      if (c == 0) continue;
      for (unsigned j = i; j < h; ++j) row[j] = F.sub(row[j], F.mul(c, R.frob(V[j - i], i)));
    }
    return row[h - 1] == 0;
  }
  FieldRing R{&F, tower.f};
  std::vector<Elem> head(V.begin(), V.end() - 1);
  Elem d = ltlab::d_as(R, head);
  Elem y = F.sub(R.frob(V.back(), tower.h), V.back());
  if (tower.h % 2 == 0) y = F.neg(y);
  return d == y;
}

std::vector<Elem> h_translate(const Tower& tower, const std::vector<Elem>& V, Elem gamma) {
  if (!on_hypersurface(tower, V)) throw InvalidArgument("point is not on X");
  if (gamma >= tower.Fqh->size()) throw InvalidArgument("gamma must lie in F_{q^h}");
  auto out = V;
  out.back() = tower.Fqhn->add(out.back(), tower.Fqhn->embed_from(*tower.Fqh, gamma));
  return out;
}

HermitianReport hermitian_check(std::uint64_t q, unsigned n) {
  HermitianReport rep{q, n, 0, 0, false};
  rep.points_on_x = brute_count({q, 2, n});
  Tower t = make_tower({q, 2, n});
  const FieldDesc& F = *t.Fqhn;
  FieldRing R{&F, t.f};
  for (Elem v = 0; v < F.size(); ++v) {
    Elem rhs = F.mul(R.frob(v, 1), v);
    for (Elem y = 0; y < F.size(); ++y)
      if (F.add(R.frob(y, 1), y) == rhs) ++rep.hermitian_points;
  }
  rep.holds = rep.points_on_x == q * rep.hermitian_points;
  return rep;
}

}  // namespace ltlab
