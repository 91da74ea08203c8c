// Command-line entry point for the verification suites.
//
// Exit status: 0 success, 1 a verified statement failed, 2 invalid arguments,
// 3 guard exceeded, 4 internal error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "ltlab/report.hpp"

using namespace ltlab;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kGuard = 3, kInternal = 4 };

struct Config {
  std::uint64_t q = 2;
  unsigned h = 2, n = 1, N = 2;
  std::string lambda = "all";
  std::string convention = "artin_schreier";
  std::string identity = "all";
  std::string tie = "least";
  unsigned prec = 0, residue_degree = 0, samples = 5, threads = 0;
  std::uint64_t seed = 1;
  std::string cache_dir;
  bool no_cache = false;
  bool brute = false;
  std::string format = "json";
};

struct Output {
  std::string text;
  int status;
};

std::string render(const Json& j) { return j.dump(2) + "\n"; }

std::string seconds_since(std::chrono::steady_clock::time_point t0) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return to_string(make_rational(ms, 1000));
}

void require_json(const Config& c, const std::string& cmd) {
  if (c.format != "json") throw InvalidArgument(cmd + " supports --format json only");
}

Output run_count(const Config& c) {
  auto t0 = std::chrono::steady_clock::now();
  HyperParams P{c.q, c.h, c.n};
  std::uint64_t v = c.brute ? brute_count(P, parse_convention(c.convention)) : count_points(P, c.threads);
  Json j{{"q", c.q},
         {"h", c.h},
         {"n", c.n},
         {"count", v},
         {"method", c.brute ? "brute" : "trace"},
         {"seconds", seconds_since(t0)}};
  if (c.format == "csv") {
    std::ostringstream os;
    os << "q,h,n,count,method,seconds\n"
       << c.q << ',' << c.h << ',' << c.n << ',' << v << ',' << j["method"].get<std::string>() << ','
       << j["seconds"].get<std::string>() << '\n';
    return {os.str(), kOk};
  }
  return {render(j), kOk};
}

std::vector<CharSumRecord> select_lambdas(const std::vector<CharSumRecord>& all, const std::string& sel) {
  if (sel == "all") return all;
  std::vector<CharSumRecord> out;
  if (sel == "primitive") {
    for (const auto& r : all)
      if (r.primitive) out.push_back(r);
    return out;
  }
  std::stringstream ss(sel);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t idx;
    try {
      idx = std::stoul(tok);
    } catch (const std::exception&) {
      throw InvalidArgument("lambda selector must be all, primitive or comma-separated ranks");
    }
    if (idx >= all.size()) throw InvalidArgument("lambda rank out of range");
    out.push_back(all[idx]);
  }
  return out;
}

Output run_charsum(const Config& c, const ResultCache* cache) {
  SumOptions opt{parse_convention(c.convention), c.threads, kCountGuard, cache};
  auto recs = select_lambdas(char_sums_all({c.q, c.h, c.n}, opt), c.lambda);
  if (c.format == "csv") return {charsum_csv(recs), kOk};
  Json arr = Json::array();
  for (const auto& r : recs) arr.push_back(to_json(r));
  return {render(Json{{"q", c.q}, {"h", c.h}, {"n", c.n}, {"records", arr}}), kOk};
}

Output run_conjecture(const Config& c, const ResultCache* cache) {
  SumOptions opt{parse_convention(c.convention), c.threads, kCountGuard, cache};
  auto rep = conjecture_report(c.q, c.h, c.N, opt);
  int st = rep.all_match ? kOk : kFailed;
  if (c.format == "csv") return {conjecture_csv(rep), st};
  return {render(to_json(rep)), st};
}

Output run_zeta(const Config& c, const ResultCache* cache) {
  require_json(c, "zeta");
  SumOptions opt{parse_convention(c.convention), c.threads, kCountGuard, cache};
  auto rep = zeta_consistency({c.q, c.h, c.n}, opt);
  return {render(to_json(rep)), rep.holds ? kOk : kFailed};
}

Output run_identities(const Config& c) {
  require_json(c, "identities");
  std::vector<std::string> names;
  if (c.identity == "all")
    names = identity_names();
  else
    names.push_back(c.identity);
  Json arr = Json::array();
  bool all = true;
  for (const auto& name : names) {
    auto r = verify_identity(name, c.q, c.h);
    all = all && r.holds;
    arr.push_back(to_json(r));
  }
  return {render(Json{{"q", c.q}, {"h", c.h}, {"identities", arr}, {"all_hold", all}}), all ? kOk : kFailed};
}

Output run_formal(const Config& c) {
  require_json(c, "formal-verify");
  auto rep = verify_section3(c.q, c.h, c.samples, c.prec, c.residue_degree, c.seed, c.threads);
  return {render(to_json(rep)), rep.holds() ? kOk : kFailed};
}

Output run_congruence(const Config& c) {
  require_json(c, "congruence-verify");
  auto rep = congruence_verify(c.q, c.h, c.samples, c.prec, c.residue_degree, c.seed, parse_tie_break(c.tie),
                               c.threads);
  return {render(to_json(rep)), rep.holds() ? kOk : kFailed};
}

Output run_symmetry(const Config& c) {
  require_json(c, "symmetry");
  auto rep = symmetry_suite(c.q, c.h, c.n);
  return {render(to_json(rep)), rep.holds() ? kOk : kFailed};
}

// Every field that can change the bytes of a report, except timings.
std::string cache_key(const std::string& cmd, const Config& c) {
  std::ostringstream os;
  os << "report-v1|" << cmd << "|q=" << c.q << "|h=" << c.h << "|fmt=" << c.format;
  if (cmd == "count") os << "|n=" << c.n << "|brute=" << c.brute << "|conv=" << c.convention;
  if (cmd == "charsum") os << "|n=" << c.n << "|lambda=" << c.lambda << "|conv=" << c.convention;
  if (cmd == "conjecture") os << "|N=" << c.N << "|conv=" << c.convention;
  if (cmd == "zeta") os << "|n=" << c.n << "|conv=" << c.convention;
  if (cmd == "identities") os << "|id=" << c.identity;
  if (cmd == "formal-verify" || cmd == "congruence-verify")
    os << "|samples=" << c.samples << "|prec=" << c.prec << "|M=" << c.residue_degree << "|seed=" << c.seed;
  if (cmd == "congruence-verify") os << "|tie=" << c.tie;
  if (cmd == "symmetry") os << "|n=" << c.n;
  return os.str();
}

Output dispatch(const std::string& cmd, const Config& c, const ResultCache* cache) {
  const std::string key = cache_key(cmd, c);
  if (cache)
    if (auto hit = cache->lookup(key)) {
      auto nl = hit->find('\n');
      if (nl != std::string::npos) return {hit->substr(nl + 1), std::atoi(hit->substr(0, nl).c_str())};
    }
  Output out;
  if (cmd == "count") out = run_count(c);
  else if (cmd == "charsum") out = run_charsum(c, cache);
  else if (cmd == "conjecture") out = run_conjecture(c, cache);
  else if (cmd == "zeta") out = run_zeta(c, cache);
  else if (cmd == "identities") out = run_identities(c);
  else if (cmd == "formal-verify") out = run_formal(c);
  else if (cmd == "congruence-verify") out = run_congruence(c);
  else if (cmd == "symmetry") out = run_symmetry(c);
  else throw InvalidArgument("unknown subcommand " + cmd);
  if (cache) cache->store(key, std::to_string(out.status) + "\n" + out.text);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lubin-Tate tower verification laboratory"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_flag("--help", "Print this help message and exit");
  Config c;
  app.add_option("--cache-dir", c.cache_dir, "Result cache directory (LTLAB_CACHE overrides)");
  app.add_flag("--no-cache", c.no_cache, "Skip the result cache");
  app.add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", c.threads, "Worker threads (0 = all cores)");

  auto qh = [&](CLI::App* s) {
    s->set_help_flag("--help", "Print this help message and exit");
    s->add_option("--q", c.q, "Field size q")->required();
    s->add_option("--h", c.h, "Height h")->required();
  };
  auto conv = [&](CLI::App* s) {
    s->add_option("--convention", c.convention, "artin_schreier or full")
        ->check(CLI::IsMember({"artin_schreier", "as", "full"}));
  };
  auto* count = app.add_subcommand("count", "Count points of X over F_{q^{hn}}");
  qh(count);
  count->add_option("--n", c.n, "Extension index n");
  count->add_flag("--brute", c.brute, "Use the brute-force oracle");
  conv(count);
  auto* charsum = app.add_subcommand("charsum", "Character sums S_n(psi_lambda)");
  qh(charsum);
  charsum->add_option("--n", c.n, "Extension index n");
  charsum->add_option("--lambda", c.lambda, "all, primitive or comma-separated ranks in F_{q^h}");
  conv(charsum);
  auto* conj = app.add_subcommand("conjecture", "Compare S_1..S_N with the predicted closed form");
  qh(conj);
  conj->add_option("--N", c.N, "Largest n");
  conv(conj);
  auto* zeta = app.add_subcommand("zeta", "Sum of S_n over all characters against the point count");
  qh(zeta);
  zeta->add_option("--n", c.n, "Extension index n");
  conv(zeta);
  auto* ids = app.add_subcommand("identities", "Symbolic determinant identities");
  qh(ids);
  ids->add_option("--name", c.identity, "Identity name or all");
  auto* formal = app.add_subcommand("formal-verify", "Level structures and mu_n at sampled moduli");
  qh(formal);
  auto* cong = app.add_subcommand("congruence-verify", "Congruences at sampled points of the polydisc");
  qh(cong);
  for (auto* s : {formal, cong}) {
    s->add_option("--samples", c.samples, "Number of samples (the first is the canonical point)");
    s->add_option("--prec", c.prec, "Working precision in pi-units (0 = q + 2)");
    s->add_option("--residue-degree", c.residue_degree, "Residue field degree over F_q (0 = 2h)");
    s->add_option("--seed", c.seed, "Sampling seed");
  }
  cong->add_option("--tie", c.tie, "Root choice at ties: least or greatest")
      ->check(CLI::IsMember({"least", "greatest"}));
  auto* sym = app.add_subcommand("symmetry", "Translation and R^x actions on X");
  qh(sym);
  sym->add_option("--n", c.n, "Extension index n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  if (c.convention == "as") c.convention = "artin_schreier";

  try {
    std::optional<ResultCache> cache;
    if (const char* env = std::getenv("LTLAB_CACHE"); env && *env) c.cache_dir = env;
    if (!c.no_cache && !c.cache_dir.empty()) cache.emplace(c.cache_dir);
    auto out = dispatch(cmd, c, cache ? &*cache : nullptr);
    std::cout << out.text;
    return out.status;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kUsage;
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return kGuard;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
