#include "starkit/runner.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>

using namespace starkit;

namespace {

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

struct Flags {
  std::string config, report;
  Json overrides = Json::object();
  std::vector<std::function<void()>> pending;  // run after parsing, for the options actually given
  void collect() {
    for (auto& f : pending) f();
  }
};

// options that land in the case config only when given
template <class T>
void option(CLI::App* app, Flags& fl, const std::string& flag, const std::string& key, const std::string& help) {
  auto* store = new T{};  // lives until exit
  auto* opt = app->add_option(flag, *store, help);
  fl.pending.push_back([&fl, key, store, opt] {
    if (opt->count() > 0) fl.overrides[key] = *store;
  });
}

void print_summary(const BatchResult& b) {
  for (auto& c : b.cases) {
    std::map<std::string, int> tally;
    for (auto& r : c.checks) ++tally[r.verdict];
    std::cout << c.id << " " << c.verb;
    if (c.degenerate) std::cout << " (degenerate-m)";
    if (c.checks.size() <= 8) {
      for (auto& r : c.checks) std::cout << "\n  " << r.statement << ": " << r.verdict;
    } else {
      for (auto& [k, v] : tally) std::cout << " " << k << "=" << v;
    }
    std::cout << "\n";
  }
  std::cout << "exit " << b.exit_code << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"starkit: exact and numerical checks around Darmon's refined class number formula"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags fl;
  option<int>(&app, fl, "--precision-bits", "precision_bits", "working precision of real arithmetic");
  option<std::uint64_t>(&app, fl, "--seed", "seed", "seed for randomized instances");
  option<int>(&app, fl, "--power-test-primes", "power_test_primes", "primes used by the m-th power test");
  app.add_option("--report", fl.report, "write the JSON report here");
  app.add_option("--config", fl.config, "JSON case or {\"cases\":[...]}");

  std::map<std::string, CLI::App*> subs;
  for (auto& v : kVerbs) subs[v] = app.add_subcommand(v);
  subs["verify-darmon"]->description("Theorem check for F = Q(sqrt D) at level n, plus Tate lemma and descent checks");
  subs["verify-stark-rank1"]->description("rank one Rubin-Stark over F(mu_n)^+");
  subs["check-propnorm"]->description("randomized algebra identities (propnorm, eqphi, reminj, thminj, eqaug, all)");
  subs["explore-phiconj"]->description("planted r = 2 instances of the phi conjecture");
  subs["verify-unramified"]->description("exact oracle on towers inside Q(mu_q)");
  subs["lemma-compute"]->description("e_chi R_{L,n} identity");
  subs["find-t-family"]->description("Tate family with sum a_T delta_T = 2");
  for (auto v : {"verify-darmon", "verify-stark-rank1", "lemma-compute", "find-t-family"}) {
    option<std::int64_t>(subs[v], fl, "--D", "D", "squarefree D > 1");
    option<std::int64_t>(subs[v], fl, "--n", "n", "squarefree level prime to D");
  }
  option<std::vector<std::int64_t>>(subs["verify-stark-rank1"], fl, "--T", "T", "the set T");
  for (auto v : {"verify-darmon", "find-t-family"}) {
    auto* store = new std::vector<std::int64_t>{};
    auto* opt = subs[v]->add_option("--T", *store, "primes, each a singleton of the family");
    fl.pending.push_back([&fl, store, opt] {
      if (opt->count() == 0) return;
      Json T = Json::array();
      for (auto t : *store) T.push_back(Json::array({t}));
      fl.overrides["T"] = T;
    });
  }
  for (auto v : {"verify-darmon", "verify-stark-rank1", "lemma-compute"})
    option<std::string>(subs[v], fl, "--tolerance", "tolerance", "relative tolerance, decimal string");
  option<std::int64_t>(subs["verify-darmon"], fl, "--mutate-h", "mutate_h", "control: replace h_n by h_n + k");
  option<std::string>(subs["check-propnorm"], fl, "--statement", "statement", "statement id or all");
  option<int>(subs["check-propnorm"], fl, "--trials", "trials", "instances per statement");
  option<int>(subs["explore-phiconj"], fl, "--trials", "trials", "planted instances");
  option<int>(subs["verify-unramified"], fl, "--rprime", "rprime", "0 or 1");
  option<std::int64_t>(subs["verify-unramified"], fl, "--q", "q", "prime q");
  option<std::int64_t>(subs["verify-unramified"], fl, "--k", "k", "order of the subgroup fixing L'");
  option<std::vector<std::int64_t>>(subs["verify-unramified"], fl, "--W", "W", "primes in V minus V'");
  option<std::int64_t>(subs["verify-unramified"], fl, "--t", "t", "prime in T");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  fl.collect();
  std::string verb;
  for (auto& [v, s] : subs)
    if (s->parsed()) verb = v;

  auto t0 = std::chrono::steady_clock::now();
  BatchResult result;
  try {
    std::vector<Json> cases;
    if (!fl.config.empty()) {
      std::ifstream in(fl.config);
      if (!in) throw ConfigError("cannot read " + fl.config);
      Json cfg;
      try {
        cfg = Json::parse(in);
      } catch (const std::exception& e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
      }
      cases = expand_config(cfg);
    } else {
      cases.push_back(Json::object());
    }
    for (auto& c : cases) {
      if (!c.is_object()) throw ConfigError("a case must be a JSON object");
      for (auto& [k, v] : fl.overrides.items()) c[k] = v;
    }
    result = run_batch(verb, cases);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  print_summary(result);
  if (!fl.report.empty()) {
    Json doc{{"body", report_body(verb, result)}, {"meta", {{"timestamp", utc_now()}, {"wall_seconds", secs}}}};
    std::ofstream out(fl.report);
    if (!out) {
      std::cerr << "cannot write " << fl.report << "\n";
      return 1;
    }
    out << doc.dump(2) << "\n";
  }
  return result.exit_code;
}
