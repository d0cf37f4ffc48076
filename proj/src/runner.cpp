#include "starkit/runner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace starkit {

const std::vector<std::string> kVerbs = {"verify-darmon",     "verify-stark-rank1", "check-propnorm", "explore-phiconj",
                                         "verify-unramified", "lemma-compute",      "find-t-family"};

namespace {

const std::vector<std::string> kCommon = {"id", "verb", "precision_bits", "seed", "power_test_primes"};

const std::map<std::string, std::vector<std::string>> kFields = {
    {"verify-darmon", {"D", "n", "T", "mutate_h", "tolerance"}},
    {"verify-stark-rank1", {"D", "n", "T", "tolerance"}},
    {"check-propnorm", {"statement", "trials"}},
    {"explore-phiconj", {"trials", "instance"}},
    {"verify-unramified", {"rprime", "q", "k", "W", "t"}},
    {"lemma-compute", {"D", "n", "tolerance"}},
    {"find-t-family", {"D", "n", "T"}},
};

template <class T>
T get_field(const Json& c, const char* key) {
  try {
    return c.at(key).get<T>();
  } catch (const std::exception&) {
    throw ConfigError(std::string("field '") + key + "' is missing or has the wrong type");
  }
}

Real tolerance_of(const Json& c) { return Real(get_field<std::string>(c, "tolerance")); }

std::string heuristic_error(std::int64_t m, int trials) {
  return m <= 1 ? std::string("0") : std::to_string(m) + "^-" + std::to_string(trials);
}

Json family_json(const TFamily& fam) {
  Json T = Json::array(), a = Json::array();
  for (auto& t : fam.T) T.push_back(t);
  for (auto& x : fam.a) a.push_back(to_json(x));
  return Json{{"T", T}, {"a", a}};
}

DarmonCase darmon_case(const Json& c) {
  auto D = get_field<std::int64_t>(c, "D");
  auto n = get_field<std::int64_t>(c, "n");
  try {
    return make_darmon_case(D, n);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("invalid (D, n): ") + e.what());
  }
}

TFamily family_for(const DarmonCase& dc, const Json& c) {
  if (c.contains("T") && !c["T"].empty()) {
    auto T = get_field<std::vector<std::vector<std::int64_t>>>(c, "T");
    return solve_t_family(plus_field(dc), prime_divisors(dc.N), T);
  }
  return find_t_family(dc);
}

void run_darmon(CaseResult& out, const Json& c) {
  const int trials = get_field<int>(c, "power_test_primes");
  const auto mutate = get_field<std::int64_t>(c, "mutate_h");
  const Real tol = tolerance_of(c);
  DarmonCase dc = darmon_case(c);
  Json inst{{"D", dc.D}, {"n", dc.n}, {"N", dc.N}, {"nu_plus", dc.nu_plus()}, {"nu_minus", dc.nu_minus()},
            {"m", dc.m}, {"h_n", to_json(dc.S.hn)}, {"gammas", dc.Gn.gammas}};

  auto mr = verify_mrthm(dc, trials, mutate, tol);
  out.degenerate = mr.degenerate;
  {
    CheckRecord r;
    r.statement = "thm_mrthm";
    r.instance = inst;
    r.instance["mutate_h"] = mutate;
    if (dc.degenerate()) {
      r.statement = "thm_mrthm_archimedean";
      r.lhs = to_json(mr.log_kappa);
      r.rhs = to_json(mr.log_rhs);
      r.mode = "numeric";
      r.tolerance = to_json(tol, 6);
      r.verdict = mr.pass ? "trivial" : "fail";
      r.witnesses = {{"degenerate_m", true}, {"error", to_json(mr.arch_error, 6)}};
    } else {
      auto R = regulator_Rn(dc, mutate);
      Json xs = Json::array(), rho = Json::array();
      for (auto& x : R.x) xs.push_back(to_json(x));
      for (auto& e : R.rho) rho.push_back(to_json(e));
      r.lhs = to_json(kolyvagin_class(dc, alpha_n(dc.F, dc.n)));
      r.rhs = Json{{"x", xs}, {"rho", rho}, {"modulo", dc.m}};
      r.mode = "numeric";
      r.tolerance = heuristic_error(dc.m, mr.test.primes_used);
      if (mr.degenerate)
        r.verdict = "trivial";
      else
        r.verdict = mr.pass ? "pass" : "fail";
      r.witnesses = {{"degenerate_m", mr.degenerate},
                     {"valuations_ok", mr.valuation_ok},
                     {"test_primes", mr.test.primes},
                     {"first_failure", mr.test.first_failure},
                     {"two_part", "not attempted"}};
    }
    out.checks.push_back(r);
  }
  {
    auto fam = family_for(dc, c);
    CheckRecord r;
    r.statement = "lemma_tlem_i";
    r.instance = inst;
    r.lhs = family_json(fam);
    r.mode = "exact";
    r.tolerance = nullptr;
    bool ok = fam.certified && verify_tlem_i(dc, fam);
    r.rhs = Json{{"certified_family", fam.certified}};
    r.verdict = ok ? "pass" : "fail";
    out.checks.push_back(r);
  }
  {
    auto t = verify_tlem_ii(dc, tol);
    CheckRecord r;
    r.statement = "lemma_tlem_ii";
    r.instance = inst;
    r.lhs = to_json(t.lhs);
    r.rhs = to_json(t.rhs);
    r.mode = "numeric";
    r.tolerance = to_json(tol, 6);
    r.verdict = t.pass ? "pass" : "fail";
    r.witnesses = {{"vanishing_order", t.order}, {"relative_error", to_json(t.error, 6)}};
    out.checks.push_back(r);
  }
  {
    auto T = default_T(dc);
    auto p = verify_propdes(dc, T, trials);
    CheckRecord r;
    r.statement = "prop_propdes";
    r.instance = inst;
    r.instance["T"] = T;
    Json levels = Json::array();
    for (auto& l : p.levels) levels.push_back(Json{{"level", l.level}, {"recursion", l.ok}});
    r.lhs = levels;
    r.rhs = Json{{"membership", p.membership}, {"theta_membership", p.theta_membership}, {"plus_projection", p.plus_projection}};
    r.mode = "exact";
    r.tolerance = nullptr;
    r.verdict = p.pass() ? "pass" : "fail";
    r.witnesses = {{"fixed_mod_m", p.fixed_mod_m}, {"fixed_mod_m_trials", p.fixed_trials}};
    out.checks.push_back(r);
  }
}

void run_stark(CaseResult& out, const Json& c) {
  auto F = make_quad_field(get_field<std::int64_t>(c, "D"));
  auto n = get_field<std::int64_t>(c, "n");
  auto T = get_field<std::vector<std::int64_t>>(c, "T");
  const Real tol = tolerance_of(c);
  if (n < 1 || gcd64(n, F.f) != 1) throw ConfigError("n must be positive and prime to the discriminant");
  for (auto t : T)
    if (!is_prime(t) || (n * F.f) % t == 0) throw ConfigError("T must consist of primes outside S");
  auto res = verify_stark_rank1(F, n, T, tol);
  CheckRecord r;
  r.statement = "conj_rubin_stark_rank1";
  r.instance = Json{{"D", F.D}, {"n", n}, {"T", T}, {"unit", to_json(stark_unit_rank1(F, n, T))}};
  r.lhs = to_json(res.lhs);
  r.rhs = to_json(res.rhs);
  r.mode = "numeric";
  r.tolerance = to_json(tol, 6);
  r.verdict = res.pass ? "pass" : "fail";
  r.witnesses = {{"max_relative_error", to_json(res.max_error, 6)}};
  out.checks.push_back(r);
}

void run_algebra(CaseResult& out, const Json& c, bool explorer) {
  const auto seed = get_field<std::uint64_t>(c, "seed");
  const int trials = get_field<int>(c, "trials");
  if (trials < 0) throw ConfigError("trials must be nonnegative");
  std::vector<std::string> statements;
  if (explorer) {
    statements = {"phiconj"};
  } else {
    auto s = get_field<std::string>(c, "statement");
    if (s == "all")
      statements = {"eqphi", "reminj", "propnorm", "thminj", "eqaug"};
    else if (std::find(kAlgebraStatements.begin(), kAlgebraStatements.end(), s) != kAlgebraStatements.end() && s != "phiconj")
      statements = {s};
    else
      throw ConfigError("unknown statement " + s);
  }
  if (explorer && c.contains("instance")) {
    AlgebraInstance inst;
    try {
      inst = algebra_instance_from_json(c["instance"]);
      if (inst.r < 2) throw std::invalid_argument("the explorer needs r >= 2");
      out.checks.push_back(record_from(run_algebra_instance("phiconj", inst)));
    } catch (const std::exception& e) {
      throw ConfigError(std::string("bad instance: ") + e.what());
    }
    return;
  }
  for (auto& s : statements)
    for (auto& rec : algebra_batch(s, trials, seed)) out.checks.push_back(record_from(rec));
}

void run_unramified(CaseResult& out, const Json& c) {
  UnramifiedCase u;
  u.rprime = get_field<int>(c, "rprime");
  u.q = get_field<std::int64_t>(c, "q");
  u.k = get_field<std::int64_t>(c, "k");
  u.W = get_field<std::vector<std::int64_t>>(c, "W");
  u.t = get_field<std::int64_t>(c, "t");
  if (u.rprime != 0 && u.rprime != 1) throw ConfigError("rprime must be 0 or 1");
  if (!is_prime(u.q) || u.k < 1 || (u.q - 1) % u.k != 0) throw ConfigError("need q prime and k | q - 1");
  auto res = verify_unramified_case(u);
  if (!res.valid) throw ConfigError("hypotheses fail: " + res.reason);
  CheckRecord r;
  r.statement = "prop_unram";
  r.instance = Json{{"rprime", u.rprime}, {"q", u.q}, {"k", u.k}, {"W", u.W}, {"t", u.t}, {"d", res.d}};
  r.lhs = res.lhs;
  r.rhs = res.rhs;
  r.mode = "exact";
  r.tolerance = nullptr;
  r.verdict = res.trivial && res.pass() ? "trivial" : (res.pass() ? "pass" : "fail");
  r.witnesses = {{"in_image", res.in_image}, {"bconj", res.bconj}, {"control_rejected", res.control_rejected}};
  out.checks.push_back(r);
}

void run_lemma(CaseResult& out, const Json& c) {
  DarmonCase dc = darmon_case(c);
  const Real tol = tolerance_of(c);
  auto v = lemma_compute(dc.F, dc.S);
  CheckRecord r;
  r.statement = "lemma_compute";
  r.instance = Json{{"D", dc.D}, {"n", dc.n}, {"nu_plus", dc.nu_plus()}, {"nu_minus", dc.nu_minus()}};
  r.lhs = to_json(v.lhs);
  r.rhs = to_json(v.rhs);
  r.mode = "numeric";
  r.tolerance = to_json(tol, 6);
  Real err = bmp::abs(v.lhs - v.rhs) / std::max(Real(1), bmp::abs(v.rhs));
  r.verdict = err <= tol ? "pass" : "fail";
  r.witnesses = {{"relative_error", to_json(err, 6)}, {"RV_chi", to_json(v.RV_chi)}};
  out.checks.push_back(r);
}

void run_family(CaseResult& out, const Json& c) {
  DarmonCase dc = darmon_case(c);
  auto fam = family_for(dc, c);
  CheckRecord r;
  r.statement = "lemma_tate_family";
  r.instance = Json{{"D", dc.D}, {"n", dc.n}, {"S", prime_divisors(dc.N)}};
  auto fj = family_json(fam);
  r.lhs = fj["T"];
  r.rhs = fj["a"];
  r.mode = "exact";
  r.tolerance = nullptr;
  r.verdict = fam.certified ? "pass" : "fail";
  out.checks.push_back(r);
}

void dispatch(CaseResult& out, const std::string& verb, const Json& c);

}  // namespace

Json normalize_case(const std::string& verb, const Json& raw) {
  if (!raw.is_object()) throw ConfigError("a case must be a JSON object");
  auto it = kFields.find(verb);
  if (it == kFields.end()) throw ConfigError("unknown verb " + verb);
  for (auto& [k, v] : raw.items()) {
    bool known = std::find(kCommon.begin(), kCommon.end(), k) != kCommon.end() ||
                 std::find(it->second.begin(), it->second.end(), k) != it->second.end();
    if (!known) throw ConfigError("unknown field '" + k + "' for " + verb);
  }
  Json c = Json::object();
  c["id"] = raw.value("id", std::string());
  c["verb"] = verb;
  c["precision_bits"] = raw.value("precision_bits", 256);
  c["seed"] = raw.value("seed", std::uint64_t{1});
  c["power_test_primes"] = raw.value("power_test_primes", 40);
  auto defaults = [&](const char* k, Json v) { c[k] = raw.contains(k) ? raw[k] : v; };
  if (verb == "verify-darmon") {
    defaults("D", nullptr);
    defaults("n", nullptr);
    defaults("T", Json::array());
    defaults("mutate_h", 0);
    defaults("tolerance", "1e-8");
  } else if (verb == "verify-stark-rank1") {
    defaults("D", nullptr);
    defaults("n", nullptr);
    defaults("T", Json::array({3}));
    defaults("tolerance", "1e-8");
  } else if (verb == "check-propnorm") {
    defaults("statement", "propnorm");
    defaults("trials", 200);
  } else if (verb == "explore-phiconj") {
    defaults("trials", 100);
    if (raw.contains("instance")) c["instance"] = raw["instance"];
  } else if (verb == "verify-unramified") {
    defaults("rprime", nullptr);
    defaults("q", nullptr);
    defaults("k", nullptr);
    defaults("W", Json::array());
    defaults("t", 3);
  } else if (verb == "lemma-compute") {
    defaults("D", nullptr);
    defaults("n", nullptr);
    defaults("tolerance", "1e-8");
  } else if (verb == "find-t-family") {
    defaults("D", nullptr);
    defaults("n", nullptr);
    defaults("T", Json::array());
  }
  for (auto& [k, v] : c.items())
    if (v.is_null()) throw ConfigError("missing required field '" + k + "'");
  int bits = get_field<int>(c, "precision_bits");
  if (bits < 64 || bits > 8192) throw ConfigError("precision_bits must lie in [64, 8192]");
  if (get_field<int>(c, "power_test_primes") < 1) throw ConfigError("power_test_primes must be positive");
  if (c.contains("tolerance")) {
    try {
      Real t(get_field<std::string>(c, "tolerance"));
      if (t <= 0) throw ConfigError("tolerance must be positive");
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError("tolerance must be a decimal string");
    }
  }
  return c;
}

CaseResult run_case(const std::string& verb, const Json& config) {
  Json c = normalize_case(verb, config);
  CaseResult out;
  out.id = get_field<std::string>(c, "id");
  out.verb = verb;
  out.config = c;
  PrecisionGuard guard(get_field<unsigned>(c, "precision_bits"));
  try {
    dispatch(out, verb, c);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return out;
}

namespace {

void dispatch(CaseResult& out, const std::string& verb, const Json& c) {
  if (verb == "verify-darmon")
    run_darmon(out, c);
  else if (verb == "verify-stark-rank1")
    run_stark(out, c);
  else if (verb == "check-propnorm")
    run_algebra(out, c, false);
  else if (verb == "explore-phiconj")
    run_algebra(out, c, true);
  else if (verb == "verify-unramified")
    run_unramified(out, c);
  else if (verb == "lemma-compute")
    run_lemma(out, c);
  else
    run_family(out, c);
}

}  // namespace

std::vector<Json> expand_config(const Json& config) {
  if (!config.is_object()) throw ConfigError("config must be a JSON object");
  if (!config.contains("cases")) return {config};
  if (config.size() != 1) throw ConfigError("a batch config holds only 'cases'");
  if (!config["cases"].is_array()) throw ConfigError("'cases' must be an array");
  return std::vector<Json>(config["cases"].begin(), config["cases"].end());
}

BatchResult run_batch(const std::string& verb, const std::vector<Json>& cases) {
  // validate everything before running anything
  std::vector<std::pair<std::string, Json>> todo;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    Json raw = cases[i];
    if (!raw.is_object()) throw ConfigError("a case must be a JSON object");
    std::string v = raw.contains("verb") ? raw["verb"].get<std::string>() : verb;
    if (v.empty()) throw ConfigError("case without a verb");
    if (!raw.contains("id")) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "case-%04zu", i);
      raw["id"] = buf;
    }
    Json c = normalize_case(v, raw);
    if (!ids.insert(c["id"].get<std::string>()).second) throw ConfigError("duplicate case id " + c["id"].get<std::string>());
    todo.emplace_back(v, raw);
  }
  std::stable_sort(todo.begin(), todo.end(),
                   [](auto& a, auto& b) { return a.second["id"].template get<std::string>() < b.second["id"].template get<std::string>(); });
  BatchResult out;
  for (auto& [v, raw] : todo) out.cases.push_back(run_case(v, raw));
  out.exit_code = exit_code_of(out.cases);
  return out;
}

int exit_code_of(const std::vector<CaseResult>& cases) {
  bool any_fail = false, all_degenerate = !cases.empty();
  for (auto& c : cases) {
    for (auto& r : c.checks) any_fail = any_fail || r.verdict == "fail";
    all_degenerate = all_degenerate && c.degenerate;
  }
  if (any_fail) return 2;
  return all_degenerate ? 3 : 0;
}

Json report_body(const std::string& verb, const BatchResult& b) {
  Json cases = Json::array();
  std::map<std::string, int> tally{{"pass", 0}, {"fail", 0}, {"trivial", 0}};
  for (auto& c : b.cases) {
    Json checks = Json::array();
    for (auto& r : c.checks) {
      checks.push_back(to_json(r));
      ++tally[r.verdict];
    }
    cases.push_back(Json{{"id", c.id}, {"verb", c.verb}, {"config", c.config}, {"degenerate", c.degenerate}, {"checks", checks}});
  }
  Json summary = Json::object();
  for (auto& [k, v] : tally) summary[k] = v;
  return Json{{"artifact", "starkit 0.1.0"}, {"verb", verb}, {"cases", cases}, {"summary", summary}, {"exit_code", b.exit_code}};
}

}  // namespace starkit
