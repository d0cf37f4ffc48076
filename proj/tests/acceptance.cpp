// One line per acceptance criterion; exit status 1 when any line fails.
#include "starkit/runner.hpp"
#include "starkit/stark.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace starkit;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* what, double budget, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = secs <= budget;
  bool ok = o.ok && in_time;
  if (!ok) ++failures;
  std::printf("%s %-4s %-44s %8.2fs/%gs  %s%s\n", ok ? "PASS" : "FAIL", id, what, secs, budget, o.detail.c_str(),
              in_time ? "" : " [over budget]");
  std::fflush(stdout);
}

const Real kTol("1e-8");

}  // namespace

int main() {
  PrecisionGuard guard(256);

  criterion("C1", "algebra identities, 200 instances each", 120, [] {
    Outcome o;
    std::ostringstream s;
    for (auto& st : {"eqphi", "reminj", "propnorm", "thminj", "eqaug"}) {
      int pass = 0, trivial = 0, fail = 0, big = 0;
      for (auto& rec : algebra_batch(st, 200, 1000)) {
        int order = 1;
        for (int d : rec.inst.orders) order *= d;
        big += order > 24;
        (rec.verdict == "pass" ? pass : rec.verdict == "trivial" ? trivial : fail)++;
      }
      o.ok = o.ok && fail == 0 && big == 0 && pass + trivial == 200;
      s << st << " " << pass << "/" << trivial << "/" << fail << " ";
    }
    o.detail = s.str() + "(pass/trivial/fail)";
    return o;
  });

  criterion("C2", "Kolyvagin telescoping, ell <= 50", 1, [] {
    return Outcome{check_kolyvagin_telescoping(50), "all primes ell <= 50"};
  });

  criterion("C3", "norm relation, exact, >= 10 pairs", 10, [] {
    struct Pair {
      std::int64_t M, ell;
      std::vector<std::int64_t> T;
    };
    std::vector<Pair> pairs{{5, 11, {3}}, {9, 3, {}},  {7, 2, {3}},  {3, 5, {7}},   {4, 3, {5}},  {5, 2, {3}},
                            {8, 3, {5}},  {11, 2, {3}}, {3, 7, {5}}, {12, 5, {7}}, {15, 2, {7}}, {7, 7, {3}}};
    int good = 0;
    for (auto& p : pairs) {
      auto r = verify_norm_relation(p.M, p.ell, p.T);
      good += r.pass && r.control_rejected;
    }
    auto F5 = make_quad_field(5), F13 = make_quad_field(13);
    for (auto r : {verify_norm_relation(F5, 1, 11, {3}), verify_norm_relation(F5, 3, 7, {}),
                   verify_norm_relation(F13, 1, 3, {7})})
      good += r.pass && r.control_rejected;
    int total = static_cast<int>(pairs.size()) + 3;
    return Outcome{good == total && total >= 10, std::to_string(good) + "/" + std::to_string(total) + " pairs, controls rejected"};
  });

  criterion("C4", "rank one Rubin-Stark, 256 bits, 1e-8", 60, [] {
    struct Case {
      std::int64_t D, n;
      std::vector<std::int64_t> T;
    };
    std::vector<Case> cases{{5, 11, {3}}, {5, 4, {3}}, {13, 3, {7}}, {17, 2, {3}}, {5, 1, {}}, {13, 1, {}}, {17, 1, {}}};
    int good = 0;
    Real worst = 0;
    for (auto& c : cases) {
      auto r = verify_stark_rank1(make_quad_field(c.D), c.n, c.T, kTol);
      good += r.pass;
      if (r.max_error > worst) worst = r.max_error;
    }
    return Outcome{good == static_cast<int>(cases.size()),
                   std::to_string(good) + "/" + std::to_string(cases.size()) + " cases, max error " + worst.str(3)};
  });

  criterion("C5", "regulator lemma, 1e-8, some nu_- >= 1", 60, [] {
    std::vector<std::pair<std::int64_t, std::int64_t>> cases{{5, 1}, {5, 11}, {5, 2}, {5, 22}, {13, 23}, {13, 7}, {17, 13}};
    int good = 0, with_minus = 0;
    Real worst = 0;
    for (auto [D, n] : cases) {
      auto dc = make_darmon_case(D, n);
      auto v = lemma_compute(dc.F, dc.S);
      Real err = bmp::abs(v.lhs - v.rhs) / std::max(Real(1), bmp::abs(v.rhs));
      good += err <= kTol;
      with_minus += dc.nu_minus() >= 1;
      if (err > worst) worst = err;
    }
    return Outcome{good == static_cast<int>(cases.size()) && with_minus >= 1,
                   std::to_string(good) + "/" + std::to_string(cases.size()) + " cases, " + std::to_string(with_minus) +
                       " with nu_- >= 1, max error " + worst.str(3)};
  });

  criterion("C6", "unramified towers, exact, r' in {0,1}", 120, [] {
    std::vector<UnramifiedCase> cases{{0, 7, 1, {2}, 3},     {0, 7, 1, {11}, 3},    {0, 7, 1, {2, 11}, 3},
                                      {0, 11, 1, {3}, 7},    {1, 7, 2, {2}, 29},    {1, 7, 2, {2, 3}, 29},
                                      {1, 13, 2, {3}, 53},   {1, 11, 2, {3, 7}, 23}, {1, 13, 4, {2}, 53},
                                      {1, 17, 2, {2}, 103},  {1, 13, 2, {17}, 53},  {1, 7, 2, {11}, 29}};
    int good = 0, r0 = 0, r1 = 0, d1 = 0, d2 = 0;
    for (auto& c : cases) {
      auto r = verify_unramified_case(c);
      bool ok = r.pass() && r.control_rejected && (r.d == 1 || r.d == 2);
      good += ok;
      if (ok) {
        (c.rprime == 0 ? r0 : r1)++;
        (r.d == 1 ? d1 : d2)++;
      }
    }
    std::ostringstream s;
    s << good << "/" << cases.size() << " towers (r'=0: " << r0 << ", r'=1: " << r1 << "; d=1: " << d1 << ", d=2: " << d2 << ")";
    return Outcome{good == static_cast<int>(cases.size()) && good >= 10 && r0 && r1 && d1 && d2, s.str()};
  });

  criterion("C7", "descent membership and xi-recursion, D = 5", 300, [] {
    std::ostringstream s;
    bool ok = true;
    for (std::int64_t n : {11, 22, 341}) {
      auto dc = make_darmon_case(5, n);
      auto p = verify_propdes(dc, default_T(dc), 20);
      ok = ok && p.pass() && !p.levels.empty();
      s << "n=" << n << ":" << (p.pass() ? "ok" : "bad") << "(" << p.levels.size() << " levels) ";
    }
    return Outcome{ok, s.str()};
  });

  criterion("C8", "main theorem, power test and controls", 900, [] {
    std::vector<std::pair<std::int64_t, std::int64_t>> main_cases{{5, 11}, {5, 31}, {5, 41}, {5, 22}, {13, 23}, {17, 13}};
    std::vector<std::pair<std::int64_t, std::int64_t>> degenerate{{5, 1}, {5, 2}, {13, 7}, {5, 3}};
    int good = 0, control_failed = 0, counted = 0, arch = 0;
    for (auto [D, n] : main_cases) {
      auto dc = make_darmon_case(D, n);
      if (dc.degenerate() || dc.m < 3) continue;
      ++counted;
      auto r = verify_mrthm(dc, 40);
      good += r.pass && !r.degenerate && r.test.primes_used >= 40;
      control_failed += !verify_mrthm(dc, 40, 1).pass;
    }
    for (auto [D, n] : degenerate) {
      auto r = verify_mrthm(make_darmon_case(D, n), 40, 0, kTol);
      arch += r.degenerate && r.pass && r.arch_error <= kTol;
    }
    std::ostringstream s;
    s << good << "/" << counted << " pass with m >= 3, control failed " << control_failed << "/" << counted
      << ", archimedean " << arch << "/" << degenerate.size();
    bool ok = counted >= 5 && good == counted && control_failed == counted && arch == static_cast<int>(degenerate.size());
    return Outcome{ok, s.str()};
  });

  criterion("C9", "report bodies are deterministic", 120, [] {
    std::vector<Json> cases{Json{{"id", "b"}, {"D", 5}, {"n", 11}, {"seed", 7}},
                            Json{{"id", "a"}, {"D", 5}, {"n", 2}},
                            Json{{"id", "c"}, {"verb", "explore-phiconj"}, {"trials", 10}, {"seed", 3}},
                            Json{{"id", "d"}, {"verb", "verify-stark-rank1"}, {"D", 13}, {"n", 3}, {"T", {7}}}};
    auto a = report_body("verify-darmon", run_batch("verify-darmon", cases)).dump();
    auto b = report_body("verify-darmon", run_batch("verify-darmon", cases)).dump();
    return Outcome{a == b, std::to_string(a.size()) + " bytes, identical"};
  });

  criterion("C10", "phi explorer, 100 planted r = 2 instances", 600, [] {
    int serialized = 0, replayed = 0, counterexamples = 0, shape = 0;
    for (auto& rec : algebra_batch("phiconj", 100, 2024)) {
      shape += rec.inst.r == 2 && rec.inst.d <= 2;
      Json j = to_json(record_from(rec));
      auto text = j.dump();
      ++serialized;
      auto back = Json::parse(text);
      auto again = run_algebra_instance("phiconj", algebra_instance_from_json(back["instance"]));
      Json k = to_json(record_from(again));
      replayed += k == back;
      counterexamples += rec.verdict == "fail";
    }
    std::ostringstream s;
    s << serialized << " serialized, " << replayed << " replayed identically, " << counterexamples << " counterexamples";
    return Outcome{serialized == 100 && replayed == 100 && shape == 100, s.str()};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
