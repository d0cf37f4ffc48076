#include "doctest.h"
#include "starkit/runner.hpp"

using namespace starkit;

namespace {
Json darmon(std::int64_t D, std::int64_t n, const char* id) { return Json{{"id", id}, {"D", D}, {"n", n}}; }
}  // namespace

TEST_CASE("serialization round trips") {
  auto G = make_group({2, 6});
  IntElement x(G);
  x[G->index({1, 4})] = Integer(-3);
  x[0] = Integer("123456789012345678901234567890");
  auto j = to_json(x);
  CHECK(j["coeffs"].size() == 2);
  CHECK(int_element_from_json(j) == x);

  MultElement u;
  u.level = 35;
  u.terms[2] = 5;
  u.terms[34] = -1;
  u.scalar = Rational(-2, 3);
  auto v = mult_element_from_json(to_json(u));
  CHECK(v.level == 35);
  CHECK(v.terms == u.terms);
  CHECK(v.scalar == u.scalar);

  auto inst = random_algebra_instance("phiconj", 17);
  auto back = algebra_instance_from_json(to_json(inst));
  CHECK(to_json(back) == to_json(inst));
  auto bad = to_json(inst);
  bad["extra"] = 1;
  CHECK_THROWS(algebra_instance_from_json(bad));
}

TEST_CASE("config schema") {
  CHECK_THROWS_AS(normalize_case("verify-darmon", Json{{"D", 5}, {"n", 11}, {"colour", "red"}}), ConfigError);
  CHECK_THROWS_AS(normalize_case("verify-darmon", Json{{"D", 5}}), ConfigError);
  CHECK_THROWS_AS(normalize_case("no-such-verb", Json::object()), ConfigError);
  CHECK_THROWS_AS(normalize_case("verify-darmon", Json{{"D", 5}, {"n", 11}, {"precision_bits", 8}}), ConfigError);
  CHECK_THROWS_AS(normalize_case("lemma-compute", Json{{"D", 5}, {"n", 11}, {"tolerance", "abc"}}), ConfigError);
  auto c = normalize_case("verify-darmon", darmon(5, 11, "x"));
  CHECK(c["precision_bits"] == 256);
  CHECK(c["power_test_primes"] == 40);
  CHECK(c["tolerance"] == "1e-8");
  CHECK_THROWS_AS(run_case("verify-darmon", darmon(4, 11, "x")), ConfigError);
  CHECK_THROWS_AS(run_case("verify-unramified", Json{{"rprime", 2}, {"q", 7}, {"k", 1}}), ConfigError);
  CHECK_THROWS_AS(expand_config(Json{{"cases", Json::array()}, {"more", 1}}), ConfigError);
  CHECK_THROWS_AS(run_batch("verify-darmon", {darmon(5, 2, "a"), darmon(5, 1, "a")}), ConfigError);
}

TEST_CASE("batch order and exit codes") {
  auto empty = run_batch("verify-darmon", {});
  CHECK(empty.exit_code == 0);
  CHECK(empty.cases.empty());

  auto degen = run_batch("verify-darmon", {darmon(5, 2, "z"), darmon(13, 7, "a")});
  REQUIRE(degen.cases.size() == 2);
  CHECK(degen.cases[0].id == "a");
  CHECK(degen.exit_code == 3);

  auto mixed = run_batch("verify-darmon", {darmon(5, 2, "b"), darmon(5, 11, "a")});
  CHECK(mixed.exit_code == 0);

  Json bad = darmon(5, 11, "c");
  bad["mutate_h"] = 1;
  auto control = run_batch("verify-darmon", {darmon(5, 2, "b"), bad});
  CHECK(control.exit_code == 2);
  CHECK(control.cases[1].checks[0].verdict == "fail");
}

TEST_CASE("report bodies are deterministic") {
  std::vector<Json> cases{darmon(5, 11, "p"), Json{{"id", "q"}, {"verb", "check-propnorm"}, {"trials", 5}, {"seed", 9}}};
  auto a = report_body("verify-darmon", run_batch("verify-darmon", cases)).dump();
  auto b = report_body("verify-darmon", run_batch("verify-darmon", cases)).dump();
  CHECK(a == b);
  CHECK(a.find("timestamp") == std::string::npos);
}
