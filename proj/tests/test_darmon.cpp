#include "doctest.h"
#include "starkit/darmon.hpp"

using namespace starkit;

TEST_CASE("Kolyvagin derivative telescopes") {
  CHECK(check_kolyvagin_telescoping(50));
  auto G = make_group({4, 6});
  auto D = kolyvagin_derivative(G, G->generator(0), 5) * kolyvagin_derivative(G, G->generator(1), 7);
  auto one = IntElement::scalar(G, Integer(1));
  // (g_0 - 1) D = (4 - 1 - N_0) D_1
  auto lhs = (IntElement::basis(G, G->generator(0)) - one) * D;
  auto rhs = (IntElement::scalar(G, Integer(4)) - norm_element(G, G->closure({G->generator(0)}))) *
             kolyvagin_derivative(G, G->generator(1), 7);
  CHECK(lhs == rhs);
}

TEST_CASE("G_n lifts") {
  auto Gn = make_gn(77, 5);
  CHECK(Gn.G->size() == 60);
  for (int g = 0; g < Gn.G->size(); ++g) {
    CHECK(Gn.lift(g) % 5 == 1);
    CHECK(Gn.lift(g) % 77 == Gn.residue(g));
  }
  CHECK_THROWS(make_gn(11, 5, {3}));  // 3 has order 5 mod 11
}

TEST_CASE("Darmon main theorem, non-degenerate") {
  PrecisionGuard guard(128);
  struct Case {
    std::int64_t D, n, m;
  };
  for (auto cs : std::vector<Case>{{5, 11, 5}, {5, 31, 15}, {5, 22, 5}, {13, 23, 11}, {17, 13, 3}}) {
    auto c = make_darmon_case(cs.D, cs.n);
    CAPTURE(cs.D);
    CAPTURE(cs.n);
    CHECK(c.m == cs.m);
    auto r = verify_mrthm(c, 40);
    CHECK(r.valuation_ok);
    CHECK(r.pass);
    CHECK(r.test.primes_used == 40);
    auto ctrl = verify_mrthm(c, 40, 1);
    CHECK_FALSE(ctrl.pass);
  }
}

TEST_CASE("verdict does not depend on the generators gamma_ell") {
  PrecisionGuard guard(128);
  for (std::int64_t g : {2, 6, 7, 8}) {
    auto c = make_darmon_case(5, 11, {g});
    CAPTURE(g);
    CHECK(verify_mrthm(c, 20).pass);
  }
}

TEST_CASE("R_n survives u_1 -> u_1 u_0") {
  PrecisionGuard guard(128);
  auto c = make_darmon_case(5, 11);
  auto R = regulator_Rn(c);
  auto c2 = c;
  c2.S.u[1] = mul(c.F, c.S.u[1], c.S.u[0]);
  auto R2 = regulator_Rn(c2);
  // x'_0 = x_0, x'_1 = x_1 x_0
  CHECK(mod(R2.rho[0] + R2.rho[1] - R.rho[0], Integer(c.m)) == 0);
  CHECK(mod(R2.rho[1] - R.rho[1], Integer(c.m)) == 0);
  CHECK(verify_mrthm(c2, 20).pass);
}

TEST_CASE("degenerate cases: archimedean logarithms") {
  PrecisionGuard guard(256);
  for (auto [D, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{{5, 1}, {5, 2}, {13, 7}, {5, 3}}) {
    auto c = make_darmon_case(D, n);
    CAPTURE(n);
    REQUIRE(c.degenerate());
    auto r = verify_mrthm(c, 40);
    CHECK(r.pass);
    CHECK(r.arch_error < Real("1e-60"));
    CHECK_FALSE(verify_mrthm(c, 40, 1).pass);
  }
}

TEST_CASE("Tate families") {
  auto L = abelian_field(5, {1, 2, 3, 4});  // L = Q
  auto fam = find_t_family(L, {5});
  REQUIRE(fam.certified);
  CHECK(fam.T == std::vector<std::vector<std::int64_t>>{{3}});
  CHECK(fam.a == std::vector<Integer>{Integer(-1)});
  TFamily bad{{{5}}, {Integer(-1)}, false};
  CHECK_FALSE(certify_t_family(L, {5}, bad));
  TFamily wrong{{{3}}, {Integer(1)}, false};
  CHECK_FALSE(certify_t_family(L, {5}, wrong));
  auto c = make_darmon_case(5, 11);
  auto Lp = plus_field(c);
  auto given = solve_t_family(Lp, {5, 11}, {{3}, {7}, {13}});
  CHECK(given.certified == certify_t_family(Lp, {5, 11}, given));
  CHECK_FALSE(solve_t_family(Lp, {5, 11}, {{3}, {11}}).certified);
  auto found = find_t_family(c);
  REQUIRE(found.certified);
  CHECK(solve_t_family(Lp, {5, 11}, found.T).certified);
}

TEST_CASE("Tate lemma, exact and numeric parts") {
  PrecisionGuard guard(256);
  for (auto [D, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{{5, 11}, {5, 2}, {13, 23}, {5, 31}, {17, 13}}) {
    auto c = make_darmon_case(D, n);
    CAPTURE(n);
    auto fam = find_t_family(c);
    REQUIRE(fam.certified);
    CHECK(verify_tlem_i(c, fam));
    auto t = verify_tlem_ii(c, Real("1e-50"));
    CHECK(t.order == c.nu_plus() + 1);
    CHECK(t.pass);
  }
}

TEST_CASE("xi recursion and membership") {
  PrecisionGuard guard(128);
  for (std::int64_t n : {11, 22, 31}) {
    auto c = make_darmon_case(5, n);
    auto p = verify_propdes(c, default_T(c));
    CAPTURE(n);
    CHECK(p.recursion);
    CHECK(p.membership);
    CHECK(p.theta_membership);
    CHECK(p.plus_projection);
    CHECK(p.fixed_mod_m);
    CHECK(p.levels.size() == 2);
  }
}
