#include <doctest.h>

#include "starkit/gmodlat.hpp"

using namespace starkit;

namespace {

GLattice random_module(const GroupPtr& G, const std::vector<std::vector<int>>& subs, std::mt19937_64& rng) {
  GLattice M = permutation_lattice(G, subs);
  return conjugate(M, random_unimodular(M.N, rng, 3 * M.N));
}

}  // namespace

TEST_CASE("rubin lattice of free and permutation modules") {
  auto G = make_group({2, 3});
  auto M = permutation_lattice(G, {{}});
  CHECK(is_action(M));
  CHECK(rubin_lattice(M, 1).rank() == 6);
  auto M2 = permutation_lattice(G, {{}, {}});
  CHECK(rubin_lattice(M2, 2).rank() == 6);
  CHECK(rubin_lattice(M2, 1).rank() == 12);
  auto P = permutation_lattice(G, {{G->generator(0)}});
  CHECK(P.N == 3);
  CHECK(rubin_lattice(P, 1).rank() == 3);
  CHECK(rubin_lattice(P, 0).rank() == 6);
}

TEST_CASE("conjugation preserves the action") {
  std::mt19937_64 rng(7);
  auto G = make_group({4});
  auto M = random_module(G, {{}, {2}}, rng);
  CHECK(is_action(M));
}

TEST_CASE("descent identities on random modules") {
  std::mt19937_64 rng(11);
  struct Shape {
    std::vector<int> orders;
    int rank;
    int d;
  };
  std::vector<Shape> shapes = {{{2, 2}, 1, 1}, {{6}, 2, 1}, {{4}, 1, 2}, {{2, 4}, 2, 2}, {{3, 3}, 1, 1}, {{2, 6}, 1, 3}};
  for (auto& sh : shapes) {
    auto G = make_group(sh.orders);
    std::vector<std::vector<int>> subs(sh.rank);
    if (sh.rank > 1) subs[1] = {G->generator(0)};
    auto M = random_module(G, subs, rng);
    auto H = G->closure({G->generator(static_cast<int>(sh.orders.size()) - 1)});
    for (int r = 0; r <= std::min(sh.rank, 2); ++r) {
      if (r == 2 && sh.d > 1) continue;
      auto D = make_descent(M, H, r, sh.d);
      for (int trial = 0; trial < 4; ++trial) {
        auto Phi = random_evaluator(D, rng, 2);
        auto m = planted_element(D, rng, 2);
        auto res = check_propnorm(D, Phi, m);
        CHECK(res.in_image);
        CHECK(res.lhs_in_ideal);
        CHECK(res.equal);
        if (r >= 1) {
          auto x = random_element(D, rng, 3);
          CHECK(check_eqphi(D, Phi, x));
          CHECK(check_reminj(D, x));
          auto Y = random_tensor(D, rng);
          if (!tensor_is_zero(D, Y)) CHECK(check_thminj(D, Y));
        }
      }
    }
  }
}

TEST_CASE("shuffle signs") {
  CHECK(sign_shuffle({1, 2, 3}, {1}) == 1);
  CHECK(sign_shuffle({1, 2, 3}, {2}) == -1);
  CHECK(sign_shuffle({1, 2, 3}, {3}) == 1);
  CHECK(sign_shuffle({1, 2, 3, 4}, {1, 2}) == 1);
  CHECK(sign_shuffle({1, 2, 3, 4}, {1, 3}) == -1);
}

TEST_CASE("descent checks are not vacuous") {
  std::mt19937_64 rng(5);
  auto G = make_group({2, 4});
  auto M = random_module(G, {{}, {G->generator(0)}}, rng);
  auto H = G->closure({G->generator(1)});
  auto D = make_descent(M, H, 1, 2);
  int outside = 0, nonzero = 0, wrong = 0;
  for (int trial = 0; trial < 20; ++trial) {
    auto x = random_element(D, rng, 3);
    if (!injection_preimage(D, higher_norm(D, x))) ++outside;
    auto Phi = random_evaluator(D, rng, 2);
    auto m = planted_element(D, rng, 2);
    auto res = check_propnorm(D, Phi, m);
    if (!D.target.pres.is_zero(res.lhs)) ++nonzero;
    auto Y = injection_preimage(D, higher_norm(D, m));
    REQUIRE(Y);
    (*Y)(0, 0) += 1;
    auto bad = phi_H_tensor(D, Phi, *Y);
    if (!(*bad == res.lhs)) ++wrong;
  }
  CHECK(outside > 0);
  CHECK(nonzero > 0);
  CHECK(wrong > 0);
}
