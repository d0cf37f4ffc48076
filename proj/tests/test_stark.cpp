#include "doctest.h"
#include "starkit/stark.hpp"

using namespace starkit;

TEST_CASE("rank one Rubin-Stark over real ray class fields") {
  PrecisionGuard guard(256);
  struct Case {
    std::int64_t D, n;
    std::vector<std::int64_t> T;
  };
  for (auto c : std::vector<Case>{{5, 11, {3}}, {5, 4, {3}}, {13, 3, {7}}, {17, 2, {3}}, {5, 1, {}}}) {
    auto F = make_quad_field(c.D);
    auto res = verify_stark_rank1(F, c.n, c.T, Real("1e-60"));
    CAPTURE(c.D);
    CAPTURE(c.n);
    CHECK(res.pass);
  }
}

TEST_CASE("Rubin-Stark check rejects a wrong unit") {
  PrecisionGuard guard(128);
  auto F = make_quad_field(5);
  auto eps = stark_unit_rank1(F, 11, {3});
  auto sq = pow(eps, Integer(2));
  auto res = verify_stark_rank1(55, real_ray_subgroup(F, 11), {5, 11}, sq, {3}, Real("1e-20"));
  CHECK_FALSE(res.pass);
}

TEST_CASE("norm relation for cyclotomic units") {
  auto a = verify_norm_relation(5, 11, {3});
  CHECK(a.pass);
  CHECK(a.euler_factor);
  CHECK(a.control_rejected);
  auto b = verify_norm_relation(9, 3, {});
  CHECK(b.pass);
  CHECK_FALSE(b.euler_factor);
  CHECK(b.control_rejected);
  auto c = verify_norm_relation(7, 2, {3});
  CHECK(c.pass);
  auto F = make_quad_field(5);
  auto e = verify_norm_relation(F, 1, 11, {3});
  CHECK(e.pass);
  CHECK(e.control_rejected);
  auto g = verify_norm_relation(F, 3, 7, {});
  CHECK(g.pass);
}

TEST_CASE("unramified towers with r' = 0") {
  for (auto W : std::vector<std::vector<std::int64_t>>{{2}, {11}, {2, 11}}) {
    auto res = verify_unramified_case({0, 7, 1, W, 3});
    CAPTURE(res.reason);
    CAPTURE(res.lhs);
    CAPTURE(res.rhs);
    CHECK(res.pass());
    CHECK(res.control_rejected);
  }
  auto bad = verify_unramified_case({0, 7, 1, {3}, 5});
  CHECK_FALSE(bad.valid);
}

TEST_CASE("unramified towers with r' = 1") {
  struct Case {
    std::int64_t q, k;
    std::vector<std::int64_t> W;
    std::int64_t t;
  };
  for (auto c : std::vector<Case>{{7, 2, {2}, 29}, {7, 2, {2, 3}, 29}, {13, 2, {3}, 53}, {11, 2, {3, 7}, 23}, {13, 4, {2}, 53}}) {
    auto res = verify_unramified_case({1, c.q, c.k, c.W, c.t});
    CAPTURE(c.q);
    CAPTURE(res.reason);
    CAPTURE(res.lhs);
    CAPTURE(res.rhs);
    CHECK(res.pass());
    CHECK(res.bconj);
    CHECK(res.control_rejected);
  }
}
