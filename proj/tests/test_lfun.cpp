#include <doctest.h>

#include "starkit/lfun.hpp"

using namespace starkit;

namespace {

const DirichletChar& quadratic_char(const AbelianField& L) {
  for (auto& c : L.chars)
    if (c.order == 2) return c;
  throw std::logic_error("no quadratic character");
}

bool close(const Cx& a, const Cx& b, const Real& tol) { return abs(a - b) < tol; }

}  // namespace

TEST_CASE("vanishing orders") {
  auto Q = abelian_field(1, {});
  CHECK(vanishing_order(Q.chars[0], {2, 3}) == 2);
  auto L = abelian_field(5, {4});  // Q(sqrt 5)
  const auto& chi = quadratic_char(L);
  CHECK(vanishing_order(chi, {5}) == 1);
  CHECK(vanishing_order(chi, {5, 11}) == 2);
  CHECK(vanishing_order(chi, {5, 2}) == 1);
}

TEST_CASE("classical leading values") {
  PrecisionGuard g(256);
  Real tol("1e-60");
  auto Q = abelian_field(1, {});
  CHECK(close(L_leading(Q.chars[0], {}, {}), Cx(Real(-1) / 2), tol));
  CHECK(close(L_leading(Q.chars[0], {3}, {}), Cx(-bmp::log(Real(3)) / 2), tol));
  CHECK(close(L_leading(Q.chars[0], {}, {3}), Cx(Real(1)), tol));
  // zeta'(0, 1) = -log(2 pi)/2 through log Gamma(1) - log sqrt(2 pi)
  CHECK(bmp::abs(log_gamma(Real(1))) < tol);
  auto L = abelian_field(5, {4});
  auto F = make_quad_field(5);
  Real logeps = bmp::log(to_real(F, fundamental_unit(F)));
  CHECK(close(L_leading(quadratic_char(L), {5}, {}), Cx(logeps), Real("1e-20")));
  // odd quadratic character of Q(sqrt -7): L(0, chi) = h = 1
  auto K = abelian_field(7, {2});
  CHECK(close(L_leading(quadratic_char(K), {7}, {}), Cx(Real(1)), tol));
}

TEST_CASE("rank one Rubin-Stark over Q(sqrt 5)") {
  PrecisionGuard g(256);
  auto L = abelian_field(5, {4});
  for (auto T : std::vector<std::vector<std::int64_t>>{{}, {3}, {7}, {3, 7}}) {
    auto eps = delta_T(symbol(5, 1), T);
    auto lhs = regulator_rank1(L, eps);
    auto rhs = theta_components(L, {5}, T, 1);
    for (std::size_t k = 0; k < lhs.size(); ++k) CHECK(close(lhs[k], rhs[k], Real("1e-60")));
  }
}

TEST_CASE("component transforms invert each other") {
  PrecisionGuard g(128);
  auto L = abelian_field(21, {20});
  std::vector<Cx> x(L.size());
  for (int i = 0; i < L.size(); ++i) x[i] = Cx(Real(i * i - 3));
  auto y = from_components(L, to_components(L, x));
  for (int i = 0; i < L.size(); ++i) CHECK(close(x[i], y[i], Real("1e-30")));
}

TEST_CASE("regulator comparison lemma") {
  PrecisionGuard g(256);
  for (auto [D, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{{5, 1}, {5, 11}, {5, 2}, {5, 22}, {13, 23}, {5, 6}, {10, 39}}) {
    auto F = make_quad_field(D);
    auto S = minus_unit_basis(F, n);
    auto v = lemma_compute(F, S);
    CAPTURE(D);
    CAPTURE(n);
    CHECK(bmp::abs(v.lhs - v.rhs) < Real("1e-40") * bmp::abs(v.lhs));
  }
}
