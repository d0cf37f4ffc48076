#include <doctest.h>

#include "starkit/numberfield.hpp"

using namespace starkit;

TEST_CASE("fundamental units") {
  auto F5 = make_quad_field(5);
  auto e5 = fundamental_unit(F5);
  CHECK(e5 == quad(0, 1));  // omega = (1 + sqrt 5)/2
  CHECK(norm(F5, e5) == -1);
  auto F2 = make_quad_field(2);
  CHECK(fundamental_unit(F2) == quad(1, 1));
  auto F3 = make_quad_field(3);
  CHECK(fundamental_unit(F3) == quad(2, 1));
  CHECK(norm(F3, fundamental_unit(F3)) == 1);
  auto F13 = make_quad_field(13);
  auto e13 = fundamental_unit(F13);  // (3 + sqrt 13)/2 = 1 + omega
  CHECK(e13 == quad(1, 1));
  auto F94 = make_quad_field(94);
  auto e94 = fundamental_unit(F94);
  CHECK(e94 == quad(2143295, 221064));
}

TEST_CASE("splitting and local values") {
  auto F = make_quad_field(5);
  CHECK(splitting(F, 2) == Splitting::inert);
  CHECK(splitting(F, 11) == Splitting::split);
  CHECK(splitting(F, 5) == Splitting::ramified);
  auto P = fixed_prime(F, 11);
  CHECK(P.root == 4);  // omega^2 = omega + 1 has roots 4, 8 mod 11
  auto lv = local_value(F, quad(11), P);
  CHECK(lv.ord == 1);
  CHECK(lv.residue == 1);
  auto pi = quad(Rational(3), Rational(1));  // norm 9 + 3 - 1 = 11
  CHECK(norm(F, pi) == 11);
  CHECK(valuation(F, pi, P) + valuation(F, pi, conjugate_prime(F, P)) == 1);
  CHECK(reduce_mod(F, quad(Rational(1, 2), 1), 11, 3) == mod(6 + 3, 11));
}

TEST_CASE("class groups") {
  CHECK(class_group(make_quad_field(5)).h == 1);
  CHECK(class_group(make_quad_field(10)).h == 2);
  CHECK(class_group(make_quad_field(79)).h == 3);
  auto F = make_quad_field(10);
  auto C = class_group(F, {3});
  // the primes above 3 are not principal in Q(sqrt 10)
  CHECK(n_class_number(F, C, 3) == 1);
  CHECK(n_class_number(F, C, 1) == 2);
}

TEST_CASE("minus unit bases") {
  auto F = make_quad_field(5);
  auto S = minus_unit_basis(F, 11);
  CHECK(S.nu_plus() == 1);
  REQUIRE(S.u.size() == 2);
  CHECK(abs(norm(F, S.u[1])) == 11);
  CHECK(regulator_sign_det(F, S) > 0);
  auto S2 = minus_unit_basis(F, 22);
  CHECK(S2.nu_plus() == 1);
  CHECK(S2.nu_minus() == 1);
  CHECK(S2.u.size() == 2);
  auto S1 = minus_unit_basis(F, 1);
  CHECK(S1.u.size() == 1);
  auto F10 = make_quad_field(10);
  auto S3 = minus_unit_basis(F10, 3 * 13);
  CHECK(S3.h == 2);
  CHECK(S3.u.size() == 3);
  CHECK(regulator_sign_det(F10, S3) > 0);
}
