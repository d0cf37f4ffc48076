#pragma once

#include "starkit/exactlat.hpp"

#include <optional>
#include <vector>

namespace starkit {

// F = Q(sqrt D), D > 1 squarefree, with integral basis 1, omega and
// omega^2 = t*omega - nrm.
struct QuadField {
  std::int64_t D = 0;
  std::int64_t f = 0;  // conductor of chi, equal to the discriminant
  std::int64_t t = 0, nrm = 0;
  int chi(std::int64_t a) const;
  // omega under the fixed real embedding sqrt D > 0
  Real omega_real() const;
};

QuadField make_quad_field(std::int64_t D);

// a + b*omega
struct QuadElement {
  Rational a{0}, b{0};
};

bool operator==(const QuadElement& x, const QuadElement& y);
QuadElement quad(const Rational& a, const Rational& b = Rational(0));
QuadElement add(const QuadField& F, const QuadElement& x, const QuadElement& y);
QuadElement mul(const QuadField& F, const QuadElement& x, const QuadElement& y);
QuadElement conj(const QuadField& F, const QuadElement& x);
QuadElement inv(const QuadField& F, const QuadElement& x);
QuadElement pow(const QuadField& F, const QuadElement& x, std::int64_t e);
Rational norm(const QuadField& F, const QuadElement& x);
Rational trace(const QuadField& F, const QuadElement& x);
Real to_real(const QuadField& F, const QuadElement& x);
bool is_integral(const QuadField& F, const QuadElement& x);
// (1 - tau) x = x / x^tau
QuadElement minus_tau(const QuadField& F, const QuadElement& x);

// Smallest unit > 1, via the continued fraction of sqrt D.
QuadElement fundamental_unit(const QuadField& F);

enum class Splitting { split, inert, ramified };
Splitting splitting(const QuadField& F, std::int64_t ell);

// A prime ideal lambda above ell, recorded by the residue of omega mod lambda.
// For split ell the fixed choice is the smaller root.
struct PrimeIdeal {
  std::int64_t ell = 0;
  std::int64_t root = 0;
  Splitting kind = Splitting::split;
  bool operator==(const PrimeIdeal& o) const { return ell == o.ell && root == o.root; }
};

PrimeIdeal fixed_prime(const QuadField& F, std::int64_t ell);
PrimeIdeal conjugate_prime(const QuadField& F, const PrimeIdeal& P);
std::vector<PrimeIdeal> primes_above(const QuadField& F, std::int64_t ell);

// ord_P(x) and the residue of x * ell^{-ord} modulo P (residue field F_ell
// for split primes).
struct LocalValue {
  int ord = 0;
  std::int64_t residue = 0;
};

int valuation(const QuadField& F, const QuadElement& x, const PrimeIdeal& P);
LocalValue local_value(const QuadField& F, const QuadElement& x, const PrimeIdeal& P);
// Image of x under omega |-> omega_res in F_q; x must be q-integral.
std::int64_t reduce_mod(const QuadField& F, const QuadElement& x, std::int64_t q, std::int64_t omega_res);

// Class group as Z^{factor base} modulo principal ideals.
struct ClassGroup {
  std::vector<PrimeIdeal> base;
  IMat relations;
  Presentation pres;
  Integer h{1};
  IVec class_of(const PrimeIdeal& P) const;
};

// analytic class number from the class number formula, rounded
Integer analytic_class_number(const QuadField& F, const QuadElement& eps);
ClassGroup class_group(const QuadField& F, const std::vector<std::int64_t>& extra_primes = {});
// order of the class group modulo the classes of primes dividing n
Integer n_class_number(const QuadField& F, const ClassGroup& C, std::int64_t n);

// Generator of prod P_i^{e_i} (e_i >= 0), or nullopt when none is found
// with |y| <= bound in the omega coordinate.
std::optional<QuadElement> principal_generator(const QuadField& F, const std::vector<PrimeIdeal>& P,
                                               const std::vector<int>& e, std::int64_t bound);

struct SUnitData {
  std::int64_t n = 1;
  std::vector<std::int64_t> nplus, nminus;
  std::vector<PrimeIdeal> lambda;  // fixed primes above n_+, ascending
  std::vector<QuadElement> u;      // u_0, ..., u_{nu_+}
  Integer h{1}, hn{1};
  QuadElement eps;
  int nu_plus() const { return static_cast<int>(nplus.size()); }
  int nu_minus() const { return static_cast<int>(nminus.size()); }
};

SUnitData minus_unit_basis(const QuadField& F, std::int64_t n);
// log|x| at lambda_0 (the real place) and at lambda_1, ..., lambda_nu
Real log_abs_at(const QuadField& F, const SUnitData& S, const QuadElement& x, int j);
Real regulator_sign_det(const QuadField& F, const SUnitData& S);

}  // namespace starkit
