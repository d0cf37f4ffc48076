#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace starkit {

namespace bmp = boost::multiprecision;

using Integer = bmp::number<bmp::gmp_int, bmp::et_off>;
using Rational = bmp::number<bmp::gmp_rational, bmp::et_off>;
using Real = bmp::number<bmp::mpfr_float_backend<0>, bmp::et_off>;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using IMat = Mat<Integer>;
using IVec = Vec<Integer>;
using QMat = Mat<Rational>;
using QVec = Vec<Rational>;

// Sets the working precision of Real for the lifetime of the guard.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

unsigned current_precision_bits();

struct Cx {
  Real re, im;
  Cx() : re(0), im(0) {}
  Cx(Real r) : re(std::move(r)), im(0) {}
  Cx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Cx(int r) : re(r), im(0) {}
};

Cx operator+(const Cx& a, const Cx& b);
Cx operator-(const Cx& a, const Cx& b);
Cx operator-(const Cx& a);
Cx operator*(const Cx& a, const Cx& b);
Cx operator/(const Cx& a, const Cx& b);
Cx& operator+=(Cx& a, const Cx& b);
Cx& operator-=(Cx& a, const Cx& b);
Cx& operator*=(Cx& a, const Cx& b);
bool operator==(const Cx& a, const Cx& b);
bool operator!=(const Cx& a, const Cx& b);
Cx conj(const Cx& a);
Real abs(const Cx& a);
Real norm2(const Cx& a);
// exp(2 pi i num/den)
Cx root_of_unity(std::int64_t num, std::int64_t den);

Real pi_real();
Real log_gamma(const Real& x);

// Elementary number theory on machine integers.
std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t m);
std::int64_t invmod(std::int64_t a, std::int64_t m);
bool is_prime(std::int64_t n);
std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n);
std::vector<std::int64_t> prime_divisors(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
std::int64_t primitive_root(std::int64_t p);
std::int64_t multiplicative_order(std::int64_t a, std::int64_t m);
int kronecker(std::int64_t a, std::int64_t n);
// Square root of a mod odd prime p; requires a to be a square.
std::int64_t sqrt_mod(std::int64_t a, std::int64_t p);
// Discrete log of a to base g mod p by baby-step giant-step; -1 when absent.
std::int64_t discrete_log(std::int64_t a, std::int64_t g, std::int64_t p);
std::int64_t crt(const std::vector<std::int64_t>& r, const std::vector<std::int64_t>& m);
bool is_squarefree(std::int64_t n);

Integer to_integer(std::int64_t v);
std::int64_t to_i64(const Integer& v);
Integer gcd(const Integer& a, const Integer& b);
Integer floor_div(const Integer& a, const Integer& b);
Integer mod(const Integer& a, const Integer& b);
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);
Rational parse_rational(const std::string& s);

}  // namespace starkit
