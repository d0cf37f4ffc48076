#include "starkit/numeric.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace starkit {

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_(current_precision_bits()) {
  Real::default_precision(bits * 30103u / 100000u + 2);
}
PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_ * 30103u / 100000u + 2); }

unsigned current_precision_bits() {
  return static_cast<unsigned>(std::ceil(Real::default_precision() / 0.30103));
}

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator-(const Cx& a) { return {-a.re, -a.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx operator/(const Cx& a, const Cx& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Cx& operator+=(Cx& a, const Cx& b) { return a = a + b; }
Cx& operator-=(Cx& a, const Cx& b) { return a = a - b; }
Cx& operator*=(Cx& a, const Cx& b) { return a = a * b; }
bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }
bool operator!=(const Cx& a, const Cx& b) { return !(a == b); }
Cx conj(const Cx& a) { return {a.re, -a.im}; }
Real abs(const Cx& a) { return sqrt(a.re * a.re + a.im * a.im); }
Real norm2(const Cx& a) { return a.re * a.re + a.im * a.im; }

Cx root_of_unity(std::int64_t num, std::int64_t den) {
  num = mod(num, den);
  if (num == 0) return Cx(1);
  if (2 * num == den) return Cx(-1);
  if (4 * num == den) return {Real(0), Real(1)};
  if (4 * num == 3 * den) return {Real(0), Real(-1)};
  Real t = 2 * pi_real() * Real(num) / Real(den);
  return {cos(t), sin(t)};
}

Real pi_real() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real log_gamma(const Real& x) {
  Real r;
  mpfr_lngamma(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(mod(a, m)) * mod(b, m) % m);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t m) {
  if (m == 1) return 0;
  if (e < 0) return powmod(invmod(a, m), -e, m);
  std::int64_t r = 1;
  a = mod(a, m);
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::int64_t invmod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = mod(a, m);
  while (a1) {
    std::int64_t q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw std::domain_error("invmod: not invertible");
  return mod(x, m);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::int64_t d = n - 1;
  int s = 0;
  while (!(d & 1)) {
    d >>= 1;
    ++s;
  }
  for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::int64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s && comp; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) comp = false;
    }
    if (comp) return false;
  }
  return true;
}

std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> f;
  if (n < 0) n = -n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (auto& [p, e] : factor(n)) out.push_back(p);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> d{1};
  for (auto& [p, e] : factor(n)) {
    std::size_t sz = d.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) d.push_back(d[i] * pk);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n < 2) return out;
  std::vector<bool> sieve(n + 1, true);
  for (std::int64_t i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= n; j += i) sieve[j] = false;
  }
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (auto& [p, e] : factor(n)) r = r / p * (p - 1);
  return r;
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t m) {
  if (gcd64(a, m) != 1) throw std::domain_error("order of a non-unit");
  std::int64_t ord = euler_phi(m);
  for (auto& [p, e] : factor(ord)) {
    while (ord % p == 0 && powmod(a, ord / p, m) == 1) ord /= p;
  }
  return ord;
}

std::int64_t primitive_root(std::int64_t p) {
  if (p == 2) return 1;
  auto ps = prime_divisors(p - 1);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : ps) {
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::domain_error("no primitive root");
}

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  if (v > 0) {
    if (a % 2 == 0) return 0;
    if ((v & 1) && (mod(a, 8) == 3 || mod(a, 8) == 5)) result = -result;
  }
  a = mod(a, n);
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      if (n % 8 == 3 || n % 8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

std::int64_t sqrt_mod(std::int64_t a, std::int64_t p) {
  a = mod(a, p);
  if (a == 0 || p == 2) return a;
  if (powmod(a, (p - 1) / 2, p) != 1) throw std::domain_error("sqrt_mod: non-residue");
  std::int64_t q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::int64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::int64_t m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::int64_t i = 0, t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    std::int64_t b = c;
    for (std::int64_t j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return std::min(r, p - r);
}

std::int64_t discrete_log(std::int64_t a, std::int64_t g, std::int64_t p) {
  a = mod(a, p);
  std::int64_t n = p - 1;
  auto m = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(n)))) + 1;
  std::unordered_map<std::int64_t, std::int64_t> baby;
  std::int64_t cur = 1;
  for (std::int64_t j = 0; j < m; ++j) {
    baby.emplace(cur, j);
    cur = mulmod(cur, g, p);
  }
  std::int64_t factor_ = powmod(g, n - m % n, p);
  std::int64_t gamma = a;
  for (std::int64_t i = 0; i <= m; ++i) {
    auto it = baby.find(gamma);
    if (it != baby.end()) return mod(i * m + it->second, n);
    gamma = mulmod(gamma, factor_, p);
  }
  return -1;
}

std::int64_t crt(const std::vector<std::int64_t>& r, const std::vector<std::int64_t>& m) {
  std::int64_t x = 0, M = 1;
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::int64_t t = mulmod(mod(r[i] - x, m[i]), invmod(M % m[i], m[i]), m[i]);
    x += M * t;
    M *= m[i];
    x = mod(x, M);
  }
  return x;
}

bool is_squarefree(std::int64_t n) {
  for (auto& [p, e] : factor(n))
    if (e > 1) return false;
  return true;
}

Integer to_integer(std::int64_t v) { return Integer(v); }
std::int64_t to_i64(const Integer& v) { return v.convert_to<std::int64_t>(); }
Integer gcd(const Integer& a, const Integer& b) { return bmp::gcd(a, b); }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Integer mod(const Integer& a, const Integer& b) {
  Integer r = a % b;
  if (r < 0) r += (b < 0 ? Integer(-b) : b);
  return r;
}

std::string to_string(const Integer& v) { return v.str(); }
std::string to_string(const Rational& v) { return v.str(); }

Rational parse_rational(const std::string& s) { return Rational(s); }

}  // namespace starkit
