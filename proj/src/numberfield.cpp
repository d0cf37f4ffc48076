#include "starkit/numberfield.hpp"

#include <algorithm>
#include <stdexcept>

namespace starkit {

namespace {

int vp(Integer x, std::int64_t p) {
  if (x == 0) throw std::invalid_argument("vp of zero");
  int v = 0;
  Integer P(p);
  while (x % P == 0) {
    x /= P;
    ++v;
  }
  return v;
}

Integer ipow(std::int64_t p, int k) {
  Integer r(1);
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

// omega as an ell-adic integer mod ell^K, congruent to root mod ell
Integer hensel_root(const QuadField& F, std::int64_t ell, std::int64_t root, int K) {
  Integer modulus = ipow(ell, K);
  Integer w(root);
  for (int prec = 1; prec < K; prec *= 2) {
    Integer g = w * w - Integer(F.t) * w + Integer(F.nrm);
    Integer dg = 2 * w - Integer(F.t);
    Integer dinv;
    mpz_invert(dinv.backend().data(), mod(dg, modulus).backend().data(), modulus.backend().data());
    w = mod(w - g * dinv, modulus);
  }
  return w;
}

// x = (A + B omega) / den with integers
void integral_parts(const QuadElement& x, Integer& A, Integer& B, Integer& den) {
  Integer da = denominator(x.a), db = denominator(x.b);
  den = da / gcd(da, db) * db;
  A = numerator(x.a) * (den / da);
  B = numerator(x.b) * (den / db);
}

bool is_square(const Integer& n, Integer& r) {
  if (n < 0) return false;
  r = bmp::sqrt(n);
  return r * r == n;
}

}  // namespace

int QuadField::chi(std::int64_t a) const {
  a = mod(a, f);
  if (a == 0 || gcd64(a, f) != 1) return 0;
  return kronecker(f, a);
}

Real QuadField::omega_real() const {
  Real s = bmp::sqrt(Real(D));
  return t == 1 ? (1 + s) / 2 : s;
}

QuadField make_quad_field(std::int64_t D) {
  if (D <= 1 || !is_squarefree(D)) throw std::invalid_argument("make_quad_field: D must be squarefree > 1");
  QuadField F;
  F.D = D;
  if (mod(D, 4) == 1) {
    F.f = D;
    F.t = 1;
    F.nrm = (1 - D) / 4;
  } else {
    F.f = 4 * D;
    F.t = 0;
    F.nrm = -D;
  }
  return F;
}

bool operator==(const QuadElement& x, const QuadElement& y) { return x.a == y.a && x.b == y.b; }

QuadElement quad(const Rational& a, const Rational& b) { return QuadElement{a, b}; }

QuadElement add(const QuadField&, const QuadElement& x, const QuadElement& y) { return {x.a + y.a, x.b + y.b}; }

QuadElement mul(const QuadField& F, const QuadElement& x, const QuadElement& y) {
  Rational bd = x.b * y.b;
  return {x.a * y.a - bd * F.nrm, x.a * y.b + x.b * y.a + bd * F.t};
}

QuadElement conj(const QuadField& F, const QuadElement& x) { return {x.a + x.b * F.t, -x.b}; }

Rational norm(const QuadField& F, const QuadElement& x) { return x.a * x.a + x.a * x.b * F.t + x.b * x.b * F.nrm; }

Rational trace(const QuadField& F, const QuadElement& x) { return 2 * x.a + x.b * F.t; }

QuadElement inv(const QuadField& F, const QuadElement& x) {
  Rational N = norm(F, x);
  if (N == 0) throw std::domain_error("inverse of zero");
  QuadElement c = conj(F, x);
  return {c.a / N, c.b / N};
}

QuadElement pow(const QuadField& F, const QuadElement& x, std::int64_t e) {
  QuadElement base = e < 0 ? inv(F, x) : x;
  if (e < 0) e = -e;
  QuadElement r = quad(1);
  while (e > 0) {
    if (e & 1) r = mul(F, r, base);
    base = mul(F, base, base);
    e >>= 1;
  }
  return r;
}

Real to_real(const QuadField& F, const QuadElement& x) {
  return Real(numerator(x.a)) / Real(denominator(x.a)) + Real(numerator(x.b)) / Real(denominator(x.b)) * F.omega_real();
}

bool is_integral(const QuadField&, const QuadElement& x) { return denominator(x.a) == 1 && denominator(x.b) == 1; }

QuadElement minus_tau(const QuadField& F, const QuadElement& x) { return mul(F, x, inv(F, conj(F, x))); }

QuadElement fundamental_unit(const QuadField& F) {
  const std::int64_t D = F.D;
  std::int64_t a0 = static_cast<std::int64_t>(std::sqrt(static_cast<double>(D)));
  while (a0 * a0 > D) --a0;
  while ((a0 + 1) * (a0 + 1) <= D) ++a0;
  Integer p_prev(1), q_prev(0), p(a0), q(1);
  std::int64_t m = 0, d = 1, a = a0;
  Integer P, Q;
  for (int guard = 0; guard < 100000; ++guard) {
    Integer val = p * p - Integer(D) * q * q;
    if (val == 1 || val == -1) {
      P = p;
      Q = q;
      break;
    }
    m = d * a - m;
    d = (D - m * m) / d;
    a = (a0 + m) / d;
    Integer pn = Integer(a) * p + p_prev, qn = Integer(a) * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = pn;
    q = qn;
  }
  if (P == 0) throw std::runtime_error("fundamental_unit: continued fraction did not terminate");
  // eta = P + Q sqrt D in the omega basis
  auto from_sqrt = [&](const Rational& x, const Rational& y) {
    return F.t == 1 ? quad(x - y, 2 * y) : quad(x, y);
  };
  QuadElement eta = from_sqrt(Rational(P), Rational(Q));
  if (F.t == 1) {
    // the unit of O_F may be a cube root of eta
    PrecisionGuard g(256);
    Real c = bmp::cbrt(to_real(F, eta));
    for (int s : {1, -1}) {
      Real tr = c + Real(s) / c;
      Integer T(bmp::round(tr).convert_to<Integer>());
      Integer disc = T * T - 4 * s, w;
      if (disc % D != 0 || !is_square(disc / D, w)) continue;
      QuadElement e = from_sqrt(Rational(T, 2), Rational(w, 2));
      if (pow(F, e, 3) == eta) return e;
    }
  }
  return eta;
}

Splitting splitting(const QuadField& F, std::int64_t ell) {
  if (F.f % ell == 0) return Splitting::ramified;
  return F.chi(ell) == 1 ? Splitting::split : Splitting::inert;
}

PrimeIdeal fixed_prime(const QuadField& F, std::int64_t ell) {
  PrimeIdeal P;
  P.ell = ell;
  P.kind = splitting(F, ell);
  P.root = -1;
  if (P.kind == Splitting::inert) return P;
  for (std::int64_t r = 0; r < ell; ++r)
    if (mod(mulmod(r, r, ell) - mulmod(F.t, r, ell) + F.nrm, ell) == 0) {
      P.root = r;
      break;
    }
  return P;
}

PrimeIdeal conjugate_prime(const QuadField& F, const PrimeIdeal& P) {
  if (P.kind != Splitting::split) return P;
  PrimeIdeal Q = P;
  Q.root = mod(F.t - P.root, P.ell);
  return Q;
}

std::vector<PrimeIdeal> primes_above(const QuadField& F, std::int64_t ell) {
  PrimeIdeal P = fixed_prime(F, ell);
  if (P.kind == Splitting::split) return {P, conjugate_prime(F, P)};
  return {P};
}

int valuation(const QuadField& F, const QuadElement& x, const PrimeIdeal& P) {
  Integer N = numerator(norm(F, x)), Nd = denominator(norm(F, x));
  if (N == 0) throw std::domain_error("valuation of zero");
  if (P.kind == Splitting::inert) return (vp(N, P.ell) - vp(Nd, P.ell)) / 2;
  if (P.kind == Splitting::ramified) return vp(N, P.ell) - vp(Nd, P.ell);
  return local_value(F, x, P).ord;
}

LocalValue local_value(const QuadField& F, const QuadElement& x, const PrimeIdeal& P) {
  if (P.kind != Splitting::split) throw std::invalid_argument("local_value: split primes only");
  Integer A, B, den;
  integral_parts(x, A, B, den);
  Integer N = A * A + A * B * F.t + B * B * F.nrm;
  if (N == 0) throw std::domain_error("local_value of zero");
  const int K = vp(N, P.ell) + 2;
  Integer modulus = ipow(P.ell, K);
  Integer w = hensel_root(F, P.ell, P.root, K);
  Integer val = mod(A + B * w, modulus);
  int vn = 0;
  while (val % P.ell == 0) {
    val /= P.ell;
    ++vn;
  }
  int vd = vp(den, P.ell);
  Integer dd = den / ipow(P.ell, vd);
  LocalValue out;
  out.ord = vn - vd;
  std::int64_t num = to_i64(mod(val, Integer(P.ell)));
  out.residue = mulmod(num, invmod(to_i64(mod(dd, Integer(P.ell))), P.ell), P.ell);
  return out;
}

std::int64_t reduce_mod(const QuadField&, const QuadElement& x, std::int64_t q, std::int64_t omega_res) {
  auto red = [&](const Rational& r) {
    Integer dd = mod(denominator(r), Integer(q));
    if (dd == 0) throw std::domain_error("reduce_mod: denominator divisible by q");
    return mulmod(to_i64(mod(numerator(r), Integer(q))), invmod(to_i64(dd), q), q);
  };
  return mod(red(x.a) + mulmod(red(x.b), mod(omega_res, q), q), q);
}

IVec ClassGroup::class_of(const PrimeIdeal& P) const {
  for (std::size_t i = 0; i < base.size(); ++i)
    if (base[i] == P) {
      IVec e = IVec::Zero(static_cast<int>(base.size()));
      e(i) = 1;
      return pres.project(e);
    }
  if (P.kind == Splitting::inert) return IVec::Zero(pres.size());
  throw std::invalid_argument("class_of: prime not in factor base");
}

Integer analytic_class_number(const QuadField& F, const QuadElement& eps) {
  PrecisionGuard g(128);
  Real s = 0, pi = pi_real();
  for (std::int64_t a = 1; a < F.f; ++a) {
    int c = F.chi(a);
    if (c == 0) continue;
    s += Real(c) * bmp::log(2 * bmp::sin(pi * Real(a) / Real(F.f)));
  }
  Real h = -s / (2 * bmp::log(to_real(F, eps)));
  return bmp::round(h).convert_to<Integer>();
}

ClassGroup class_group(const QuadField& F, const std::vector<std::int64_t>& extra_primes) {
  ClassGroup C;
  QuadElement eps = fundamental_unit(F);
  C.h = analytic_class_number(F, eps);
  std::int64_t bound = static_cast<std::int64_t>(std::sqrt(static_cast<double>(F.f)) / 2) + 1;
  std::vector<std::int64_t> ells = primes_up_to(bound);
  for (auto p : extra_primes)
    if (std::find(ells.begin(), ells.end(), p) == ells.end()) ells.push_back(p);
  std::sort(ells.begin(), ells.end());
  for (auto ell : ells)
    if (splitting(F, ell) != Splitting::inert)
      for (auto& P : primes_above(F, ell)) C.base.push_back(P);
  const int k = static_cast<int>(C.base.size());
  std::vector<IVec> rows;
  for (auto ell : ells) {
    if (splitting(F, ell) == Splitting::inert) continue;
    IVec r = IVec::Zero(k);
    for (int i = 0; i < k; ++i)
      if (C.base[i].ell == ell) r(i) += C.base[i].kind == Splitting::ramified ? 2 : 1;
    rows.push_back(r);
  }
  auto in_base = [&](std::int64_t p) {
    if (splitting(F, p) == Splitting::inert) return true;
    return std::find(ells.begin(), ells.end(), p) != ells.end();
  };
  std::int64_t B = 8, prevB = 0;
  for (int round = 0; round < 12; ++round) {
    for (std::int64_t y = 1; y <= B; ++y)
      for (std::int64_t x = -B; x <= B; ++x) {
        if (y <= prevB && x >= -prevB && x <= prevB) continue;
        if (gcd64(x, y) != 1) continue;
        std::int64_t N = x * x + F.t * x * y + F.nrm * y * y;
        if (N == 0) continue;
        auto fac = factor(N < 0 ? -N : N);
        bool smooth = true;
        for (auto& pe : fac) smooth = smooth && in_base(pe.first);
        if (!smooth) continue;
        QuadElement alpha = quad(Rational(x), Rational(y));
        IVec r = IVec::Zero(k);
        for (int i = 0; i < k; ++i)
          if (N % C.base[i].ell == 0) r(i) = valuation(F, alpha, C.base[i]);
        rows.push_back(r);
      }
    prevB = B;
    IMat R(static_cast<int>(rows.size()), k);
    for (std::size_t i = 0; i < rows.size(); ++i) R.row(i) = rows[i].transpose();
    R = hnf_basis(R);
    rows.clear();
    for (int i = 0; i < R.rows(); ++i) rows.push_back(R.row(i).transpose());
    if (R.rows() == k) {
      Integer det(1);
      for (int i = 0; i < k; ++i) det *= R(i, i);
      if (det == C.h) {
        C.relations = R;
        C.pres = quotient_structure(R, k);
        return C;
      }
    }
    B *= 2;
  }
  throw std::runtime_error("class_group: relation search did not reach the analytic class number");
}

Integer n_class_number(const QuadField& F, const ClassGroup& C, std::int64_t n) {
  const int k = static_cast<int>(C.base.size());
  IMat sub = C.relations;
  for (auto ell : prime_divisors(n)) {
    if (splitting(F, ell) == Splitting::inert) continue;
    for (int i = 0; i < k; ++i)
      if (C.base[i].ell == ell) {
        IMat grown(sub.rows() + 1, k);
        grown << sub, IMat::Zero(1, k);
        grown(sub.rows(), i) = 1;
        sub = grown;
      }
  }
  return quotient_structure(sub, k).order();
}

std::optional<QuadElement> principal_generator(const QuadField& F, const std::vector<PrimeIdeal>& P,
                                               const std::vector<int>& e, std::int64_t bound) {
  Integer T(1);
  for (std::size_t i = 0; i < P.size(); ++i) {
    int deg = P[i].kind == Splitting::inert ? 2 : 1;
    for (int j = 0; j < e[i] * deg; ++j) T *= P[i].ell;
  }
  auto matches = [&](const QuadElement& a) {
    for (std::size_t i = 0; i < P.size(); ++i)
      if (valuation(F, a, P[i]) != e[i]) return false;
    return true;
  };
  for (std::int64_t y = 0; y <= bound; ++y)
    for (int s : {1, -1}) {
      Integer disc = Integer(F.f) * y * y + 4 * s * T, r;
      if (!is_square(disc, r)) continue;
      for (int sg : {1, -1}) {
        Integer num = -Integer(F.t) * y + sg * r;
        if (num % 2 != 0) continue;
        QuadElement a = quad(Rational(num / 2), Rational(y));
        if (norm(F, a) == 0) continue;
        if (matches(a)) return a;
        QuadElement c = conj(F, a);
        if (matches(c)) return c;
      }
    }
  return std::nullopt;
}

Real log_abs_at(const QuadField& F, const SUnitData& S, const QuadElement& x, int j) {
  if (j == 0) return bmp::log(bmp::abs(to_real(F, x)));
  const PrimeIdeal& P = S.lambda[j - 1];
  return -Real(valuation(F, x, P)) * bmp::log(Real(P.ell));
}

Real regulator_sign_det(const QuadField& F, const SUnitData& S) {
  const int k = static_cast<int>(S.u.size());
  Mat<Real> M(k, k);
  for (int i = 0; i < k; ++i) {
    QuadElement x = minus_tau(F, S.u[i]);
    for (int j = 0; j < k; ++j) M(i, j) = log_abs_at(F, S, x, j);
  }
  return M.partialPivLu().determinant();
}

SUnitData minus_unit_basis(const QuadField& F, std::int64_t n) {
  if (n < 1 || !is_squarefree(n) || gcd64(n, F.f) != 1)
    throw std::invalid_argument("minus_unit_basis: n must be squarefree and prime to the conductor");
  SUnitData S;
  S.n = n;
  auto ps = prime_divisors(n);
  for (auto ell : ps) (splitting(F, ell) == Splitting::split ? S.nplus : S.nminus).push_back(ell);
  for (auto ell : S.nplus) S.lambda.push_back(fixed_prime(F, ell));
  S.eps = fundamental_unit(F);
  ClassGroup C = class_group(F, ps);
  S.h = C.h;
  S.hn = n_class_number(F, C, n);
  const int nu = S.nu_plus();
  S.u.push_back(S.eps);
  if (nu > 0) {
    // kernel of Z^nu -> Cl, lambda_i |-> [lambda_i]
    std::vector<int> finite;
    for (int j = 0; j < C.pres.size(); ++j)
      if (C.pres.moduli[j] != 0) finite.push_back(j);
    const int kk = C.pres.size();
    IMat A = IMat::Zero(nu + static_cast<int>(finite.size()), kk);
    for (int i = 0; i < nu; ++i) A.row(i) = C.class_of(S.lambda[i]).transpose();
    for (std::size_t j = 0; j < finite.size(); ++j) A(nu + j, finite[j]) = C.pres.moduli[finite[j]];
    IMat Kr = left_kernel(A);
    IMat basis = hnf_basis(IMat(Kr.leftCols(nu)));
    for (int r = 0; r < basis.rows(); ++r) {
      std::vector<PrimeIdeal> P;
      std::vector<int> e;
      for (int i = 0; i < nu; ++i) {
        int c = static_cast<int>(to_i64(basis(r, i)));
        if (c > 0) {
          P.push_back(S.lambda[i]);
          e.push_back(c);
        } else if (c < 0) {
          P.push_back(conjugate_prime(F, S.lambda[i]));
          e.push_back(-c);
        }
      }
      std::optional<QuadElement> g;
      for (std::int64_t bound = 1 << 12; !g && bound <= (std::int64_t(1) << 24); bound *= 4)
        g = principal_generator(F, P, e, bound);
      if (!g) throw std::runtime_error("minus_unit_basis: norm-equation search bound exceeded");
      S.u.push_back(*g);
    }
  }
  {
    PrecisionGuard g(128);
    if (regulator_sign_det(F, S) < 0) S.u[0] = inv(F, S.u[0]);
  }
  return S;
}

}  // namespace starkit
