#include "starkit/cyclotomic.hpp"

#include "starkit/groupring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace starkit {

namespace {

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / gcd64(a, b) * b; }

// x^o - 1 = prod_{d | o} Phi_d
std::vector<Rational> cyclotomic_poly(std::int64_t o) {
  std::vector<Rational> p(o + 1, Rational(0));
  p[0] = -1;
  p[o] = 1;
  for (auto d : divisors(o)) {
    if (d == o) continue;
    auto q = cyclotomic_poly(d);
    // exact division p / q, q monic
    std::vector<Rational> quot(p.size() - q.size() + 1, Rational(0));
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
      Rational c = p[i + q.size() - 1];
      quot[i] = c;
      for (std::size_t j = 0; j < q.size(); ++j) p[i + j] -= c * q[j];
    }
    p = quot;
  }
  return p;
}

std::vector<std::pair<std::int64_t, int>> factor_integer(Integer n) {
  if (n < 0) n = -n;
  std::vector<std::pair<std::int64_t, int>> out;
  // trial division first so that powers of small primes stay cheap
  for (std::int64_t p = 2; p < 1000 && n > 1; ++p) {
    if (!is_prime(p)) continue;
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k) out.push_back({p, k});
  }
  if (n == 1) return out;
  if (n > Integer(std::numeric_limits<std::int64_t>::max())) throw std::overflow_error("scalar too large to factor");
  for (auto& pk : factor(to_i64(n))) out.push_back(pk);
  return out;
}

}  // namespace

UnitGroup unit_group(std::int64_t M) {
  UnitGroup U;
  U.M = M;
  for (auto& [p, k] : factor(M)) {
    std::int64_t pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    std::int64_t rest = M / pk;
    auto lift = [&](std::int64_t g) { return rest == 1 ? mod(g, pk) : crt({mod(g, pk), 1}, {pk, rest}); };
    if (p == 2) {
      if (k >= 2) {
        U.gens.push_back(lift(-1));
        U.orders.push_back(2);
      }
      if (k >= 3) {
        U.gens.push_back(lift(5));
        U.orders.push_back(pk / 4);
      }
    } else {
      std::int64_t g = primitive_root(p);
      if (k >= 2 && powmod(g, p - 1, p * p) == 1) g += p;
      U.gens.push_back(lift(g));
      U.orders.push_back(pk / p * (p - 1));
    }
  }
  for (auto o : U.orders) U.exponent = lcm64(U.exponent, o);
  U.index.assign(M, -1);
  const int r = static_cast<int>(U.gens.size());
  std::vector<int> e(r, 0);
  std::vector<std::pair<std::int64_t, std::vector<int>>> all;
  while (true) {
    std::int64_t v = 1 % M;
    for (int i = 0; i < r; ++i) v = mulmod(v, powmod(U.gens[i], e[i], M), M);
    all.push_back({v, e});
    int i = r - 1;
    while (i >= 0 && ++e[i] == U.orders[i]) e[i--] = 0;
    if (i < 0) break;
  }
  std::sort(all.begin(), all.end());
  for (auto& [v, ex] : all) {
    U.index[v] = static_cast<int>(U.elements.size());
    U.elements.push_back(v);
    U.exps.push_back(ex);
  }
  return U;
}

std::int64_t DirichletChar::value(std::int64_t a) const {
  const auto& e = U->log(a);
  std::int64_t E = U->exponent, v = 0;
  for (std::size_t i = 0; i < k.size(); ++i) v = mod(v + k[i] * e[i] % E * (E / U->orders[i]), E);
  return v / (E / order);
}

std::int64_t DirichletChar::conductor() const {
  const std::int64_t M = U->M;
  if (M <= 2) return 1;
  for (auto f : divisors(M)) {
    bool trivial = true;
    for (std::int64_t a = 1; trivial && a < M; a += f)
      if (gcd64(a, M) == 1 && value(a) != 0) trivial = false;
    if (trivial) return f;
  }
  return M;
}

std::vector<DirichletChar> all_characters(const UnitGroup& U) {
  std::vector<DirichletChar> out;
  const int r = static_cast<int>(U.orders.size());
  std::vector<std::int64_t> k(r, 0);
  while (true) {
    DirichletChar c;
    c.U = &U;
    c.k = k;
    c.order = 1;
    for (int i = 0; i < r; ++i) c.order = lcm64(c.order, U.orders[i] / gcd64(k[i], U.orders[i]));
    out.push_back(c);
    int i = r - 1;
    while (i >= 0 && ++k[i] == U.orders[i]) k[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

namespace {

void normalize(MultElement& x) {
  for (auto it = x.terms.begin(); it != x.terms.end();)
    if (it->second == 0)
      it = x.terms.erase(it);
    else
      ++it;
}

}  // namespace

MultElement symbol(std::int64_t N, std::int64_t a, const Integer& e) {
  MultElement x;
  x.level = N;
  a = mod(a, N);
  if (a == 0) throw std::invalid_argument("symbol: a = 0 mod N");
  x.terms[a] = e;
  normalize(x);
  return x;
}

MultElement scalar_element(std::int64_t N, const Rational& q) {
  MultElement x;
  x.level = N;
  x.scalar = q;
  return x;
}

MultElement inflate(const MultElement& x, std::int64_t M) {
  if (M % x.level != 0) throw std::invalid_argument("inflate: level must divide M");
  MultElement y;
  y.level = M;
  y.scalar = x.scalar;
  std::int64_t s = M / x.level;
  for (auto& [a, e] : x.terms) y.terms[a * s] = e;
  return y;
}

MultElement mul(const MultElement& x, const MultElement& y) {
  if (x.level != y.level) {
    std::int64_t M = lcm64(x.level, y.level);
    return mul(inflate(x, M), inflate(y, M));
  }
  MultElement z = x;
  z.scalar *= y.scalar;
  for (auto& [a, e] : y.terms) z.terms[a] += e;
  normalize(z);
  return z;
}

MultElement pow(const MultElement& x, const Integer& e) {
  MultElement z;
  z.level = x.level;
  if (e == 0) return z;
  Integer E = e < 0 ? Integer(-e) : e;
  Rational s = x.scalar;
  z.scalar = Rational(bmp::pow(numerator(s), E.convert_to<unsigned>()), bmp::pow(denominator(s), E.convert_to<unsigned>()));
  if (e < 0) z.scalar = 1 / z.scalar;
  for (auto& [a, ex] : x.terms) z.terms[a] = ex * e;
  normalize(z);
  return z;
}

MultElement inv(const MultElement& x) { return pow(x, Integer(-1)); }

MultElement divide(const MultElement& x, const MultElement& y) { return mul(x, inv(y)); }

MultElement galois_act(std::int64_t t, const MultElement& x) {
  if (gcd64(t, x.level) != 1) throw std::invalid_argument("galois_act: t must be prime to the level");
  MultElement z;
  z.level = x.level;
  z.scalar = x.scalar;
  for (auto& [a, e] : x.terms) z.terms[mod(mulmod(a, mod(t, x.level), x.level), x.level)] += e;
  normalize(z);
  return z;
}

MultElement norm_over(const MultElement& x, const std::vector<std::int64_t>& H) {
  MultElement z = scalar_element(x.level, Rational(1));
  for (auto h : H) z = mul(z, galois_act(h, x));
  return z;
}

MultElement delta_T(const MultElement& x, const std::vector<std::int64_t>& T) {
  MultElement z = x;
  for (auto t : T) {
    if (gcd64(t, x.level) != 1) throw std::invalid_argument("delta_T: t divides the level");
    MultElement fr = galois_act(invmod(mod(t, z.level), z.level), z);
    z = mul(z, pow(fr, Integer(-t)));
  }
  return z;
}

bool operator==(const MultElement& x, const MultElement& y) {
  return x.level == y.level && x.terms == y.terms && x.scalar == y.scalar;
}

Real log_abs(const MultElement& x, std::int64_t b) {
  Real pi = pi_real();
  Real s = bmp::log(bmp::abs(Real(numerator(x.scalar)) / Real(denominator(x.scalar))));
  for (auto& [a, e] : x.terms) {
    std::int64_t c = mod(mulmod(a, mod(b, x.level), x.level), x.level);
    s += Real(e) * bmp::log(2 * bmp::sin(pi * Real(c) / Real(x.level)));
  }
  return s;
}

Cx embed(const MultElement& x, std::int64_t b) {
  Real pi = pi_real();
  Real logmod = log_abs(x, b), arg = x.scalar < 0 ? pi : Real(0);
  for (auto& [a, e] : x.terms) {
    std::int64_t c = mod(mulmod(a, mod(b, x.level), x.level), x.level);
    arg += Real(e) * (pi * Real(c) / Real(x.level) - pi / 2);
  }
  Real r = bmp::exp(logmod);
  return Cx(r * bmp::cos(arg), r * bmp::sin(arg));
}

std::int64_t reduce_mod(const MultElement& x, std::int64_t q, std::int64_t r) {
  Integer num = mod(numerator(x.scalar), Integer(q)), den = mod(denominator(x.scalar), Integer(q));
  if (num == 0 || den == 0) throw std::domain_error("reduce_mod: scalar not a unit at q");
  std::int64_t v = mulmod(to_i64(num), invmod(to_i64(den), q), q);
  for (auto& [a, e] : x.terms) {
    std::int64_t s = mod(1 - powmod(r, a, q), q);
    if (s == 0) throw std::domain_error("reduce_mod: symbol vanishes at q");
    std::int64_t ee = to_i64(mod(e, Integer(q - 1)));
    v = mulmod(v, powmod(s, ee, q), q);
  }
  return v;
}

std::int64_t root_of_unity_mod(std::int64_t N, std::int64_t q) {
  if ((q - 1) % N != 0) throw std::invalid_argument("root_of_unity_mod: need q = 1 mod N");
  return powmod(primitive_root(q), (q - 1) / N, q);
}

std::vector<std::int64_t> support_primes(const MultElement& x) {
  std::vector<std::int64_t> out;
  for (auto& [p, k] : factor_integer(numerator(x.scalar))) out.push_back(p);
  for (auto& [p, k] : factor_integer(denominator(x.scalar))) out.push_back(p);
  for (auto& [a, e] : x.terms) {
    std::int64_t N = x.level / gcd64(a, x.level);
    auto f = factor(N);
    if (f.size() == 1) out.push_back(f[0].first);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

InvariantMap::InvariantMap(std::int64_t M, const std::vector<std::int64_t>& restrict_to) : M_(M) {
  U_ = std::make_shared<UnitGroup>(unit_group(M));
  auto chars = all_characters(*U_);
  const int r = static_cast<int>(U_->orders.size());
  auto key = [&](const std::vector<std::int64_t>& k) {
    std::int64_t idx = 0;
    for (int i = 0; i < r; ++i) idx = idx * U_->orders[i] + k[i];
    return idx;
  };
  std::vector<char> seen(chars.size(), 0);
  for (auto& psi : chars) {
    if (seen[key(psi.k)]) continue;
    for (std::int64_t j = 1; j < std::max<std::int64_t>(psi.order, 2); ++j) {
      if (gcd64(j, psi.order) != 1) continue;
      std::vector<std::int64_t> kj(r);
      for (int i = 0; i < r; ++i) kj[i] = mod(psi.k[i] * j, U_->orders[i]);
      seen[key(kj)] = 1;
    }
    if (psi.order == 1 || !psi.is_even()) continue;
    bool trivial_on = true;
    for (auto h : restrict_to) trivial_on = trivial_on && psi.value(h) == 0;
    if (!trivial_on) continue;
    Block b;
    b.psi = psi;
    b.f = psi.conductor();
    b.offset = dim_;
    b.val_f.assign(b.f, -1);
    for (auto u : U_->elements) b.val_f[u % b.f] = psi.value(u);
    b.phi_poly = cyclotomic_poly(psi.order);
    const std::int64_t o = psi.order;
    for (auto N : divisors(M)) {
      if (N % b.f != 0) continue;
      std::vector<Rational> R(o, Rational(0));
      R[0] = 1;
      for (auto p : prime_divisors(N)) {
        if (b.f % p == 0) continue;
        std::int64_t vp = mod(-b.val_f[p % b.f], o);
        std::vector<Rational> S(o, Rational(0));
        for (std::int64_t i = 0; i < o; ++i) {
          S[i] += R[i];
          S[(i + vp) % o] -= R[i];
        }
        R = S;
      }
      Rational ph(euler_phi(N));
      for (auto& c : R) c /= ph;
      b.rho[N] = R;
    }
    dim_ += static_cast<int>(euler_phi(o));
    blocks_.push_back(std::move(b));
  }
}

std::vector<Rational> InvariantMap::reduce(std::vector<Rational> p, const Block& b) const {
  const int deg = static_cast<int>(b.phi_poly.size()) - 1;
  for (int i = static_cast<int>(p.size()) - 1; i >= deg; --i) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    for (int j = 0; j <= deg; ++j) p[i - deg + j] -= c * b.phi_poly[j];
  }
  p.resize(deg);
  return p;
}

std::map<std::int64_t, Rational> InvariantMap::trivial_part(const MultElement& x) const {
  std::map<std::int64_t, Rational> out;
  for (auto& [p, k] : factor_integer(numerator(x.scalar))) out[p] += k;
  for (auto& [p, k] : factor_integer(denominator(x.scalar))) out[p] -= k;
  for (auto& [a, e] : x.terms) {
    std::int64_t N = x.level / gcd64(a, x.level);
    auto f = factor(N);
    if (f.size() == 1) out[f[0].first] += Rational(e) / euler_phi(N);
  }
  for (auto it = out.begin(); it != out.end();)
    if (it->second == 0)
      it = out.erase(it);
    else
      ++it;
  return out;
}

QVec InvariantMap::char_part(const MultElement& x0) const {
  MultElement x = x0.level == M_ ? x0 : inflate(x0, M_);
  QVec out = QVec::Zero(dim_);
  // group the terms by the exact order of zeta^a
  std::map<std::int64_t, std::vector<std::pair<std::int64_t, Integer>>> by_order;
  for (auto& [a, e] : x.terms) {
    std::int64_t g = gcd64(a, M_);
    by_order[M_ / g].push_back({a / g, e});
  }
  for (auto& b : blocks_) {
    const std::int64_t o = b.psi.order;
    std::vector<Rational> acc(o, Rational(0));
    for (auto& [N, list] : by_order) {
      if (N % b.f != 0) continue;
      std::vector<Integer> E(o, Integer(0));
      for (auto& [ap, e] : list) E[b.val_f[ap % b.f]] += e;
      const auto& R = b.rho.at(N);
      for (std::int64_t i = 0; i < o; ++i) {
        if (E[i] == 0) continue;
        for (std::int64_t j = 0; j < o; ++j)
          if (R[j] != 0) acc[(i + j) % o] += Rational(E[i]) * R[j];
      }
    }
    auto red = reduce(acc, b);
    for (std::size_t i = 0; i < red.size(); ++i) out(b.offset + i) = red[i];
  }
  return out;
}

bool InvariantMap::is_torsion(const MultElement& x) const {
  return trivial_part(x).empty() && is_zero(clear_denominators(QMat(char_part(x).transpose())).row(0).transpose());
}

QVec InvariantMap::act(std::int64_t t, const QVec& v) const {
  QVec out = QVec::Zero(dim_);
  for (auto& b : blocks_) {
    const std::int64_t o = b.psi.order;
    const int deg = static_cast<int>(b.phi_poly.size()) - 1;
    std::int64_t s = b.psi.value(t);
    std::vector<Rational> p(o + deg, Rational(0));
    for (int i = 0; i < deg; ++i) p[(i + s) % o] += v(b.offset + i);
    auto red = reduce(p, b);
    for (int i = 0; i < deg; ++i) out(b.offset + i) = red[i];
  }
  return out;
}

bool equal_mod_torsion(const MultElement& x, const MultElement& y, const InvariantMap& inv) {
  return inv.is_torsion(divide(x, y));
}

CycloLattice::CycloLattice(const InvariantMap& inv, const std::vector<MultElement>& gens,
                           const std::vector<std::int64_t>& primes)
    : inv_(&inv), primes_(primes) {
  const int k = static_cast<int>(gens.size());
  const int np = static_cast<int>(primes.size());
  const int c = np + inv.char_dim();
  QMat V = QMat::Zero(k, c);
  for (int i = 0; i < k; ++i) {
    auto tp = inv.trivial_part(gens[i]);
    for (auto& [p, val] : tp) {
      auto it = std::find(primes.begin(), primes.end(), p);
      if (it == primes.end()) throw std::invalid_argument("CycloLattice: generator supported outside the prime set");
      V(i, it - primes.begin()) = val;
    }
    V.row(i).tail(inv.char_dim()) = inv.char_part(gens[i]).transpose();
  }
  scale_ = 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < c; ++j) {
      Integer d = denominator(V(i, j));
      scale_ = scale_ / gcd(scale_, d) * d;
    }
  IMat Vi(k, c);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < c; ++j) Vi(i, j) = numerator(V(i, j) * scale_);
  auto h = hnf(Vi);
  basis_ = h.H.topRows(h.rank);
  in_gens_ = h.U.topRows(h.rank);
}

std::optional<IVec> CycloLattice::vector_of(const MultElement& x) const {
  const int np = static_cast<int>(primes_.size());
  QVec v = QVec::Zero(np + inv_->char_dim());
  for (auto& [p, val] : inv_->trivial_part(x)) {
    auto it = std::find(primes_.begin(), primes_.end(), p);
    if (it == primes_.end()) return std::nullopt;
    v(it - primes_.begin()) = val;
  }
  v.tail(inv_->char_dim()) = inv_->char_part(x);
  v *= Rational(scale_);
  if (!is_integral(v)) return std::nullopt;
  return to_integer_vec(v);
}

std::optional<IVec> CycloLattice::coords_of_vector(const IVec& v) const { return echelon_coords(basis_, v); }

std::optional<IVec> CycloLattice::coords(const MultElement& x) const {
  auto v = vector_of(x);
  if (!v) return std::nullopt;
  return coords_of_vector(*v);
}

IMat CycloLattice::action(std::int64_t t) const {
  const int np = static_cast<int>(primes_.size());
  IMat A(rank(), rank());
  for (int i = 0; i < rank(); ++i) {
    QVec v = to_rational(IVec(basis_.row(i).transpose()));
    QVec w = v;
    w.tail(inv_->char_dim()) = inv_->act(t, QVec(v.tail(inv_->char_dim())));
    if (!is_integral(w)) throw std::logic_error("CycloLattice::action: lattice not Galois stable");
    auto c = coords_of_vector(to_integer_vec(w));
    if (!c) throw std::logic_error("CycloLattice::action: lattice not Galois stable");
    A.row(i) = c->transpose();
    (void)np;
  }
  return A;
}

}  // namespace starkit
