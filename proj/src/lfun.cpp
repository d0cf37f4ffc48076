#include "starkit/lfun.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace starkit {

namespace {

// log Gamma(a/f) for a = 0..f, cached per conductor at the current precision
const std::vector<Real>& log_gamma_table(std::int64_t f) {
  static std::map<std::pair<std::int64_t, unsigned>, std::vector<Real>> cache;
  auto key = std::make_pair(f, current_precision_bits());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Real> t(f + 1);
  for (std::int64_t a = 1; a <= f; ++a) t[a] = log_gamma(Real(a) / Real(f));
  return cache.emplace(key, std::move(t)).first->second;
}

// values of the primitive character on residues mod its conductor, as exponents
std::vector<std::int64_t> primitive_table(const DirichletChar& chi, std::int64_t f) {
  std::vector<std::int64_t> t(f, -1);
  for (auto u : chi.U->elements) t[u % f] = chi.value(u);
  if (f == 1) t[0] = 0;
  return t;
}

Cx zeta_pow(std::int64_t v, std::int64_t o) { return root_of_unity(v, o); }

}  // namespace

std::vector<std::int64_t> generated_subgroup(std::int64_t N, const std::vector<std::int64_t>& gens) {
  std::vector<std::int64_t> H{1 % N};
  std::vector<char> in(N, 0);
  in[1 % N] = 1;
  for (std::size_t i = 0; i < H.size(); ++i)
    for (auto g : gens) {
      std::int64_t x = mulmod(H[i], mod(g, N), N);
      if (!in[x]) {
        in[x] = 1;
        H.push_back(x);
      }
    }
  std::sort(H.begin(), H.end());
  return H;
}

AbelianField abelian_field(std::int64_t N, const std::vector<std::int64_t>& H) {
  AbelianField L;
  L.N = N;
  L.U = std::make_shared<UnitGroup>(unit_group(N));
  L.H = generated_subgroup(N, H);
  L.coset.assign(N, -1);
  for (auto a : L.U->elements) {
    if (L.coset[a] != -1) continue;
    int c = static_cast<int>(L.reps.size());
    L.reps.push_back(a);
    for (auto h : L.H) L.coset[mulmod(a, h, N)] = c;
  }
  for (auto& chi : all_characters(*L.U)) {
    bool ok = true;
    for (auto h : L.H) ok = ok && chi.value(h) == 0;
    if (ok) L.chars.push_back(chi);
  }
  return L;
}

Cx char_value(const DirichletChar& chi, std::int64_t a) { return zeta_pow(chi.value(a), chi.order); }

Cx primitive_value(const DirichletChar& chi, std::int64_t a) {
  std::int64_t f = chi.conductor();
  if (gcd64(a, f) != 1) return Cx(0);
  auto t = primitive_table(chi, f);
  return zeta_pow(t[mod(a, f)], chi.order);
}

int vanishing_order(const DirichletChar& chi, const std::vector<std::int64_t>& S) {
  if (chi.order == 1) return static_cast<int>(S.size());
  std::int64_t f = chi.conductor();
  auto t = primitive_table(chi, f);
  int r = chi.is_even() ? 1 : 0;
  for (auto p : S)
    if (f % p != 0 && t[p % f] == 0) ++r;
  return r;
}

Cx L_leading(const DirichletChar& chi, const std::vector<std::int64_t>& S, const std::vector<std::int64_t>& T) {
  const std::int64_t f = chi.conductor(), o = chi.order;
  auto t = primitive_table(chi, f);
  Cx lead(1);
  if (o == 1) {
    lead = Cx(Real(-1) / 2);
  } else if (chi.is_even()) {
    const auto& lg = log_gamma_table(f);
    Cx s(0);
    for (std::int64_t a = 1; a < f; ++a)
      if (t[a] >= 0) s += zeta_pow(t[a], o) * Cx(lg[a]);
    lead = s;
  } else {
    Cx s(0);
    for (std::int64_t a = 1; a < f; ++a)
      if (t[a] >= 0) s += zeta_pow(t[a], o) * Cx(Real(a));
    lead = s * Cx(Real(-1) / Real(f));
  }
  for (auto p : S) {
    if (f % p == 0) continue;
    if (t[p % f] == 0)
      lead *= Cx(bmp::log(Real(p)));
    else
      lead *= Cx(1) - zeta_pow(t[p % f], o);
  }
  for (auto q : T) {
    if (f % q == 0) throw std::invalid_argument("L_leading: T meets the conductor");
    lead *= Cx(1) - zeta_pow(t[q % f], o) * Cx(Real(q));
  }
  return lead;
}

std::vector<Cx> from_components(const AbelianField& L, const Components& c) {
  const int n = L.size();
  std::vector<Cx> x(n);
  for (int s = 0; s < n; ++s) {
    Cx acc(0);
    for (std::size_t k = 0; k < L.chars.size(); ++k) acc += c[k] * conj(char_value(L.chars[k], L.reps[s]));
    x[s] = acc * Cx(Real(1) / Real(n));
  }
  return x;
}

Components to_components(const AbelianField& L, const std::vector<Cx>& x) {
  Components c(L.chars.size());
  for (std::size_t k = 0; k < L.chars.size(); ++k) {
    Cx acc(0);
    for (int s = 0; s < L.size(); ++s) acc += x[s] * char_value(L.chars[k], L.reps[s]);
    c[k] = acc;
  }
  return c;
}

Components theta_components(const AbelianField& L, const std::vector<std::int64_t>& S,
                            const std::vector<std::int64_t>& T, int r) {
  Components c(L.chars.size());
  for (std::size_t k = 0; k < L.chars.size(); ++k) {
    // chi^{-1}
    DirichletChar inv = L.chars[k];
    for (std::size_t i = 0; i < inv.k.size(); ++i) inv.k[i] = mod(-inv.k[i], L.U->orders[i]);
    int rc = vanishing_order(inv, S);
    if (rc < r) throw std::invalid_argument("theta_components: r exceeds a vanishing order");
    c[k] = rc == r ? L_leading(inv, S, T) : Cx(0);
  }
  return c;
}

Components regulator_rank1(const AbelianField& L, const MultElement& u) {
  const int n = L.size();
  if (L.N % u.level != 0) throw std::invalid_argument("regulator_rank1: level mismatch");
  MultElement v = u.level == L.N ? u : inflate(u, L.N);
  std::vector<Cx> x(n);
  // coefficient of sigma^{-1} is -log|sigma u|
  for (int s = 0; s < n; ++s) {
    std::int64_t sinv = invmod(L.reps[s], L.N);
    x[L.coset_of(sinv)] = Cx(-log_abs(v, L.reps[s]));
  }
  return to_components(L, x);
}

LemmaComputeValues lemma_compute(const QuadField& F, const SUnitData& S) {
  // units: primes dividing n, then u_0..u_nu
  std::vector<QuadElement> units;
  std::vector<std::int64_t> ps = prime_divisors(S.n);
  for (auto p : ps) units.push_back(quad(Rational(p)));
  for (auto& u : S.u) units.push_back(u);
  // places: lambda_0, lambda_0^tau, lambda_i, lambda_i^tau, lambda'_j
  struct Place {
    int kind;  // 0 real, 1 real conjugate, 2 finite
    PrimeIdeal P;
    int deg;
  };
  std::vector<Place> places{{0, {}, 1}, {1, {}, 1}};
  for (auto& lam : S.lambda) {
    places.push_back({2, lam, 1});
    places.push_back({2, conjugate_prime(F, lam), 1});
  }
  for (auto ell : S.nminus) places.push_back({2, fixed_prime(F, ell), 2});
  auto logabs = [&](const QuadElement& x, const Place& v) -> Real {
    if (v.kind == 0) return bmp::log(bmp::abs(to_real(F, x)));
    if (v.kind == 1) return bmp::log(bmp::abs(to_real(F, conj(F, x))));
    return -Real(v.deg * valuation(F, x, v.P)) * bmp::log(Real(v.P.ell));
  };
  const int k = static_cast<int>(units.size());
  if (static_cast<int>(places.size()) != k + 1) throw std::logic_error("lemma_compute: place count mismatch");
  Mat<Real> A(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) A(i, j) = logabs(units[i], places[j]);
  LemmaComputeValues out;
  out.R_Ln = bmp::abs(A.partialPivLu().determinant());
  out.R_Qn = 1;
  for (auto p : ps) out.R_Qn *= bmp::log(Real(p));
  // chi-component of R_V: entries -log|u|_w - chi(tau) log|tau u|_w with chi(tau) = -1
  const int nu = S.nu_plus();
  Mat<Real> B(nu + 1, nu + 1);
  for (int i = 0; i <= nu; ++i)
    for (int j = 0; j <= nu; ++j) {
      Place w = j == 0 ? places[0] : Place{2, S.lambda[j - 1], 1};
      B(i, j) = -logabs(S.u[i], w) + logabs(conj(F, S.u[i]), w);
    }
  out.RV_chi = nu + 1 > 0 ? B.partialPivLu().determinant() : Real(1);
  out.lhs = out.R_Ln;
  Real sign = (nu + 1) % 2 == 0 ? Real(1) : Real(-1);
  out.rhs = sign * bmp::pow(Real(2), S.nu_minus() - 1) * out.R_Qn * out.RV_chi;
  return out;
}

}  // namespace starkit
