#include <doctest.h>

#include "starkit/cyclotomic.hpp"

#include <random>

using namespace starkit;

namespace {

std::vector<std::int64_t> units_mod(std::int64_t N) {
  std::vector<std::int64_t> out;
  for (std::int64_t a = 1; a < N; ++a)
    if (gcd64(a, N) == 1) out.push_back(a);
  return out;
}

// prod_j (1 - zeta_N^{a + jN/p}) / (1 - zeta_{N/p}^a), a torsion element
MultElement distribution_relation(std::int64_t N, std::int64_t p, std::int64_t a) {
  MultElement x = scalar_element(N, Rational(1));
  for (std::int64_t j = 0; j < p; ++j) x = mul(x, symbol(N, a + j * (N / p)));
  return divide(x, symbol(N, a * p));
}

Real max_log(const MultElement& x) {
  Real m = 0;
  for (auto b : units_mod(x.level)) m = std::max(m, Real(bmp::abs(log_abs(x, b))));
  return m;
}

}  // namespace

TEST_CASE("unit groups and characters") {
  for (std::int64_t M : {1, 2, 4, 8, 9, 15, 40, 63}) {
    auto U = unit_group(M);
    CHECK(U.size() == euler_phi(M));
    auto chars = all_characters(U);
    CHECK(static_cast<std::int64_t>(chars.size()) == euler_phi(M));
    for (auto& c : chars)
      for (auto a : U.elements)
        for (auto b : U.elements) CHECK(mod(c.value(a) + c.value(b) - c.value(mulmod(a, b, M)), c.order) == 0);
  }
  auto U = unit_group(20);
  int cond5 = 0;
  for (auto& c : all_characters(U))
    if (c.conductor() == 5) ++cond5;
  CHECK(cond5 == 3);
}

TEST_CASE("cyclotomic numbers: norms, embeddings, reductions") {
  PrecisionGuard g(128);
  for (std::int64_t ell : {3, 5, 7, 11}) {
    auto N = norm_over(symbol(ell, 1), units_mod(ell));
    InvariantMap inv(ell);
    CHECK(equal_mod_torsion(N, scalar_element(ell, Rational(ell)), inv));
    CHECK(bmp::abs(embed(N).re - ell) < Real(1e-30));
  }
  Cx z = embed(symbol(4, 1));
  CHECK(bmp::abs(z.re - 1) < Real(1e-30));
  CHECK(bmp::abs(z.im + 1) < Real(1e-30));
  CHECK(reduce_mod(symbol(5, 1), 11, 4) == 8);
  CHECK(reduce_mod(scalar_element(7, Rational(1)), 29, root_of_unity_mod(7, 29)) == 1);
  // multiplicativity
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> ai(1, 59), ei(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    MultElement x = symbol(60, ai(rng), ei(rng)), y = symbol(60, ai(rng), ei(rng));
    x = mul(x, symbol(60, ai(rng), ei(rng)));
    Cx p = embed(x) * embed(y), q = embed(mul(x, y));
    CHECK(abs(p - q) < Real(1e-30));
    std::int64_t q0 = 61, r = root_of_unity_mod(60, q0);
    CHECK(mulmod(reduce_mod(x, q0, r), reduce_mod(y, q0, r), q0) == reduce_mod(mul(x, y), q0, r));
  }
}

TEST_CASE("distribution relation as a norm identity") {
  // N_{Q(mu_{lp})/Q(mu_p)} (1 - zeta_{lp}) = (1 - zeta_p)^{1 - Fr_l^{-1}}
  for (auto [ell, p] : std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 5}, {7, 11}, {2, 9}, {11, 7}}) {
    std::int64_t N = ell * p;
    std::vector<std::int64_t> H;
    for (auto a : units_mod(N))
      if (a % p == 1 % p) H.push_back(a);
    auto lhs = norm_over(symbol(N, 1), H);
    auto base = inflate(symbol(p, 1), N);
    auto rhs = divide(base, galois_act(0 + crt({invmod(ell % p, p), 1}, {p, ell}), base));
    InvariantMap inv(N);
    CHECK(equal_mod_torsion(lhs, rhs, inv));
    CHECK(!equal_mod_torsion(lhs, base, inv));
  }
}

TEST_CASE("torsion detection agrees with archimedean absolute values") {
  PrecisionGuard g(128);
  std::mt19937_64 rng(17);
  for (std::int64_t M : {12, 36, 60, 105}) {
    InvariantMap inv(M);
    auto ps = prime_divisors(M);
    std::uniform_int_distribution<std::int64_t> ai(1, M - 1);
    std::uniform_int_distribution<int> pi(0, static_cast<int>(ps.size()) - 1), ei(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
      MultElement x = scalar_element(M, Rational(1));
      for (int k = 0; k < 4; ++k) {
        std::int64_t a = ai(rng);
        x = mul(x, pow(divide(symbol(M, a), symbol(M, -a)), Integer(ei(rng))));
        std::int64_t p = ps[pi(rng)];
        std::int64_t b = ai(rng) % (M / p);
        if (b == 0) b = 1;
        x = mul(x, pow(distribution_relation(M, p, b), Integer(ei(rng))));
      }
      CHECK(inv.is_torsion(x));
      CHECK(max_log(x) < Real(1e-30));
      auto y = mul(x, symbol(M, ai(rng)));
      bool tor = inv.is_torsion(y);
      CHECK(tor == (max_log(y) < Real(1e-30) && inv.trivial_part(y).empty()));
    }
  }
}

TEST_CASE("character invariants are Galois equivariant and lattices are stable") {
  InvariantMap inv(11);
  std::vector<MultElement> gens;
  for (std::int64_t a = 1; a < 11; ++a) gens.push_back(symbol(11, a));
  CycloLattice L(inv, gens, {11});
  CHECK(L.rank() == 5);
  auto x = mul(symbol(11, 2, Integer(3)), symbol(11, 5, Integer(-1)));
  auto c = L.coords(x);
  REQUIRE(c);
  for (std::int64_t t = 1; t < 11; ++t) {
    auto ct = L.coords(galois_act(t, x));
    REQUIRE(ct);
    CHECK(*ct == IVec((c->transpose() * L.action(t)).transpose()));
  }
  CHECK(!L.coords(symbol(7, 1)).has_value());
  // real subfield restriction: units of Q(mu_11)^+ only see characters trivial on -1
  InvariantMap plus(11, {10});
  CHECK(plus.char_dim() == inv.char_dim());
}
