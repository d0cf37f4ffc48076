#pragma once

#include "starkit/lfun.hpp"
#include "starkit/stark.hpp"

#include <string>
#include <vector>

namespace starkit {

// (g - 1) D_g = ord(g) - N_<g> for every generator of every cyclic group of
// order ell - 1, ell prime up to bound
bool check_kolyvagin_telescoping(std::int64_t bound);

// G_n = Gal(F(mu_n)/F) = prod_{ell | n} (Z/ell)^x, one cyclic factor per odd
// prime, generated by gamma_ell. Lifts to (Z/nf)^x are 1 mod f.
struct GnGroup {
  std::int64_t n = 1, f = 1, N = 1;
  std::vector<std::int64_t> ells;    // odd primes dividing n, ascending
  std::vector<std::int64_t> gammas;  // chosen generators mod ell
  GroupPtr G;
  std::int64_t residue(int g) const;  // element of (Z/n)^x
  std::int64_t lift(int g) const;     // element of (Z/N)^x, 1 mod f
  int factor_of(std::int64_t ell) const;  // -1 when ell is not a factor
};

GnGroup make_gn(std::int64_t n, std::int64_t f, const std::vector<std::int64_t>& gammas = {});

struct DarmonCase {
  std::int64_t D = 5, n = 1;
  QuadField F;
  SUnitData S;
  GnGroup Gn;
  std::int64_t N = 1;
  std::int64_t m = 1;  // odd part of gcd(ell - 1 : ell | n_+), 1 when n_+ = 1
  int nu_plus() const { return S.nu_plus(); }
  int nu_minus() const { return S.nu_minus(); }
  bool degenerate() const { return nu_plus() == 0; }
};

// n squarefree, prime to D, every prime of n split or inert in F
DarmonCase make_darmon_case(std::int64_t D, std::int64_t n, const std::vector<std::int64_t>& gammas = {});

// beta_n = N_{Q(mu_nf)/F(mu_n)}(1 - zeta_nf) and alpha_n = (1 - tau) beta_n
MultElement beta_n(const QuadField& F, std::int64_t n);
MultElement alpha_n(const QuadField& F, std::int64_t n);
// Galois element of Q(mu_nf) acting as complex conjugation on F and trivially on mu_n
std::int64_t tau_lift(const QuadField& F, std::int64_t n);

// N_{G_-} D_{n_+} applied to x in F(mu_n)
MultElement kolyvagin_class(const DarmonCase& c, const MultElement& x);

// Exponents rho_j with R_n = prod x_j^{rho_j} (x_j = (1 - tau) u_j) on the
// new component of Q^{nu_+}, and the reciprocity table behind them.
struct RegulatorData {
  std::vector<QuadElement> x;
  std::vector<Integer> rho;
  // rec[i][j][k]: exponent of gamma_{ell_k} in rec_{lambda_i}(x_j)
  std::vector<std::vector<std::vector<std::int64_t>>> rec;
};
RegulatorData regulator_Rn(const DarmonCase& c, std::int64_t h_shift = 0);

struct PowerTest {
  bool pass = true;
  int primes_used = 0;
  std::vector<std::int64_t> primes;
  std::int64_t first_failure = 0;
};

// Is kappa / prod y_j^{e_j} an m-th power? Reductions at the first `trials`
// primes q = 1 mod lcm(N, m). Each prime checks one embedding, zeta_N |-> r^b
// with b cycling through `embeddings` (default b = 1).
PowerTest mth_power_test(const QuadField& F, const MultElement& kappa, const std::vector<QuadElement>& y,
                         const std::vector<Integer>& e, std::int64_t m, int trials,
                         const std::vector<std::int64_t>& embeddings = {});

struct MrthmCheck {
  bool degenerate = false;  // nu_+ = 0 or m = 1: the power test is vacuous
  std::int64_t m = 1;
  bool valuation_ok = false;
  PowerTest test;
  bool pass = false;
  // archimedean check when nu_+ = 0
  Real log_kappa, log_rhs, arch_error;
  std::vector<Integer> rho;
};

MrthmCheck verify_mrthm(const DarmonCase& c, int trials, std::int64_t h_shift = 0, const Real& tol = Real("1e-8"));

// Tate family: sets T with sum a_T delta_T = 2 in Z[G_{L'}], L' = F(mu_n)^+.
// The search returns singletons {ell} with ell split completely in L'.
struct TFamily {
  std::vector<std::vector<std::int64_t>> T;
  std::vector<Integer> a;
  bool certified = false;
};
TFamily find_t_family(const AbelianField& L, const std::vector<std::int64_t>& S, std::int64_t bound = 10000);
TFamily find_t_family(const DarmonCase& c, std::int64_t bound = 10000);
// sum a_T delta_T = 2 in Z[G_L], S and T disjoint, T torsion free
bool certify_t_family(const AbelianField& L, const std::vector<std::int64_t>& S, const TFamily& fam);
// solve for the a_T of a given list of sets; certified = false when none exist
TFamily solve_t_family(const AbelianField& L, const std::vector<std::int64_t>& S,
                       const std::vector<std::vector<std::int64_t>>& T);
AbelianField plus_field(const DarmonCase& c);

// (1 - tau) prod_T eps'_T^{a_T} = N_{L(mu_n)/L'} alpha_n modulo torsion
bool verify_tlem_i(const DarmonCase& c, const TFamily& fam);

struct TlemII {
  Real lhs, rhs, error;
  int order = 0;
  bool pass = false;
};
// 4 L^{(nu_+ + 1)}_S(0, chi_F) = (-1)^{nu_+ + 1} 2^{nu_- + 1} h_n R_V(chi)
TlemII verify_tlem_ii(const DarmonCase& c, const Real& tol);

// sum_sigma sigma(y) (x) sigma^{-1} on G_{n'} for n' | n, as coefficients
// indexed by elements of G_n supported on the subgroup G_{n'}
using GnTensor = std::vector<MultElement>;

struct RecursionLevel {
  std::int64_t level = 1;  // n_- d
  bool ok = false;
};

struct PropdesCheck {
  std::vector<RecursionLevel> levels;
  bool recursion = false;     // xi-recursion at every level
  bool membership = false;    // xi_n in O (x) I^{nu_+}
  bool plus_projection = false;  // pi(xi_n) = 2 sum sigma eps'_T (x) sigma^{-1}
  bool theta_membership = false;  // the same certificate for theta_n
  bool fixed_mod_m = true;    // (gamma_ell - 1) kappa_T an m-th power, tested
  int fixed_trials = 0;
  std::vector<std::int64_t> T;
  bool pass() const { return recursion && membership && plus_projection && theta_membership && fixed_mod_m; }
};

PropdesCheck verify_propdes(const DarmonCase& c, const std::vector<std::int64_t>& T, int trials = 20);
// T = {smallest odd prime outside S}
std::vector<std::int64_t> default_T(const DarmonCase& c);

}  // namespace starkit
