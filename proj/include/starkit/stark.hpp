#pragma once

#include "starkit/gmodlat.hpp"
#include "starkit/lfun.hpp"

#include <string>
#include <vector>

namespace starkit {

// Galois elements of Q(mu_{nf}) fixing F(mu_n)^+: a = +-1 mod n with chi_F(a) = 1
std::vector<std::int64_t> real_ray_subgroup(const QuadField& F, std::int64_t n);
// eps'_T = prod over H'/+-1 of sigma_a(delta_T(1 - zeta_{nf}))
MultElement stark_unit_rank1(const QuadField& F, std::int64_t n, const std::vector<std::int64_t>& T);
// the same for the fixed field of H inside Q(mu_N), -1 in H
MultElement cyclotomic_stark_unit(std::int64_t N, const std::vector<std::int64_t>& H, const std::vector<std::int64_t>& T);

struct StarkRank1Check {
  Components lhs, rhs;
  Real max_error;
  bool pass = false;
};

// R_V(eps'_T) = Theta^{(1)}_{L',S,T}(0) componentwise, S = primes dividing nf
StarkRank1Check verify_stark_rank1(const QuadField& F, std::int64_t n, const std::vector<std::int64_t>& T,
                                   const Real& tol);
StarkRank1Check verify_stark_rank1(std::int64_t N, const std::vector<std::int64_t>& H,
                                   const std::vector<std::int64_t>& S, const MultElement& eps,
                                   const std::vector<std::int64_t>& T, const Real& tol);

// N_{L'/L} eps_{L',S'} = prod_{p in S' - S} (1 - Fr_p^{-1}) eps_{L,S} for
// L = Q(mu_M)^+ and L' = Q(mu_{M ell})^+, decided exactly modulo torsion.
struct NormRelationCheck {
  bool pass = false;
  bool euler_factor = false;     // ell did not divide M
  bool control_rejected = false;  // dropping the Euler factor breaks the identity
};

NormRelationCheck verify_norm_relation(std::int64_t M, std::int64_t ell, const std::vector<std::int64_t>& T);
// the same for L = F(mu_n)^+ and L' = F(mu_{n ell})^+
NormRelationCheck verify_norm_relation(const QuadField& F, std::int64_t n, std::int64_t ell,
                                       const std::vector<std::int64_t>& T);

// Towers L'/L inside Q(mu_q), q prime, with V minus V' = W finite and
// unramified in L'. rprime = 0: L' is the fixed field of the subgroup of odd
// order k and L = Q(sqrt(-q)). rprime = 1: L' is the fixed field of the
// subgroup of even order k and L = Q, T = {t} with t = 1 mod q.
struct UnramifiedCase {
  int rprime = 0;
  std::int64_t q = 7;
  std::int64_t k = 1;
  std::vector<std::int64_t> W;
  std::int64_t t = 3;
};

struct UnramifiedCheck {
  bool valid = false;  // hypotheses hold
  std::string reason;
  bool in_image = false;   // LHS lies in the expected piece
  bool equal = false;      // equality in L (x) Q^d
  bool control_rejected = false;
  bool trivial = false;    // both sides vanish in the quotient
  bool bconj = false;      // every Phi_J(eps') in I^d with the matching image
  int d = 0;
  std::string lhs, rhs;    // printable forms
  bool pass() const { return valid && in_image && equal; }
};

UnramifiedCheck verify_unramified_case(const UnramifiedCase& c);

}  // namespace starkit
