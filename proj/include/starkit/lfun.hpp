#pragma once

#include "starkit/cyclotomic.hpp"
#include "starkit/numberfield.hpp"

#include <map>
#include <memory>
#include <vector>

namespace starkit {

// An abelian field L inside Q(mu_N), given by the subgroup H of (Z/N)^x
// fixing it. G_L = (Z/N)^x / H, indexed by cosets.
struct AbelianField {
  std::int64_t N = 1;
  std::shared_ptr<UnitGroup> U;
  std::vector<std::int64_t> H;
  std::vector<std::int64_t> reps;  // smallest residue in each coset
  std::vector<int> coset;          // residue -> coset, -1 off units
  std::vector<DirichletChar> chars;  // characters of G_L
  int size() const { return static_cast<int>(reps.size()); }
  int coset_of(std::int64_t a) const { return coset[mod(a, N)]; }
};

AbelianField abelian_field(std::int64_t N, const std::vector<std::int64_t>& H);
// subgroup of (Z/N)^x generated by the given residues
std::vector<std::int64_t> generated_subgroup(std::int64_t N, const std::vector<std::int64_t>& gens);

Cx char_value(const DirichletChar& chi, std::int64_t a);
// value of the primitive character attached to chi at an integer a
Cx primitive_value(const DirichletChar& chi, std::int64_t a);

// S and T are sets of finite rational primes; infinity is always in S.
int vanishing_order(const DirichletChar& chi, const std::vector<std::int64_t>& S);
Cx L_leading(const DirichletChar& chi, const std::vector<std::int64_t>& S, const std::vector<std::int64_t>& T);

// chi-components x(chi) = sum_sigma x_sigma chi(sigma), one per character
using Components = std::vector<Cx>;
std::vector<Cx> from_components(const AbelianField& L, const Components& c);
Components to_components(const AbelianField& L, const std::vector<Cx>& x);

// components of Theta^{(r)}_{L,S,T}(0): L_{S,T}^{(r)}(0, chi^{-1}) when
// r(chi) = r, and 0 when r(chi) > r
Components theta_components(const AbelianField& L, const std::vector<std::int64_t>& S,
                            const std::vector<std::int64_t>& T, int r);
// rank one regulator at the fixed archimedean place: -sum log|sigma u| sigma^{-1}
Components regulator_rank1(const AbelianField& L, const MultElement& u);

// e_chi R_{L,n} and (-1)^{nu_+ + 1} 2^{nu_- - 1} R_{Q,n} e_chi R_V(u_0 ^ ... ^ u_nu)
struct LemmaComputeValues {
  Real lhs, rhs;
  Real R_Ln, R_Qn, RV_chi;
};
LemmaComputeValues lemma_compute(const QuadField& F, const SUnitData& S);

}  // namespace starkit
