#pragma once

#include "starkit/exactlat.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace starkit {

// (Z/M)^x as a product of cyclic groups, with discrete logarithms.
struct UnitGroup {
  std::int64_t M = 1;
  std::vector<std::int64_t> gens, orders;
  std::vector<std::int64_t> elements;   // all units, ascending
  std::vector<int> index;               // residue -> position in elements, -1 off units
  std::vector<std::vector<int>> exps;   // position -> exponents in gens
  std::int64_t exponent = 1;
  int size() const { return static_cast<int>(elements.size()); }
  const std::vector<int>& log(std::int64_t a) const { return exps[index[mod(a, M)]]; }
};

UnitGroup unit_group(std::int64_t M);

// psi(a) = zeta_order^value(a)
struct DirichletChar {
  const UnitGroup* U = nullptr;
  std::vector<std::int64_t> k;
  std::int64_t order = 1;
  std::int64_t value(std::int64_t a) const;  // exponent mod order, a a unit mod M
  bool is_even() const { return value(-1) == 0; }
  std::int64_t conductor() const;
};

std::vector<DirichletChar> all_characters(const UnitGroup& U);

// q * prod (1 - zeta_N^a)^{e_a}, a taken mod N and nonzero
struct MultElement {
  std::int64_t level = 1;
  std::map<std::int64_t, Integer> terms;
  Rational scalar{1};
};

MultElement symbol(std::int64_t N, std::int64_t a, const Integer& e = Integer(1));
MultElement scalar_element(std::int64_t N, const Rational& q);
MultElement mul(const MultElement& x, const MultElement& y);
MultElement pow(const MultElement& x, const Integer& e);
MultElement inv(const MultElement& x);
MultElement divide(const MultElement& x, const MultElement& y);
// zeta_N |-> zeta_N^t
MultElement galois_act(std::int64_t t, const MultElement& x);
// same number written at level M, a multiple of the level
MultElement inflate(const MultElement& x, std::int64_t M);
// prod over the listed Galois elements
MultElement norm_over(const MultElement& x, const std::vector<std::int64_t>& H);
// prod_{t in T} (1 - t Fr_t^{-1}) applied multiplicatively
MultElement delta_T(const MultElement& x, const std::vector<std::int64_t>& T);
bool operator==(const MultElement& x, const MultElement& y);

// log|sigma_b x| and sigma_b x under zeta_N = exp(2 pi i / N)
Real log_abs(const MultElement& x, std::int64_t b = 1);
Cx embed(const MultElement& x, std::int64_t b = 1);
// image in F_q under zeta_N |-> r, r of exact order N mod q
std::int64_t reduce_mod(const MultElement& x, std::int64_t q, std::int64_t r);
// a residue of exact order N mod q, q = 1 mod N
std::int64_t root_of_unity_mod(std::int64_t N, std::int64_t q);
// primes where x may have nonzero valuation
std::vector<std::int64_t> support_primes(const MultElement& x);

// Exact invariants of x modulo roots of unity: the valuation of the norm to
// Q at each prime, and for each Galois orbit of nontrivial even characters
// psi the coefficient c_psi in Q(zeta_ord psi). x is torsion iff all vanish.
class InvariantMap {
 public:
  // restrict: Galois elements fixing the field that contains the inputs
  InvariantMap(std::int64_t M, const std::vector<std::int64_t>& restrict_to = {});
  std::int64_t level() const { return M_; }
  int char_dim() const { return dim_; }
  std::map<std::int64_t, Rational> trivial_part(const MultElement& x) const;
  QVec char_part(const MultElement& x) const;
  bool is_torsion(const MultElement& x) const;
  // the effect of sigma_t on char_part coordinates
  QVec act(std::int64_t t, const QVec& v) const;

 private:
  struct Block {
    DirichletChar psi;
    std::int64_t f = 1;
    int offset = 0;
    std::vector<std::int64_t> val_f;  // value on residues mod f, -1 off units
    std::vector<Rational> phi_poly;   // cyclotomic polynomial of the order, monic
    std::map<std::int64_t, std::vector<Rational>> rho;  // per divisor N: prod(1 - conj psi(p)) / phi(N)
  };
  std::vector<Rational> reduce(std::vector<Rational> poly, const Block& b) const;
  std::int64_t M_;
  std::shared_ptr<UnitGroup> U_;
  std::vector<Block> blocks_;
  int dim_ = 0;
};

bool equal_mod_torsion(const MultElement& x, const MultElement& y, const InvariantMap& inv);

// Z-span of finitely many cyclotomic numbers modulo torsion, realized as the
// lattice of their invariant vectors.
class CycloLattice {
 public:
  CycloLattice(const InvariantMap& inv, const std::vector<MultElement>& gens, const std::vector<std::int64_t>& primes);
  int rank() const { return static_cast<int>(basis_.rows()); }
  // invariant vector, scaled to be integral; nullopt if x leaves the prime set
  std::optional<IVec> vector_of(const MultElement& x) const;
  std::optional<IVec> coords(const MultElement& x) const;
  std::optional<IVec> coords_of_vector(const IVec& v) const;
  IVec vector_of_coords(const IVec& c) const { return (c.transpose() * basis_).transpose(); }
  // sigma_t on coordinates: coords(sigma_t x) = coords(x) * action(t)
  IMat action(std::int64_t t) const;
  const IMat& basis() const { return basis_; }
  // generator coefficients realizing each basis vector
  const IMat& basis_in_gens() const { return in_gens_; }

 private:
  const InvariantMap* inv_;
  std::vector<std::int64_t> primes_;
  Integer scale_{1};
  IMat basis_, in_gens_;
};

}  // namespace starkit
