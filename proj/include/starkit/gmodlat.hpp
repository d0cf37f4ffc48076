#pragma once

#include "starkit/groupring.hpp"

#include <random>
#include <string>
#include <vector>

namespace starkit {

// Z^N with a left action g |-> act[g] on column vectors.
struct GLattice {
  GroupPtr G;
  int N = 0;
  std::vector<IMat> act;
  std::vector<IVec> gens;  // Z[G]-generators of M
  std::vector<IVec> dual;  // rows f with phi_f generating Hom_G(M, Z[G])
};

bool is_action(const GLattice& M);
// Z[G/K_1] + ... + Z[G/K_t], each K_i given by generators
GLattice permutation_lattice(const GroupPtr& G, const std::vector<std::vector<int>>& subgroups);
// transport along a unimodular change of basis P (new coords = P * old)
GLattice conjugate(const GLattice& M, const IMat& P);
IMat random_unimodular(int n, std::mt19937_64& rng, int steps);
// greedy generating sets from standard basis vectors
void fill_generators(GLattice& M);

// phi_f(m) = sum_sigma f(sigma m) sigma^{-1}
IntElement phi_eval(const GLattice& M, const IVec& f, const IVec& m);
IntElement det_group_ring(const std::vector<std::vector<IntElement>>& A);

// Rubin's lattice in pairing coordinates: w |-> (Phi_J(w))_J over r-subsets J
// of the dual generators, one Z[G]-block of size |G| per subset.
struct RubinLattice {
  GLattice M;
  int r = 0;
  std::vector<std::vector<int>> subsets;
  int K = 0;
  IMat L;                 // basis rows (Hermite form)
  std::vector<IMat> rho;  // action on L coordinates, row vector convention: coords(g w) = coords(w) * rho[g]
  int rank() const { return static_cast<int>(L.rows()); }
  IVec pairing_of_wedge(const std::vector<IVec>& ms) const;
  IVec shift(const IVec& pairing, int g) const;
  std::optional<IVec> coords(const IVec& pairing) const;
  IVec pairing(const IVec& coords) const { return (coords.transpose() * L).transpose(); }
};

RubinLattice rubin_lattice(const GLattice& M, int r);

// An evaluator psi_1 ^ ... ^ psi_r, each psi_a = phi_{f_a}, expanded over the
// dual generators: Phi = sum_J minor_J(c) Phi_J with minor_J in Z[G].
struct Evaluator {
  std::vector<IVec> f;
  std::vector<IntElement> minors;  // one per subset J
};

Evaluator make_evaluator(const RubinLattice& R, const std::vector<IVec>& f);
IntElement evaluate(const RubinLattice& R, const Evaluator& Phi, const IVec& pairing);

// Everything needed to compare the G-side and G/H-side of a lattice.
struct Descent {
  GroupPtr G;
  std::vector<int> H;
  QuotientMap q;
  int r = 0, d = 0;
  RubinLattice top;
  IMat B;  // basis of M^H as columns
  RubinLattice bottom;
  QMat norm_r;  // N_H^r on L coordinates (top rank x bottom rank)
  IMat imap;    // i on L coordinates (bottom rank x top rank)
  LocalAug loc;
  AugQuotient target;
  std::vector<IVec> qgens;  // generators of Q(H)^d as local coordinates
  LeftSolver preimage_solver;
  int nring = 0;
};

Descent make_descent(const GLattice& M, const std::vector<int>& H, int r, int d);

IVec norm_r(const Descent& D, const IVec& top_coords);
IVec apply_i(const Descent& D, const IVec& bottom_coords);
IVec norm_H(const Descent& D, const IVec& top_coords);
// Phi^H on the G/H side, Phi given on the G side
IntElement evaluate_H(const Descent& D, const Evaluator& Phi, const IVec& bottom_pairing);

// Element of L_H (x) Q(H)^d: Y(a, k) for basis vector a and generator k.
using TensorElement = IMat;

// N^{(r,d)}(m) in L (x) Z[H]/I(H)^{d+1}, flattened
IVec higher_norm(const Descent& D, const IVec& top_coords);
std::optional<TensorElement> injection_preimage(const Descent& D, const IVec& flat);
bool tensor_is_zero(const Descent& D, const TensorElement& Y);
std::optional<IVec> phi_H_tensor(const Descent& D, const Evaluator& Phi, const TensorElement& Y);
// Phi(m) projected to Q_H^d, nullopt if Phi(m) is not in I_H^d
std::optional<IVec> phi_top_quotient(const Descent& D, const Evaluator& Phi, const IVec& top_coords);

struct PropnormResult {
  bool in_image = false;
  bool lhs_in_ideal = false;
  bool equal = false;
  IVec lhs, rhs;
};

// r = 0 uses Z[G] itself with Phi a group ring element
PropnormResult check_propnorm(const Descent& D, const Evaluator& Phi, const IVec& top_coords);
bool check_eqphi(const Descent& D, const Evaluator& Phi, const IVec& top_coords);
bool check_reminj(const Descent& D, const IVec& top_coords);
// true when some Phi_J^H detects the nonzero tensor
bool check_thminj(const Descent& D, const TensorElement& Y);

// elements of the image of N^{(r,d)}: sum_k x_k m_k with x_k in I(H)^d
IVec planted_element(const Descent& D, std::mt19937_64& rng, int terms);
IVec random_element(const Descent& D, std::mt19937_64& rng, int bound);
Evaluator random_evaluator(const Descent& D, std::mt19937_64& rng, int bound);
TensorElement random_tensor(const Descent& D, std::mt19937_64& rng);

// sign of the permutation taking (V minus W, W) to V, all ascending
int sign_shuffle(const std::vector<int>& V, const std::vector<int>& W);

}  // namespace starkit
