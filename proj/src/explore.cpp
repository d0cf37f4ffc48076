#include "starkit/explore.hpp"

#include <random>
#include <stdexcept>

namespace starkit {

const std::vector<std::string> kAlgebraStatements = {"eqphi", "reminj", "propnorm", "thminj", "eqaug", "phiconj"};

namespace {

const std::vector<std::vector<int>> kShapes = {{2},  {3},  {4},     {5},     {6},     {2, 2},  {7},    {8},
                                               {2, 4}, {9}, {3, 3}, {10},    {12},    {2, 6},  {2, 2, 2}, {14},
                                               {16}, {2, 8}, {4, 4}, {18},   {3, 6},  {20},    {2, 10}, {24}, {2, 12}};

int group_size(const std::vector<int>& o) {
  int s = 1;
  for (int x : o) s *= x;
  return s;
}

GLattice instance_module(const AlgebraInstance& inst, const GroupPtr& G) {
  std::vector<std::vector<int>> subs;
  for (int s : inst.stabilizers) subs.push_back(s == 0 ? std::vector<int>{} : std::vector<int>{s});
  GLattice M = permutation_lattice(G, subs);
  if (inst.P.size() > 0) M = conjugate(M, inst.P);
  return M;
}

std::string verdict_of(bool ok) { return ok ? "pass" : "fail"; }

IVec to_ivec(const IntElement& x) { return x.coeffs(); }

}  // namespace

AlgebraInstance random_algebra_instance(const std::string& statement, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  AlgebraInstance inst;
  inst.seed = seed;
  if (statement == "eqaug") {
    inst.r = 0;
    inst.d = pick(1, 3);
  } else if (statement == "phiconj") {
    inst.r = 2;
    inst.d = pick(1, 2);
  } else if (statement == "propnorm") {
    inst.r = pick(0, 2);
    inst.d = inst.r == 2 ? 0 : pick(1, 3);
  } else if (statement == "thminj") {
    inst.r = pick(1, 2);
    inst.d = inst.r == 2 ? 1 : pick(1, 3);
  } else if (statement == "eqphi" || statement == "reminj") {
    inst.r = pick(1, 2);
    inst.d = 1;
  } else {
    throw std::invalid_argument("random_algebra_instance: unknown statement " + statement);
  }
  // r = 2 lattices grow fast; keep those groups at order 12 or less
  const int max_order = inst.r == 2 ? 12 : 24;
  std::vector<std::vector<int>> shapes;
  for (auto& s : kShapes)
    if (group_size(s) <= max_order) shapes.push_back(s);
  inst.orders = shapes[pick(0, static_cast<int>(shapes.size()) - 1)];
  auto G = make_group(inst.orders);
  inst.h = pick(1, G->size() - 1);
  if (statement == "eqaug") return inst;
  int pieces = std::max(inst.r, 1) + pick(0, G->size() <= 8 ? 1 : 0);
  pieces = std::min(pieces, 3);
  inst.stabilizers.push_back(0);
  for (int i = 1; i < pieces; ++i) inst.stabilizers.push_back(pick(0, 1) ? pick(1, G->size() - 1) : 0);
  int N = 0;
  for (int s : inst.stabilizers) N += G->size() / (s == 0 ? 1 : G->order_of(s));
  inst.P = random_unimodular(N, rng, 3 * N);
  Descent D = instance_descent(inst);
  if (statement == "propnorm" || statement == "phiconj")
    inst.m = planted_element(D, rng, 2);
  else
    inst.m = random_element(D, rng, 3);
  Evaluator Phi = random_evaluator(D, rng, 2);
  if (inst.r == 0)
    inst.f = {to_ivec(Phi.minors[0])};
  else
    inst.f = Phi.f;
  if (statement == "thminj") inst.Y = random_tensor(D, rng);
  return inst;
}

Descent instance_descent(const AlgebraInstance& inst) {
  auto G = make_group(inst.orders);
  if (inst.h <= 0 || inst.h >= G->size()) throw std::invalid_argument("instance: h out of range");
  GLattice M = instance_module(inst, G);
  return make_descent(M, G->closure({inst.h}), inst.r, inst.d);
}

AlgebraRecord run_algebra_instance(const std::string& statement, const AlgebraInstance& inst) {
  AlgebraRecord rec;
  rec.statement = statement;
  rec.inst = inst;
  if (statement == "eqaug") {
    auto G = make_group(inst.orders);
    auto chk = check_eqaug(G, G->closure({inst.h}), inst.d);
    rec.lhs = IVec::Constant(1, chk.source_order);
    rec.rhs = IVec::Constant(1, chk.target_order);
    rec.verdict = verdict_of(chk.bijective());
    return rec;
  }
  Descent D = instance_descent(inst);
  Evaluator Phi;
  if (inst.r == 0) {
    if (inst.f.size() != 1 || inst.f[0].size() != D.G->size()) throw std::invalid_argument("instance: bad group ring element");
    Phi.minors.push_back(IntElement(D.G, inst.f[0]));
  } else {
    Phi = make_evaluator(D.top, inst.f);
  }
  if (inst.m.size() != D.top.rank()) throw std::invalid_argument("instance: m has the wrong length");
  if (statement == "propnorm" || statement == "phiconj") {
    auto res = check_propnorm(D, Phi, inst.m);
    rec.lhs = res.lhs;
    rec.rhs = res.rhs;
    if (!res.in_image)
      rec.verdict = "trivial";
    else
      rec.verdict = verdict_of(res.lhs_in_ideal && res.equal);
  } else if (statement == "eqphi") {
    rec.verdict = verdict_of(check_eqphi(D, Phi, inst.m));
  } else if (statement == "reminj") {
    rec.verdict = verdict_of(check_reminj(D, inst.m));
  } else if (statement == "thminj") {
    if (tensor_is_zero(D, inst.Y))
      rec.verdict = "trivial";
    else
      rec.verdict = verdict_of(check_thminj(D, inst.Y));
  } else {
    throw std::invalid_argument("run_algebra_instance: unknown statement " + statement);
  }
  return rec;
}

std::vector<AlgebraRecord> algebra_batch(const std::string& statement, int count, std::uint64_t seed) {
  std::vector<AlgebraRecord> out;
  for (int i = 0; i < count; ++i)
    out.push_back(run_algebra_instance(statement, random_algebra_instance(statement, seed + static_cast<std::uint64_t>(i))));
  return out;
}

}  // namespace starkit
