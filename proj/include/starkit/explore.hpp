#pragma once

#include "starkit/gmodlat.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace starkit {

// A reproducible lattice instance: M = P . (Z[G/K_1] + ... + Z[G/K_t]),
// H = <h>, an element m of the top Rubin lattice and an evaluator.
struct AlgebraInstance {
  std::vector<int> orders;
  std::vector<int> stabilizers;  // generator of each K_i, 0 for the trivial subgroup
  IMat P;
  int h = 1;
  int r = 1, d = 1;
  IVec m;               // coordinates in the top Rubin lattice
  std::vector<IVec> f;  // functionals, or one group ring element when r = 0
  IMat Y;               // tensor for the injectivity check
  std::uint64_t seed = 0;
};

// statements: "eqphi", "reminj", "propnorm", "thminj", "eqaug", "phiconj"
struct AlgebraRecord {
  std::string statement;
  AlgebraInstance inst;
  IVec lhs, rhs;
  std::string verdict;  // pass | fail | trivial
};

extern const std::vector<std::string> kAlgebraStatements;

AlgebraInstance random_algebra_instance(const std::string& statement, std::uint64_t seed);
Descent instance_descent(const AlgebraInstance& inst);
AlgebraRecord run_algebra_instance(const std::string& statement, const AlgebraInstance& inst);
// instances seeded seed, seed + 1, ...
std::vector<AlgebraRecord> algebra_batch(const std::string& statement, int count, std::uint64_t seed);

}  // namespace starkit
