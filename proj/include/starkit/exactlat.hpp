#pragma once

#include "starkit/numeric.hpp"

#include <optional>
#include <vector>

namespace starkit {

// Row-style Hermite form: H = U * A, H in echelon form with positive pivots
// and entries above each pivot reduced into [0, pivot).
struct HnfResult {
  IMat H;
  IMat U;
  int rank = 0;
  std::vector<int> pivots;
};

HnfResult hnf(const IMat& A);
// Nonzero rows of the Hermite form, no transform tracked.
IMat hnf_basis(const IMat& A);

// D = U * A * V with D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SnfResult {
  IMat D;
  IMat U;
  IMat V;
  int rank = 0;
};

SnfResult snf(const IMat& A);
std::vector<Integer> invariant_factors(const IMat& A);

// x with x * A = b, if one exists over Z.
std::optional<IVec> solve_left(const IMat& A, const IVec& b);
// Repeated left solves against a fixed matrix.
class LeftSolver {
 public:
  LeftSolver() = default;
  explicit LeftSolver(const IMat& A);
  std::optional<IVec> solve(const IVec& b) const;
  int rows() const { return rows_; }

 private:
  SnfResult s_;
  int rows_ = 0, cols_ = 0;
};

// Rows spanning { x : x * A = 0 }.
IMat left_kernel(const IMat& A);
// Rows spanning { x : A * x = 0 }.
IMat right_kernel(const IMat& A);
// Basis of (Q-span of rows) meet Z^n.
IMat saturate(const IMat& rows, int dim);
bool in_row_span(const IMat& basis, const IVec& v);
Integer determinant(const IMat& A);
IMat identity_matrix(int n);
IMat inverse_unimodular(const IMat& U);

// Finitely generated abelian group Z^dim / rowspan(sub) in Smith coordinates.
// A free factor is recorded with modulus 0.
struct Presentation {
  int dim = 0;
  std::vector<Integer> moduli;
  IMat proj;  // dim x k, x |-> x * proj reduced by moduli
  IMat lift;  // k x dim
  IVec project(const IVec& x) const;
  IVec reduce(const IVec& y) const;
  bool is_zero(const IVec& y) const;
  Integer order() const;  // 0 when infinite
  int size() const { return static_cast<int>(moduli.size()); }
};

Presentation quotient_structure(const IMat& sub, int dim);

// Rational linear algebra.
QMat to_rational(const IMat& A);
QVec to_rational(const IVec& v);
int rank(const QMat& A);
std::optional<QVec> solve_left(const QMat& A, const QVec& b);
// X with X * A = B, if every row is solvable.
std::optional<QMat> solve_left(const QMat& A, const QMat& B);
QMat left_kernel(const QMat& A);
QMat rref(const QMat& A, std::vector<int>* pivots = nullptr);
bool is_integral(const QVec& v);
IVec to_integer_vec(const QVec& v);
// Scales each row to a primitive integer vector.
IMat clear_denominators(const QMat& A);

bool is_zero(const IVec& v);

}  // namespace starkit
