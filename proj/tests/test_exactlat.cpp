#include <doctest.h>

#include <random>

#include "starkit/exactlat.hpp"

using namespace starkit;

namespace {

IMat mat(std::initializer_list<std::initializer_list<long>> rows) {
  IMat A(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
  int i = 0;
  for (auto& r : rows) {
    int j = 0;
    for (long v : r) A(i, j++) = v;
    ++i;
  }
  return A;
}

IMat random_matrix(std::mt19937_64& rng, int m, int n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IMat A(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = d(rng);
  return A;
}

// gcd of all k x k minors, the k-th determinantal divisor
Integer det_divisor(const IMat& A, int k) {
  const int m = A.rows(), n = A.cols();
  Integer g = 0;
  std::vector<int> rs(k), cs(k);
  std::function<void(int, int, std::vector<int>&, int, std::vector<std::vector<int>>&)> choose =
      [&](int start, int total, std::vector<int>& cur, int need, std::vector<std::vector<int>>& out) {
        if (need == 0) {
          out.push_back(cur);
          return;
        }
        for (int i = start; i < total; ++i) {
          cur.push_back(i);
          choose(i + 1, total, cur, need - 1, out);
          cur.pop_back();
        }
      };
  std::vector<std::vector<int>> rsets, csets;
  std::vector<int> cur;
  choose(0, m, cur, k, rsets);
  choose(0, n, cur, k, csets);
  for (auto& r : rsets)
    for (auto& c : csets) {
      IMat S(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) S(i, j) = A(r[i], c[j]);
      g = gcd(g, determinant(S));
    }
  return g;
}

}  // namespace

TEST_CASE("hermite form of a small matrix") {
  IMat A = mat({{2, 4}, {0, 3}});
  auto h = hnf(A);
  CHECK(h.H == IMat(h.U * A));
  CHECK(h.H == mat({{2, 1}, {0, 3}}));
  CHECK(abs(determinant(h.U)) == 1);
}

TEST_CASE("hermite form is echelon with reduced entries above pivots") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    IMat A = random_matrix(rng, 4, 5, -6, 6);
    auto h = hnf(A);
    CHECK(h.H == IMat(h.U * A));
    CHECK(abs(determinant(h.U)) == 1);
    for (int k = 0; k < h.rank; ++k) {
      int c = h.pivots[k];
      CHECK(h.H(k, c) > 0);
      for (int i = k + 1; i < h.H.rows(); ++i) CHECK(h.H(i, c) == 0);
      for (int i = 0; i < k; ++i) CHECK((h.H(i, c) >= 0 && h.H(i, c) < h.H(k, c)));
    }
  }
}

TEST_CASE("smith form of diag(6,4)") {
  auto s = snf(mat({{6, 0}, {0, 4}}));
  CHECK(s.D == mat({{2, 0}, {0, 12}}));
}

TEST_CASE("smith invariants equal ratios of determinantal divisors") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    IMat A = random_matrix(rng, 3, 4, -9, 9);
    auto s = snf(A);
    CHECK(s.D == IMat(s.U * A * s.V));
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    Integer prev = 1;
    for (int k = 1; k <= 3; ++k) {
      Integer dk = det_divisor(A, k);
      if (dk == 0) {
        CHECK(s.rank < k);
        break;
      }
      CHECK(s.D(k - 1, k - 1) == dk / prev);
      prev = dk;
    }
  }
}

TEST_CASE("integer solving") {
  auto x = solve_left(mat({{2}, {3}}), IVec::Constant(1, Integer(1)));
  REQUIRE(x.has_value());
  CHECK(2 * (*x)(0) + 3 * (*x)(1) == 1);
  CHECK_FALSE(solve_left(mat({{2}}), IVec::Constant(1, Integer(3))).has_value());
}

TEST_CASE("quotient of span{(2,0),(0,3)} is cyclic of order 6") {
  auto P = quotient_structure(mat({{2, 0}, {0, 3}}), 2);
  REQUIRE(P.size() == 1);
  CHECK(P.moduli[0] == 6);
  CHECK(P.order() == 6);
  IVec e(2);
  e << 1, 1;
  IVec y = P.project(e);
  // (1,1) generates: 6 times it lies in the sublattice, smaller multiples do not
  for (int k = 1; k < 6; ++k) CHECK_FALSE(P.is_zero(IVec(y * k)));
  CHECK(P.is_zero(IVec(y * 6)));
}

TEST_CASE("kernels and saturation") {
  IMat A = mat({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  IMat K = left_kernel(A);
  CHECK(K.rows() == 1);
  CHECK(is_zero(IVec((K * A).transpose().col(0))));
  IMat sat = saturate(mat({{2, 4, 0}}), 3);
  CHECK(sat == mat({{1, 2, 0}}));
  IMat full = saturate(mat({{2, 0}, {0, 3}}), 2);
  CHECK(abs(determinant(full)) == 1);
}

TEST_CASE("rational solve and kernel") {
  QMat A = to_rational(mat({{1, 2}, {2, 4}, {0, 1}}));
  QVec b(2);
  b << Rational(3), Rational(7);
  auto x = solve_left(A, b);
  REQUIRE(x.has_value());
  CHECK(QVec(A.transpose() * *x) == b);
  QMat K = left_kernel(A);
  CHECK(K.rows() == 1);
  CHECK(rank(A) == 2);
}
