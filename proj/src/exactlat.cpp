#include "starkit/exactlat.hpp"

#include <stdexcept>

namespace starkit {

namespace {

using Rows = std::vector<std::vector<Integer>>;

Rows to_rows(const IMat& A) {
  Rows r(A.rows(), std::vector<Integer>(A.cols()));
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) r[i][j] = A(i, j);
  return r;
}

IMat from_rows(const Rows& r, int cols) {
  IMat A(static_cast<int>(r.size()), cols);
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < cols; ++j) A(i, j) = r[i][j];
  return A;
}

Rows identity_rows(int n) {
  Rows r(n, std::vector<Integer>(n, Integer(0)));
  for (int i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

// row_i -= q * row_k, starting at column `from`
void axpy(std::vector<Integer>& dst, const std::vector<Integer>& src, const Integer& q, std::size_t from = 0) {
  for (std::size_t j = from; j < dst.size(); ++j)
    if (src[j] != 0) dst[j] -= q * src[j];
}

Integer absval(const Integer& a) { return a < 0 ? Integer(-a) : a; }

HnfResult hnf_impl(const IMat& A, bool track) {
  const int m = static_cast<int>(A.rows()), n = static_cast<int>(A.cols());
  Rows H = to_rows(A);
  Rows U = track ? identity_rows(m) : Rows{};
  HnfResult res;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    bool have = false;
    for (;;) {
      int idx = -1;
      for (int i = r; i < m; ++i) {
        if (H[i][c] == 0) continue;
        if (idx < 0 || absval(H[i][c]) < absval(H[idx][c])) idx = i;
      }
      if (idx < 0) break;
      have = true;
      if (idx != r) {
        std::swap(H[idx], H[r]);
        if (track) std::swap(U[idx], U[r]);
      }
      bool clean = true;
      for (int i = r + 1; i < m; ++i) {
        if (H[i][c] == 0) continue;
        Integer q = H[i][c] / H[r][c];
        axpy(H[i], H[r], q, c);
        if (track) axpy(U[i], U[r], q);
        if (H[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (!have) continue;
    if (H[r][c] < 0) {
      for (auto& x : H[r]) x = -x;
      if (track)
        for (auto& x : U[r]) x = -x;
    }
    for (int i = 0; i < r; ++i) {
      if (H[i][c] == 0) continue;
      Integer q = floor_div(H[i][c], H[r][c]);
      if (q == 0) continue;
      axpy(H[i], H[r], q, c);
      if (track) axpy(U[i], U[r], q);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.H = from_rows(H, n);
  if (track) res.U = from_rows(U, m);
  return res;
}

}  // namespace

HnfResult hnf(const IMat& A) { return hnf_impl(A, true); }

IMat hnf_basis(const IMat& A) {
  auto res = hnf_impl(A, false);
  return res.H.topRows(res.rank);
}

SnfResult snf(const IMat& A) {
  const int m = static_cast<int>(A.rows()), n = static_cast<int>(A.cols());
  Rows M = to_rows(A);
  Rows U = identity_rows(m);
  Rows Vt = identity_rows(n);  // rows of V^T, so column ops become row ops
  auto col_axpy = [&](int j, int k, const Integer& q) {  // col_j -= q col_k
    for (int i = 0; i < m; ++i)
      if (M[i][k] != 0) M[i][j] -= q * M[i][k];
    axpy(Vt[j], Vt[k], q);
  };
  auto col_swap = [&](int j, int k) {
    for (int i = 0; i < m; ++i) std::swap(M[i][j], M[i][k]);
    std::swap(Vt[j], Vt[k]);
  };
  int t = 0;
  const int lim = std::min(m, n);
  for (; t < lim; ++t) {
    int bi = -1, bj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (M[i][j] != 0 && (bi < 0 || absval(M[i][j]) < absval(M[bi][bj]))) bi = i, bj = j;
    if (bi < 0) break;
    std::swap(M[bi], M[t]);
    std::swap(U[bi], U[t]);
    col_swap(bj, t);
    for (;;) {
      bool dirty = false;
      for (int i = t + 1; i < m; ++i) {
        if (M[i][t] == 0) continue;
        Integer q = M[i][t] / M[t][t];
        axpy(M[i], M[t], q, t);
        axpy(U[i], U[t], q);
        if (M[i][t] != 0) dirty = true;
      }
      for (int j = t + 1; j < n; ++j) {
        if (M[t][j] == 0) continue;
        Integer q = M[t][j] / M[t][t];
        col_axpy(j, t, q);
        if (M[t][j] != 0) dirty = true;
      }
      if (dirty) {
        int si = -1, sj = -1;
        for (int i = t + 1; i < m; ++i)
          if (M[i][t] != 0 && (si < 0 || absval(M[i][t]) < absval(M[si][t]))) si = i;
        for (int j = t + 1; j < n; ++j)
          if (M[t][j] != 0 && (sj < 0 || absval(M[t][j]) < absval(M[t][sj]))) sj = j;
        if (si >= 0 && (sj < 0 || absval(M[si][t]) <= absval(M[t][sj]))) {
          std::swap(M[si], M[t]);
          std::swap(U[si], U[t]);
        } else {
          col_swap(sj, t);
        }
        continue;
      }
      int bad = -1;
      for (int i = t + 1; i < m && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (M[i][j] % M[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      axpy(M[t], M[bad], Integer(-1));
      axpy(U[t], U[bad], Integer(-1));
    }
    if (M[t][t] < 0) {
      for (auto& x : M[t]) x = -x;
      for (auto& x : U[t]) x = -x;
    }
  }
  SnfResult res;
  res.rank = t;
  res.D = from_rows(M, n);
  res.U = from_rows(U, m);
  res.V = from_rows(Vt, n).transpose();
  return res;
}

std::vector<Integer> invariant_factors(const IMat& A) {
  auto s = snf(A);
  std::vector<Integer> out;
  for (int i = 0; i < s.rank; ++i) out.push_back(s.D(i, i));
  return out;
}

std::optional<IVec> solve_left(const IMat& A, const IVec& b) {
  if (b.size() != A.cols()) throw std::invalid_argument("solve_left: size mismatch");
  if (A.rows() == 0) {
    if (is_zero(b)) return IVec(0);
    return std::nullopt;
  }
  auto s = snf(A);
  IVec bv = (b.transpose() * s.V).transpose();
  IVec y = IVec::Zero(A.rows());
  for (int i = 0; i < bv.size(); ++i) {
    if (i < s.rank) {
      if (bv(i) % s.D(i, i) != 0) return std::nullopt;
      y(i) = bv(i) / s.D(i, i);
    } else if (bv(i) != 0) {
      return std::nullopt;
    }
  }
  return IVec((y.transpose() * s.U).transpose());
}

LeftSolver::LeftSolver(const IMat& A) : rows_(static_cast<int>(A.rows())), cols_(static_cast<int>(A.cols())) {
  if (rows_ > 0) s_ = snf(A);
}

std::optional<IVec> LeftSolver::solve(const IVec& b) const {
  if (b.size() != cols_) throw std::invalid_argument("LeftSolver: size mismatch");
  if (rows_ == 0) {
    if (is_zero(b)) return IVec(0);
    return std::nullopt;
  }
  IVec bv = (b.transpose() * s_.V).transpose();
  IVec y = IVec::Zero(rows_);
  for (int i = 0; i < bv.size(); ++i) {
    if (i < s_.rank) {
      if (bv(i) % s_.D(i, i) != 0) return std::nullopt;
      y(i) = bv(i) / s_.D(i, i);
    } else if (bv(i) != 0) {
      return std::nullopt;
    }
  }
  return IVec((y.transpose() * s_.U).transpose());
}

IMat left_kernel(const IMat& A) {
  if (A.rows() == 0) return IMat(0, 0);
  auto h = hnf(A);
  return h.U.bottomRows(A.rows() - h.rank);
}

IMat right_kernel(const IMat& A) { return left_kernel(IMat(A.transpose())); }

IMat saturate(const IMat& rows, int dim) {
  if (rows.rows() == 0) return IMat(0, dim);
  IMat k1 = right_kernel(rows);  // rows v with rows * v = 0
  if (k1.rows() == 0) return identity_matrix(dim);
  IMat sat = left_kernel(IMat(k1.transpose()));
  return hnf_basis(sat);
}

bool in_row_span(const IMat& basis, const IVec& v) { return solve_left(basis, v).has_value(); }

Integer determinant(const IMat& A) {
  const int n = static_cast<int>(A.rows());
  if (n != A.cols()) throw std::invalid_argument("determinant: not square");
  if (n == 0) return 1;
  IMat M = A;
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (M(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (M(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      M.row(k).swap(M.row(p));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

IMat identity_matrix(int n) {
  IMat I = IMat::Zero(n, n);
  for (int i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

IMat inverse_unimodular(const IMat& U) {
  const int n = static_cast<int>(U.rows());
  IMat aug(n, 2 * n);
  aug << U, identity_matrix(n);
  auto h = hnf_impl(aug, false);
  if (h.rank != n) throw std::domain_error("inverse_unimodular: singular");
  for (int i = 0; i < n; ++i)
    if (h.H(i, i) != 1) throw std::domain_error("inverse_unimodular: not unimodular");
  return h.H.rightCols(n);
}

IVec Presentation::project(const IVec& x) const {
  IVec y = (x.transpose() * proj).transpose();
  return reduce(y);
}

IVec Presentation::reduce(const IVec& y) const {
  IVec r = y;
  for (int i = 0; i < r.size(); ++i)
    if (moduli[i] != 0) r(i) = mod(r(i), moduli[i]);
  return r;
}

bool Presentation::is_zero(const IVec& y) const { return starkit::is_zero(reduce(y)); }

Integer Presentation::order() const {
  Integer o = 1;
  for (auto& d : moduli) {
    if (d == 0) return 0;
    o *= d;
  }
  return o;
}

Presentation quotient_structure(const IMat& sub, int dim) {
  Presentation P;
  P.dim = dim;
  IMat V, Vinv;
  std::vector<Integer> d(dim, Integer(0));
  if (sub.rows() == 0) {
    V = identity_matrix(dim);
    Vinv = V;
  } else {
    auto s = snf(sub);
    for (int i = 0; i < s.rank; ++i) d[i] = s.D(i, i);
    V = s.V;
    Vinv = inverse_unimodular(V);
  }
  std::vector<int> keep;
  for (int i = 0; i < dim; ++i)
    if (d[i] != 1) keep.push_back(i);
  P.proj = IMat(dim, static_cast<int>(keep.size()));
  P.lift = IMat(static_cast<int>(keep.size()), dim);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    P.proj.col(k) = V.col(keep[k]);
    P.lift.row(k) = Vinv.row(keep[k]);
    P.moduli.push_back(d[keep[k]]);
  }
  return P;
}

QMat to_rational(const IMat& A) {
  QMat Q(A.rows(), A.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) Q(i, j) = Rational(A(i, j));
  return Q;
}

QVec to_rational(const IVec& v) {
  QVec q(v.size());
  for (int i = 0; i < v.size(); ++i) q(i) = Rational(v(i));
  return q;
}

QMat rref(const QMat& A, std::vector<int>* pivots) {
  QMat M = A;
  const int m = static_cast<int>(M.rows()), n = static_cast<int>(M.cols());
  int r = 0;
  if (pivots) pivots->clear();
  for (int c = 0; c < n && r < m; ++c) {
    int p = -1;
    for (int i = r; i < m; ++i)
      if (M(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    M.row(p).swap(M.row(r));
    Rational inv = Rational(1) / M(r, c);
    for (int j = c; j < n; ++j)
      if (M(r, j) != 0) M(r, j) *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || M(i, c) == 0) continue;
      Rational f = M(i, c);
      for (int j = c; j < n; ++j)
        if (M(r, j) != 0) M(i, j) -= f * M(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return M;
}

int rank(const QMat& A) {
  std::vector<int> piv;
  rref(A, &piv);
  return static_cast<int>(piv.size());
}

std::optional<QVec> solve_left(const QMat& A, const QVec& b) {
  // x A = b  <=>  A^T x^T = b^T
  const int m = static_cast<int>(A.rows()), n = static_cast<int>(A.cols());
  QMat aug(n, m + 1);
  aug.leftCols(m) = A.transpose();
  aug.col(m) = b;
  std::vector<int> piv;
  QMat R = rref(aug, &piv);
  QVec x = QVec::Zero(m);
  for (std::size_t k = 0; k < piv.size(); ++k) {
    if (piv[k] == m) return std::nullopt;
    x(piv[k]) = R(static_cast<int>(k), m);
  }
  return x;
}

std::optional<QMat> solve_left(const QMat& A, const QMat& B) {
  const int m = static_cast<int>(A.rows()), n = static_cast<int>(A.cols()), nb = static_cast<int>(B.rows());
  QMat aug(n, m + nb);
  aug.leftCols(m) = A.transpose();
  aug.rightCols(nb) = B.transpose();
  std::vector<int> piv;
  QMat R = rref(aug, &piv);
  QMat X = QMat::Zero(nb, m);
  for (std::size_t k = 0; k < piv.size(); ++k) {
    if (piv[k] >= m) return std::nullopt;
    for (int c = 0; c < nb; ++c) X(c, piv[k]) = R(static_cast<int>(k), m + c);
  }
  return X;
}

QMat left_kernel(const QMat& A) {
  const int m = static_cast<int>(A.rows());
  QMat At = A.transpose();
  std::vector<int> piv;
  QMat R = rref(At, &piv);
  std::vector<bool> is_piv(m, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<QVec> basis;
  for (int f = 0; f < m; ++f) {
    if (is_piv[f]) continue;
    QVec v = QVec::Zero(m);
    v(f) = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v(piv[k]) = -R(static_cast<int>(k), f);
    basis.push_back(v);
  }
  QMat K(static_cast<int>(basis.size()), m);
  for (std::size_t i = 0; i < basis.size(); ++i) K.row(i) = basis[i].transpose();
  return K;
}

bool is_integral(const QVec& v) {
  for (int i = 0; i < v.size(); ++i)
    if (denominator(v(i)) != 1) return false;
  return true;
}

IVec to_integer_vec(const QVec& v) {
  IVec r(v.size());
  for (int i = 0; i < v.size(); ++i) {
    if (denominator(v(i)) != 1) throw std::domain_error("to_integer_vec: not integral");
    r(i) = numerator(v(i));
  }
  return r;
}

IMat clear_denominators(const QMat& A) {
  IMat out(A.rows(), A.cols());
  for (int i = 0; i < A.rows(); ++i) {
    Integer l = 1;
    for (int j = 0; j < A.cols(); ++j) {
      Integer d = denominator(A(i, j));
      l = l / gcd(l, d) * d;
    }
    Integer g = 0;
    for (int j = 0; j < A.cols(); ++j) {
      out(i, j) = numerator(A(i, j)) * (l / denominator(A(i, j)));
      g = gcd(g, out(i, j));
    }
    if (g > 1)
      for (int j = 0; j < A.cols(); ++j) out(i, j) /= g;
  }
  return out;
}

bool is_zero(const IVec& v) {
  for (int i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

}  // namespace starkit
