#include "starkit/gmodlat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace starkit {

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

bool spans_everything(const std::vector<IVec>& rows, int n) {
  if (rows.empty()) return n == 0;
  IMat A(static_cast<int>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i) A.row(i) = rows[i].transpose();
  IMat H = hnf_basis(A);
  if (H.rows() != n) return false;
  for (int i = 0; i < n; ++i)
    if (H(i, i) != 1) return false;
  return true;
}

IntElement block(const IVec& pairing, int j, const GroupPtr& G) {
  return IntElement(G, pairing.segment(static_cast<long>(j) * G->size(), G->size()));
}

}  // namespace

bool is_action(const GLattice& M) {
  const int n = M.G->size();
  if (static_cast<int>(M.act.size()) != n) return false;
  if (M.act[0] != identity_matrix(M.N)) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (M.act[M.G->mul(a, b)] != IMat(M.act[a] * M.act[b])) return false;
  return true;
}

GLattice permutation_lattice(const GroupPtr& G, const std::vector<std::vector<int>>& subgroups) {
  GLattice M;
  M.G = G;
  std::vector<QuotientMap> qs;
  std::vector<int> offset;
  for (auto& gens : subgroups) {
    qs.push_back(quotient_group(G, G->closure(gens)));
    offset.push_back(M.N);
    M.N += qs.back().quotient->size();
  }
  M.act.assign(G->size(), IMat::Zero(M.N, M.N));
  for (int g = 0; g < G->size(); ++g) {
    for (std::size_t i = 0; i < qs.size(); ++i) {
      auto& Q = *qs[i].quotient;
      for (int c = 0; c < Q.size(); ++c) M.act[g](offset[i] + Q.mul(qs[i].proj[g], c), offset[i] + c) = 1;
    }
  }
  for (std::size_t i = 0; i < qs.size(); ++i) {
    IVec e = IVec::Zero(M.N);
    e(offset[i]) = 1;
    M.gens.push_back(e);
    M.dual.push_back(e);
  }
  return M;
}

GLattice conjugate(const GLattice& M, const IMat& P) {
  IMat Pinv = inverse_unimodular(P);
  GLattice R;
  R.G = M.G;
  R.N = M.N;
  for (auto& A : M.act) R.act.push_back(P * A * Pinv);
  for (auto& m : M.gens) R.gens.push_back(P * m);
  for (auto& f : M.dual) R.dual.push_back((f.transpose() * Pinv).transpose());
  return R;
}

IMat random_unimodular(int n, std::mt19937_64& rng, int steps) {
  IMat P = identity_matrix(n);
  if (n < 2) return P;
  std::uniform_int_distribution<int> pick(0, n - 1), coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    int c = coef(rng);
    if (c == 0) c = 1;
    P.row(i) += Integer(c) * P.row(j);
  }
  return P;
}

void fill_generators(GLattice& M) {
  if (M.gens.empty()) {
    std::vector<IVec> span;
    for (int j = 0; j < M.N && !spans_everything(span, M.N); ++j) {
      IVec e = IVec::Zero(M.N);
      e(j) = 1;
      M.gens.push_back(e);
      for (auto& A : M.act) span.push_back(A * e);
    }
  }
  if (M.dual.empty()) {
    std::vector<IVec> span;
    for (int j = 0; j < M.N && !spans_everything(span, M.N); ++j) {
      IVec e = IVec::Zero(M.N);
      e(j) = 1;
      M.dual.push_back(e);
      for (auto& A : M.act) span.push_back((e.transpose() * A).transpose());
    }
  }
}

IntElement phi_eval(const GLattice& M, const IVec& f, const IVec& m) {
  IntElement x(M.G);
  IVec Am;
  for (int g = 0; g < M.G->size(); ++g) x[g] = f.dot(M.act[M.G->inv(g)] * m);
  return x;
}

IntElement det_group_ring(const std::vector<std::vector<IntElement>>& A) {
  const int r = static_cast<int>(A.size());
  if (r == 0) throw std::invalid_argument("det_group_ring: empty matrix needs a group");
  std::vector<int> p(r);
  std::iota(p.begin(), p.end(), 0);
  IntElement acc(A[0][0].group());
  do {
    IntElement term = A[0][p[0]];
    for (int i = 1; i < r; ++i) term = term * A[i][p[i]];
    if (perm_sign(p) > 0)
      acc += term;
    else
      acc -= term;
  } while (std::next_permutation(p.begin(), p.end()));
  return acc;
}

IVec RubinLattice::pairing_of_wedge(const std::vector<IVec>& ms) const {
  const int n = M.G->size();
  IVec out = IVec::Zero(K);
  if (r == 0) {
    out(0) = 1;
    return out;
  }
  // phi_j(m_b) for all dual generators once
  std::vector<std::vector<IntElement>> vals(M.dual.size());
  for (std::size_t j = 0; j < M.dual.size(); ++j)
    for (auto& m : ms) vals[j].push_back(phi_eval(M, M.dual[j], m));
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    std::vector<std::vector<IntElement>> A(r);
    for (int a = 0; a < r; ++a) A[a] = vals[subsets[s][a]];
    out.segment(static_cast<long>(s) * n, n) = det_group_ring(A).coeffs();
  }
  return out;
}

IVec RubinLattice::shift(const IVec& pairing, int g) const {
  const int n = M.G->size();
  IVec out = IVec::Zero(K);
  for (std::size_t s = 0; s < subsets.size(); ++s)
    for (int x = 0; x < n; ++x) out(static_cast<long>(s) * n + M.G->mul(g, x)) = pairing(static_cast<long>(s) * n + x);
  return out;
}

std::optional<IVec> RubinLattice::coords(const IVec& pairing) const { return echelon_coords(L, pairing); }

RubinLattice rubin_lattice(const GLattice& M, int r) {
  RubinLattice R;
  R.M = M;
  R.r = r;
  const int n = M.G->size();
  R.subsets = subsets_of_size(static_cast<int>(M.dual.size()), r);
  R.K = static_cast<int>(R.subsets.size()) * n;
  std::vector<IVec> S;
  for (auto& I : subsets_of_size(static_cast<int>(M.gens.size()), r)) {
    std::vector<IVec> ms;
    for (int i : I) ms.push_back(M.gens[i]);
    IVec base = R.pairing_of_wedge(ms);
    for (int g = 0; g < n; ++g) S.push_back(R.shift(base, g));
  }
  IMat Sm(static_cast<int>(S.size()), R.K);
  for (std::size_t i = 0; i < S.size(); ++i) Sm.row(i) = S[i].transpose();
  R.L = saturate(Sm, R.K);
  if (S.empty()) R.L = IMat(0, R.K);
  R.rho.resize(n);
  for (int g = 0; g < n; ++g) {
    R.rho[g] = IMat(R.rank(), R.rank());
    for (int i = 0; i < R.rank(); ++i) {
      auto c = R.coords(R.shift(R.L.row(i).transpose(), g));
      if (!c) throw std::logic_error("rubin_lattice: lattice not G-stable");
      R.rho[g].row(i) = c->transpose();
    }
  }
  return R;
}

Evaluator make_evaluator(const RubinLattice& R, const std::vector<IVec>& f) {
  Evaluator Phi;
  Phi.f = f;
  const GroupPtr& G = R.M.G;
  const int n = G->size();
  if (R.r == 0) throw std::invalid_argument("make_evaluator: use a group ring element for r = 0");
  if (static_cast<int>(f.size()) != R.r) throw std::invalid_argument("make_evaluator: need r functionals");
  const int k = static_cast<int>(R.M.dual.size());
  IMat F(k * n, R.M.N);
  for (int j = 0; j < k; ++j)
    for (int s = 0; s < n; ++s) F.row(j * n + s) = R.M.dual[j].transpose() * R.M.act[s];
  LeftSolver solver(F);
  std::vector<std::vector<IntElement>> c(R.r, std::vector<IntElement>(k, IntElement(G)));
  for (int a = 0; a < R.r; ++a) {
    auto x = solver.solve(f[a]);
    if (!x) throw std::logic_error("make_evaluator: dual generators do not generate");
    for (int j = 0; j < k; ++j)
      for (int s = 0; s < n; ++s) c[a][j][s] = (*x)(j * n + s);
  }
  for (auto& J : R.subsets) {
    std::vector<std::vector<IntElement>> A(R.r);
    for (int a = 0; a < R.r; ++a)
      for (int b = 0; b < R.r; ++b) A[a].push_back(c[a][J[b]]);
    Phi.minors.push_back(det_group_ring(A));
  }
  return Phi;
}

IntElement evaluate(const RubinLattice& R, const Evaluator& Phi, const IVec& pairing) {
  IntElement acc(R.M.G);
  for (std::size_t s = 0; s < R.subsets.size(); ++s) acc += Phi.minors[s] * block(pairing, static_cast<int>(s), R.M.G);
  return acc;
}

Descent make_descent(const GLattice& M, const std::vector<int>& H, int r, int d) {
  Descent D;
  D.G = M.G;
  D.H = H;
  D.r = r;
  D.d = d;
  D.q = quotient_group(M.G, H);
  const GroupPtr& Q = D.q.quotient;
  D.top = rubin_lattice(M, r);

  // M^H and its G/H-action
  IMat stack = IMat::Zero(static_cast<int>(H.size()) * M.N, M.N);
  for (std::size_t i = 0; i < H.size(); ++i) stack.block(static_cast<int>(i) * M.N, 0, M.N, M.N) = M.act[H[i]] - identity_matrix(M.N);
  D.B = IMat(right_kernel(stack).transpose());
  const int NH = static_cast<int>(D.B.cols());
  GLattice MH;
  MH.G = Q;
  MH.N = NH;
  LeftSolver bsolve{IMat(D.B.transpose())};
  for (int c = 0; c < Q->size(); ++c) {
    IMat AB = M.act[D.q.lift[c]] * D.B;
    IMat C(NH, NH);
    for (int j = 0; j < NH; ++j) {
      auto y = bsolve.solve(AB.col(j));
      if (!y) throw std::logic_error("make_descent: M^H not stable");
      C.col(j) = *y;
    }
    MH.act.push_back(C);
  }
  for (auto& f : M.dual) MH.dual.push_back((f.transpose() * D.B).transpose());
  {
    std::vector<IVec> span;
    for (auto& f : MH.dual)
      for (auto& C : MH.act) span.push_back((f.transpose() * C).transpose());
    if (!spans_everything(span, NH)) throw std::logic_error("make_descent: restricted duals do not generate");
  }
  fill_generators(MH);
  D.bottom = rubin_lattice(MH, r);

  // N_H^r from its definition on spanning wedges g (m_{i1} ^ ... ^ m_{ir})
  std::vector<IVec> S, img;
  auto normH_vec = [&](const IVec& m) {
    IVec s = IVec::Zero(M.N);
    for (int h : H) s += M.act[h] * m;
    auto y = bsolve.solve(s);
    if (!y) throw std::logic_error("make_descent: norm not in M^H");
    return *y;
  };
  for (auto& I : subsets_of_size(static_cast<int>(M.gens.size()), r)) {
    std::vector<IVec> ms, ns;
    for (int i : I) {
      ms.push_back(M.gens[i]);
      ns.push_back(normH_vec(M.gens[i]));
    }
    IVec base = D.top.pairing_of_wedge(ms);
    IVec baseH = D.bottom.pairing_of_wedge(ns);
    for (int g = 0; g < M.G->size(); ++g) {
      S.push_back(D.top.shift(base, g));
      img.push_back(D.bottom.shift(baseH, D.q.proj[g]));
    }
  }
  const int rt = D.top.rank(), rb = D.bottom.rank();
  D.norm_r = QMat::Zero(rt, rb);
  if (rt > 0) {
    QMat Sq(static_cast<int>(S.size()), D.top.K), Iq(static_cast<int>(S.size()), D.bottom.K);
    for (std::size_t i = 0; i < S.size(); ++i) {
      Sq.row(i) = to_rational(S[i]).transpose();
      Iq.row(i) = to_rational(img[i]).transpose();
    }
    auto X = solve_left(Sq, to_rational(D.top.L));
    if (!X) throw std::logic_error("make_descent: lattice outside the span of wedges");
    QMat images = *X * Iq;  // bottom pairing coordinates
    QMat LbQ = to_rational(D.bottom.L);
    if (rb > 0) {
      auto Y = solve_left(LbQ, images);
      if (!Y) throw std::logic_error("make_descent: norm image outside bottom span");
      D.norm_r = *Y;
    }
  }

  // i on L coordinates: Phi_J(i x) = nu(Phi_J^H(x)), nu(sigma-bar) = N_H sigma~
  D.imap = IMat::Zero(rb, rt);
  const int n = M.G->size(), nq = Q->size();
  for (int a = 0; a < rb; ++a) {
    IVec pb = D.bottom.L.row(a).transpose();
    IVec pt = IVec::Zero(D.top.K);
    for (std::size_t s = 0; s < D.top.subsets.size(); ++s)
      for (int g = 0; g < n; ++g) pt(static_cast<long>(s) * n + g) = pb(static_cast<long>(s) * nq + D.q.proj[g]);
    auto c = D.top.coords(pt);
    if (!c) throw std::logic_error("make_descent: i does not land in the lattice");
    D.imap.row(a) = c->transpose();
  }

  D.loc = local_aug(M.G, H, d);
  D.target = aug_quotient(M.G, H, d);
  D.qgens = D.loc.quot_generators();
  D.nring = D.loc.ring.size();

  if (r >= 1) {
    const int nqg = static_cast<int>(D.qgens.size());
    std::vector<IVec> rows;
    for (int a = 0; a < rb; ++a)
      for (int k = 0; k < nqg; ++k) {
        IVec rk = D.loc.ring.project(D.qgens[k]);
        IVec flat = IVec::Zero(rt * D.nring);
        for (int l = 0; l < rt; ++l)
          for (int kk = 0; kk < D.nring; ++kk) flat(l * D.nring + kk) = D.imap(a, l) * rk(kk);
        rows.push_back(flat);
      }
    for (int l = 0; l < rt; ++l)
      for (int kk = 0; kk < D.nring; ++kk) {
        if (D.loc.ring.moduli[kk] == 0) continue;
        IVec e = IVec::Zero(rt * D.nring);
        e(l * D.nring + kk) = D.loc.ring.moduli[kk];
        rows.push_back(e);
      }
    IMat A(static_cast<int>(rows.size()), rt * D.nring);
    for (std::size_t i = 0; i < rows.size(); ++i) A.row(i) = rows[i].transpose();
    D.preimage_solver = LeftSolver(A);
  }
  return D;
}

IVec norm_r(const Descent& D, const IVec& top_coords) {
  QVec v = (to_rational(top_coords).transpose() * D.norm_r).transpose();
  if (!is_integral(v)) throw std::logic_error("norm_r: image not integral");
  return to_integer_vec(v);
}

IVec apply_i(const Descent& D, const IVec& bottom_coords) { return (bottom_coords.transpose() * D.imap).transpose(); }

IVec norm_H(const Descent& D, const IVec& top_coords) {
  IVec s = IVec::Zero(D.top.rank());
  for (int h : D.H) s += (top_coords.transpose() * D.top.rho[h]).transpose();
  return s;
}

IntElement evaluate_H(const Descent& D, const Evaluator& Phi, const IVec& bottom_pairing) {
  IntElement acc(D.q.quotient);
  for (std::size_t s = 0; s < D.bottom.subsets.size(); ++s)
    acc += push_forward(Phi.minors[s], D.q) * block(bottom_pairing, static_cast<int>(s), D.q.quotient);
  return acc;
}

IVec higher_norm(const Descent& D, const IVec& top_coords) {
  const int rt = D.top.rank();
  IVec flat = IVec::Zero(rt * D.nring);
  for (int h : D.H) {
    IVec hm = (top_coords.transpose() * D.top.rho[h]).transpose();
    IVec local = IVec::Zero(static_cast<int>(D.H.size()));
    local(D.loc.pos[D.G->inv(h)]) = 1;
    IVec rk = D.loc.ring.project(local);
    for (int l = 0; l < rt; ++l)
      for (int kk = 0; kk < D.nring; ++kk) flat(l * D.nring + kk) += hm(l) * rk(kk);
  }
  for (int l = 0; l < rt; ++l)
    for (int kk = 0; kk < D.nring; ++kk)
      if (D.loc.ring.moduli[kk] != 0) flat(l * D.nring + kk) = mod(flat(l * D.nring + kk), D.loc.ring.moduli[kk]);
  return flat;
}

std::optional<TensorElement> injection_preimage(const Descent& D, const IVec& flat) {
  auto x = D.preimage_solver.solve(flat);
  if (!x) return std::nullopt;
  const int rb = D.bottom.rank(), nqg = static_cast<int>(D.qgens.size());
  TensorElement Y(rb, nqg);
  for (int a = 0; a < rb; ++a)
    for (int k = 0; k < nqg; ++k) {
      Integer v = (*x)(a * nqg + k);
      Y(a, k) = D.loc.quot.moduli[k] == 0 ? v : mod(v, D.loc.quot.moduli[k]);
    }
  return Y;
}

bool tensor_is_zero(const Descent& D, const TensorElement& Y) {
  for (int a = 0; a < Y.rows(); ++a)
    for (int k = 0; k < Y.cols(); ++k) {
      const Integer& m = D.loc.quot.moduli[k];
      if (m == 0 ? Y(a, k) != 0 : mod(Y(a, k), m) != 0) return false;
    }
  return true;
}

std::optional<IVec> phi_H_tensor(const Descent& D, const Evaluator& Phi, const TensorElement& Y) {
  IntElement acc(D.G);
  for (int a = 0; a < Y.rows(); ++a) {
    IntElement v = evaluate_H(D, Phi, D.bottom.L.row(a).transpose());
    for (int k = 0; k < Y.cols(); ++k) {
      if (Y(a, k) == 0) continue;
      IntElement qk = D.loc.to_group(D.qgens[k]);
      for (int c = 0; c < D.q.quotient->size(); ++c) {
        if (v[c] == 0) continue;
        acc += qk.shifted(D.q.lift[c]).scaled(v[c] * Y(a, k));
      }
    }
  }
  return D.target.project(acc);
}

std::optional<IVec> phi_top_quotient(const Descent& D, const Evaluator& Phi, const IVec& top_coords) {
  return D.target.project(evaluate(D.top, Phi, D.top.pairing(top_coords)));
}

PropnormResult check_propnorm(const Descent& D, const Evaluator& Phi, const IVec& top_coords) {
  PropnormResult res;
  if (D.r == 0) {
    IntElement m(D.G, top_coords);
    res.in_image = in_augmentation_power(m, D.H, D.d);
    auto lhs = D.target.project(Phi.minors[0] * m);
    res.lhs_in_ideal = lhs.has_value();
    if (!res.in_image || !lhs) return res;
    IntElement phiH(D.G);
    IntElement pushed = push_forward(Phi.minors[0], D.q);
    for (int c = 0; c < D.q.quotient->size(); ++c) phiH[D.q.lift[c]] = pushed[c];
    auto rhs = D.target.project(phiH * m);
    res.lhs = *lhs;
    res.rhs = *rhs;
    res.equal = res.lhs == res.rhs;
    return res;
  }
  auto Y = injection_preimage(D, higher_norm(D, top_coords));
  res.in_image = Y.has_value();
  auto lhs = phi_top_quotient(D, Phi, top_coords);
  res.lhs_in_ideal = lhs.has_value();
  if (!Y || !lhs) return res;
  auto rhs = phi_H_tensor(D, Phi, *Y);
  res.lhs = *lhs;
  res.rhs = *rhs;
  res.equal = res.lhs == res.rhs;
  return res;
}

bool check_eqphi(const Descent& D, const Evaluator& Phi, const IVec& top_coords) {
  IntElement lhs = push_forward(evaluate(D.top, Phi, D.top.pairing(top_coords)), D.q);
  IVec nb = norm_r(D, top_coords);
  IntElement rhs = evaluate_H(D, Phi, D.bottom.pairing(nb));
  return lhs == rhs;
}

bool check_reminj(const Descent& D, const IVec& top_coords) {
  return apply_i(D, norm_r(D, top_coords)) == norm_H(D, top_coords);
}

bool check_thminj(const Descent& D, const TensorElement& Y) {
  for (std::size_t s = 0; s < D.top.subsets.size(); ++s) {
    Evaluator e;
    for (std::size_t t = 0; t < D.top.subsets.size(); ++t)
      e.minors.push_back(t == s ? IntElement::scalar(D.G, Integer(1)) : IntElement(D.G));
    auto v = phi_H_tensor(D, e, Y);
    if (v && !D.target.pres.is_zero(*v)) return true;
  }
  return false;
}

IVec planted_element(const Descent& D, std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<int> small(-2, 2);
  const int rt = D.top.rank();
  IVec m = IVec::Zero(rt);
  const IMat& Id = D.loc.ideal_d;
  for (int t = 0; t < terms; ++t) {
    IVec mp(rt);
    for (int l = 0; l < rt; ++l) mp(l) = small(rng);
    IVec x = IVec::Zero(static_cast<int>(D.H.size()));
    for (int i = 0; i < Id.rows(); ++i) x += Integer(small(rng)) * Id.row(i).transpose();
    for (std::size_t h = 0; h < D.H.size(); ++h)
      if (x(h) != 0) m += x(h) * (mp.transpose() * D.top.rho[D.H[h]]).transpose();
  }
  return m;
}

IVec random_element(const Descent& D, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IVec m(D.top.rank());
  for (int l = 0; l < m.size(); ++l) m(l) = dist(rng);
  return m;
}

Evaluator random_evaluator(const Descent& D, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  if (D.r == 0) {
    Evaluator e;
    IntElement x(D.G);
    for (int g = 0; g < D.G->size(); ++g) x[g] = dist(rng);
    e.minors.push_back(x);
    return e;
  }
  std::vector<IVec> f;
  for (int a = 0; a < D.r; ++a) {
    IVec v(D.top.M.N);
    for (int j = 0; j < v.size(); ++j) v(j) = dist(rng);
    f.push_back(v);
  }
  return make_evaluator(D.top, f);
}

TensorElement random_tensor(const Descent& D, std::mt19937_64& rng) {
  const int rb = D.bottom.rank(), nqg = static_cast<int>(D.qgens.size());
  TensorElement Y(rb, nqg);
  if (rb == 0 || nqg == 0) return Y;
  for (int attempt = 0; attempt < 100; ++attempt) {
    for (int a = 0; a < rb; ++a)
      for (int k = 0; k < nqg; ++k) {
        const Integer& m = D.loc.quot.moduli[k];
        long hi = m == 0 ? 3 : static_cast<long>(to_i64(m)) - 1;
        std::uniform_int_distribution<long> dist(0, hi);
        Y(a, k) = dist(rng);
      }
    if (!tensor_is_zero(D, Y)) return Y;
  }
  return Y;
}

int sign_shuffle(const std::vector<int>& V, const std::vector<int>& W) {
  std::vector<int> seq;
  for (int v : V)
    if (std::find(W.begin(), W.end(), v) == W.end()) seq.push_back(v);
  std::vector<int> w = W;
  std::sort(w.begin(), w.end(), [&](int a, int b) {
    return std::find(V.begin(), V.end(), a) < std::find(V.begin(), V.end(), b);
  });
  for (int v : w) seq.push_back(v);
  std::vector<int> pos;
  for (int v : seq) pos.push_back(static_cast<int>(std::find(V.begin(), V.end(), v) - V.begin()));
  return perm_sign(pos);
}

}  // namespace starkit
