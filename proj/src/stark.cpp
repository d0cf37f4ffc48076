#include "starkit/stark.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace starkit {

namespace {

std::vector<std::int64_t> half_reps(std::int64_t N, const std::vector<std::int64_t>& H) {
  std::vector<std::int64_t> out;
  for (auto a : H)
    if (a <= N - a) out.push_back(a);
  return out;
}

MultElement euler_factor(const MultElement& x, std::int64_t p) {
  return divide(x, galois_act(invmod(mod(p, x.level), x.level), x));
}

Real component_error(const Components& a, const Components& b) {
  Real worst = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    Real scale = abs(b[k]);
    if (scale < 1) scale = 1;
    Real e = abs(a[k] - b[k]) / scale;
    if (e > worst) worst = e;
  }
  return worst;
}

std::string vec_string(const IVec& v) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v(i));
  os << "]";
  return os.str();
}

std::string tensor_string(const Descent& D, TensorElement Y) {
  for (int a = 0; a < Y.rows(); ++a)
    for (int k = 0; k < Y.cols(); ++k)
      if (D.loc.quot.moduli[k] != 0) Y(a, k) = mod(Y(a, k), D.loc.quot.moduli[k]);
  std::ostringstream os;
  os << "[";
  for (int a = 0; a < Y.rows(); ++a) os << (a ? "," : "") << vec_string(IVec(Y.row(a).transpose()));
  os << "]";
  return os.str();
}

// cyclic G = (Z/q)^x / K, element i <-> g^i K
struct CyclicQuotient {
  std::int64_t q, g, m;
  GroupPtr G;
  int index(std::int64_t a) const { return static_cast<int>(mod(discrete_log(mod(a, q), g, q), m)); }
  std::int64_t rep(int i) const { return powmod(g, i, q); }
  std::vector<std::int64_t> K(std::int64_t k) const {
    std::vector<std::int64_t> out;
    for (std::int64_t j = 0; j < k; ++j) out.push_back(powmod(g, m * j, q));
    std::sort(out.begin(), out.end());
    return out;
  }
};

CyclicQuotient cyclic_quotient(std::int64_t q, std::int64_t k) {
  CyclicQuotient C;
  C.q = q;
  C.g = primitive_root(q);
  C.m = (q - 1) / k;
  C.G = make_group({static_cast<int>(C.m)});
  return C;
}

NormRelationCheck norm_relation_core(std::int64_t N, const std::vector<std::int64_t>& HL, const MultElement& epsL,
                                     std::int64_t N2, const std::vector<std::int64_t>& HL2,
                                     const MultElement& epsL2, const std::vector<std::int64_t>& extra) {
  // Gal(L'/L): residues mod N2 landing in HL, modulo HL2
  std::vector<char> inL(N, 0), seen(N2, 0);
  for (auto h : HL) inL[h] = 1;
  std::vector<std::int64_t> reps;
  for (std::int64_t a = 1; a < N2; ++a) {
    if (gcd64(a, N2) != 1 || !inL[a % N] || seen[a]) continue;
    reps.push_back(a);
    for (auto h : HL2) seen[mulmod(a, h, N2)] = 1;
  }
  MultElement lhs = norm_over(epsL2, reps);
  MultElement rhs = epsL;
  for (auto p : extra) rhs = euler_factor(rhs, p);
  InvariantMap inv(N2);
  NormRelationCheck out;
  out.euler_factor = !extra.empty();
  out.pass = equal_mod_torsion(lhs, inflate(rhs, N2), inv);
  MultElement control = out.euler_factor ? epsL : pow(epsL, Integer(2));
  out.control_rejected = !equal_mod_torsion(lhs, inflate(control, N2), inv);
  return out;
}

std::vector<std::int64_t> plus_minus_one(std::int64_t N) { return generated_subgroup(N, {N - 1}); }

UnramifiedCheck unramified_r0(const UnramifiedCase& c) {
  UnramifiedCheck out;
  const std::int64_t q = c.q;
  auto C = cyclic_quotient(q, c.k);
  const int m = static_cast<int>(C.m);
  std::vector<int> H;
  for (int i = 0; i < m; i += 2) H.push_back(i);
  const int d = out.d = static_cast<int>(c.W.size());

  // Theta_{L',{q},T}(0) = delta_T sum (1/2 - a/q) sigma_a^{-1}
  RatElement theta0(C.G);
  for (std::int64_t a = 1; a < q; ++a) theta0[C.index(invmod(a, q))] += Rational(1, 2) - Rational(a, q);
  RatElement dT = RatElement::scalar(C.G, Rational(1)) - RatElement::basis(C.G, C.index(invmod(c.t, q)), Rational(c.t));
  theta0 = theta0 * dT;
  RatElement thetaS = theta0;
  for (auto p : c.W) thetaS = thetaS * (RatElement::scalar(C.G, Rational(1)) - RatElement::basis(C.G, C.index(invmod(p, q)), Rational(1)));

  auto integral = [](const RatElement& x, IntElement& y) {
    y = IntElement(x.group());
    for (int g = 0; g < x.group()->size(); ++g) {
      if (denominator(x[g]) != 1) return false;
      y[g] = numerator(x[g]);
    }
    return true;
  };
  IntElement lhsI, theta0I;
  if (!integral(thetaS, lhsI) || !integral(theta0, theta0I)) {
    out.reason = "Stickelberger element not integral for this T";
    return out;
  }
  out.valid = true;
  auto target = aug_quotient(C.G, H, d);
  auto lhs = target.project(lhsI);
  out.in_image = lhs.has_value();

  // Theta_{L,{q},T}(0) lifted along the section, times prod (Fr_p - 1)
  auto qm = quotient_group(C.G, H);
  IntElement pushed = push_forward(theta0I, qm);
  IntElement rhsI(C.G);
  for (int cc = 0; cc < qm.quotient->size(); ++cc) rhsI[qm.lift[cc]] = pushed[cc];
  for (auto p : c.W) rhsI = rhsI * (IntElement::basis(C.G, C.index(p)) - IntElement::scalar(C.G, Integer(1)));
  auto rhs = target.project(rhsI);
  if (!lhs || !rhs) return out;
  out.lhs = vec_string(target.pres.reduce(*lhs));
  out.rhs = vec_string(target.pres.reduce(*rhs));
  out.equal = target.pres.is_zero(IVec(*lhs - *rhs));
  out.control_rejected = !target.pres.is_zero(IVec(*lhs - Integer(2) * *rhs));
  out.trivial = target.pres.is_zero(*rhs);
  out.bconj = out.equal;
  return out;
}

UnramifiedCheck unramified_r1(const UnramifiedCase& c) {
  UnramifiedCheck out;
  const std::int64_t q = c.q, t = c.t;
  auto C = cyclic_quotient(q, c.k);
  const int m = static_cast<int>(C.m);
  const int d = out.d = static_cast<int>(c.W.size());
  auto K = C.K(c.k);
  if ((t - 1) % q != 0) {
    out.reason = "t must be 1 mod q";
    return out;
  }

  MultElement eps0 = norm_over(symbol(q, 1), half_reps(q, K));
  std::vector<MultElement> gens;
  for (int i = 0; i < m; ++i) gens.push_back(galois_act(C.rep(i), eps0));
  gens.push_back(scalar_element(q, Rational(q)));
  InvariantMap inv(q, K);
  CycloLattice lat(inv, gens, {q});
  const int rk = lat.rank();

  // T-sublattice: x^2 = 1 at every prime above t, tested on y * sigma_{-1} y
  const std::int64_t r = root_of_unity_mod(q, t), gt = primitive_root(t);
  IMat DLg(static_cast<int>(gens.size()), m);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    MultElement z = mul(gens[j], galois_act(q - 1, gens[j]));
    for (int i = 0; i < m; ++i) DLg(j, i) = discrete_log(reduce_mod(galois_act(C.rep(i), z), t, r), gt, t);
  }
  IMat DL = lat.basis_in_gens() * DLg;
  IMat A(rk + m, m);
  A.topRows(rk) = DL;
  A.bottomRows(m) = Integer(t - 1) * identity_matrix(m);
  IMat ker = left_kernel(A);
  IMat KT = hnf_basis(IMat(ker.leftCols(rk)));
  if (KT.rows() != rk) throw std::logic_error("unramified_r1: T-sublattice has wrong rank");
  auto to_T = [&](const MultElement& x) -> std::optional<IVec> {
    auto cc = lat.coords(x);
    if (!cc) return std::nullopt;
    return solve_left(KT, *cc);
  };

  GLattice M;
  M.G = C.G;
  M.N = rk;
  for (int i = 0; i < m; ++i) {
    IMat Ab = KT * lat.action(C.rep(i));
    IMat At(rk, rk);
    for (int row = 0; row < rk; ++row) {
      auto y = solve_left(KT, IVec(Ab.row(row).transpose()));
      if (!y) throw std::logic_error("unramified_r1: T-sublattice not Galois stable");
      At.row(row) = y->transpose();
    }
    M.act.push_back(IMat(At.transpose()));
  }
  fill_generators(M);
  std::vector<int> H(m);
  for (int i = 0; i < m; ++i) H[i] = i;
  Descent D = make_descent(M, H, 1, d);

  // eps_{L',S,T} = prod_{p in W} (1 - Fr_p^{-1}) delta_T eps0
  MultElement eps = delta_T(eps0, {t});
  for (auto p : c.W) eps = euler_factor(eps, p);
  {
    PrecisionGuard guard(160);
    std::vector<std::int64_t> S{q};
    for (auto p : c.W) S.push_back(p);
    std::sort(S.begin(), S.end());
    auto chk = verify_stark_rank1(q, K, S, eps, {t}, Real("1e-30"));
    if (!chk.pass) {
      out.reason = "eps' fails the rank one Rubin-Stark check";
      return out;
    }
  }
  auto mT = to_T(eps);
  if (!mT) {
    out.reason = "eps' is not in the T-sublattice";
    return out;
  }
  auto top = D.top.coords(D.top.pairing_of_wedge({*mT}));
  if (!top) throw std::logic_error("unramified_r1: eps' outside the Rubin lattice");

  // eps_{Q,{q},T} = q^{(1-t)/2}
  Rational epsQ = Rational(1) / Rational(bmp::pow(Integer(q), static_cast<unsigned>((t - 1) / 2)));
  auto qT = to_T(scalar_element(q, epsQ));
  if (!qT) {
    out.reason = "eps_Q is not in the T-sublattice";
    return out;
  }
  auto y = solve_left(IMat(D.B.transpose()), *qT);
  if (!y) throw std::logic_error("unramified_r1: eps_Q not invariant");
  auto bot = D.bottom.coords(D.bottom.pairing_of_wedge({*y}));
  if (!bot) throw std::logic_error("unramified_r1: eps_Q outside the bottom lattice");
  out.valid = true;

  IntElement x = IntElement::scalar(C.G, Integer(1));
  for (auto p : c.W) x = x * (IntElement::basis(C.G, C.index(p)) - IntElement::scalar(C.G, Integer(1)));
  auto px = D.loc.project_quot(D.loc.local_coords(x));
  if (!px) throw std::logic_error("unramified_r1: product of Frobenius differences outside I^d");
  TensorElement Yexp(D.bottom.rank(), static_cast<int>(D.qgens.size()));
  for (int a = 0; a < Yexp.rows(); ++a)
    for (int k = 0; k < Yexp.cols(); ++k) Yexp(a, k) = (*bot)(a) * (*px)(k);

  auto Y = injection_preimage(D, higher_norm(D, *top));
  out.in_image = Y.has_value();
  out.rhs = tensor_string(D, Yexp);
  if (!Y) return out;
  out.lhs = tensor_string(D, *Y);
  out.equal = tensor_is_zero(D, TensorElement(*Y - Yexp));
  out.control_rejected = !tensor_is_zero(D, TensorElement(*Y - Integer(2) * Yexp));
  out.trivial = tensor_is_zero(D, Yexp);

  out.bconj = true;
  for (std::size_t s = 0; s < D.top.subsets.size(); ++s) {
    Evaluator e;
    for (std::size_t u = 0; u < D.top.subsets.size(); ++u)
      e.minors.push_back(u == s ? IntElement::scalar(D.G, Integer(1)) : IntElement(D.G));
    auto l = phi_top_quotient(D, e, *top);
    auto rr = phi_H_tensor(D, e, Yexp);
    out.bconj = out.bconj && l && rr && D.target.pres.is_zero(IVec(*l - *rr));
  }
  return out;
}

}  // namespace

std::vector<std::int64_t> real_ray_subgroup(const QuadField& F, std::int64_t n) {
  const std::int64_t N = n * F.f;
  std::vector<std::int64_t> H;
  for (std::int64_t a = 1; a < N; ++a) {
    if (gcd64(a, N) != 1) continue;
    std::int64_t r = a % n;
    if ((r == 1 % n || r == mod(-1, n)) && F.chi(a) == 1) H.push_back(a);
  }
  return H;
}

MultElement cyclotomic_stark_unit(std::int64_t N, const std::vector<std::int64_t>& H, const std::vector<std::int64_t>& T) {
  return norm_over(delta_T(symbol(N, 1), T), half_reps(N, H));
}

MultElement stark_unit_rank1(const QuadField& F, std::int64_t n, const std::vector<std::int64_t>& T) {
  const std::int64_t N = n * F.f;
  return cyclotomic_stark_unit(N, real_ray_subgroup(F, n), T);
}

StarkRank1Check verify_stark_rank1(std::int64_t N, const std::vector<std::int64_t>& H,
                                   const std::vector<std::int64_t>& S, const MultElement& eps,
                                   const std::vector<std::int64_t>& T, const Real& tol) {
  AbelianField L = abelian_field(N, H);
  StarkRank1Check out;
  out.lhs = regulator_rank1(L, eps);
  out.rhs = theta_components(L, S, T, 1);
  out.max_error = component_error(out.lhs, out.rhs);
  out.pass = out.max_error <= tol;
  return out;
}

StarkRank1Check verify_stark_rank1(const QuadField& F, std::int64_t n, const std::vector<std::int64_t>& T,
                                   const Real& tol) {
  const std::int64_t N = n * F.f;
  return verify_stark_rank1(N, real_ray_subgroup(F, n), prime_divisors(N), stark_unit_rank1(F, n, T), T, tol);
}

NormRelationCheck verify_norm_relation(std::int64_t M, std::int64_t ell, const std::vector<std::int64_t>& T) {
  if (M < 3) throw std::invalid_argument("verify_norm_relation: level must be at least 3");
  const std::int64_t N2 = M * ell;
  std::vector<std::int64_t> extra;
  if (M % ell != 0) extra.push_back(ell);
  return norm_relation_core(M, plus_minus_one(M), delta_T(symbol(M, 1), T), N2, plus_minus_one(N2),
                            delta_T(symbol(N2, 1), T), extra);
}

NormRelationCheck verify_norm_relation(const QuadField& F, std::int64_t n, std::int64_t ell,
                                       const std::vector<std::int64_t>& T) {
  const std::int64_t N = n * F.f, N2 = N * ell;
  std::vector<std::int64_t> extra;
  if (N % ell != 0) extra.push_back(ell);
  return norm_relation_core(N, real_ray_subgroup(F, n), stark_unit_rank1(F, n, T), N2,
                            real_ray_subgroup(F, n * ell), stark_unit_rank1(F, n * ell, T), extra);
}

UnramifiedCheck verify_unramified_case(const UnramifiedCase& c) {
  UnramifiedCheck out;
  out.d = static_cast<int>(c.W.size());
  auto fail = [&](const std::string& why) {
    out.reason = why;
    return out;
  };
  if (!is_prime(c.q) || c.q < 3) return fail("q must be an odd prime");
  if (c.k < 1 || (c.q - 1) % c.k != 0) return fail("k must divide q - 1");
  if (c.rprime == 0 && (c.q % 4 != 3 || c.k % 2 == 0)) return fail("r' = 0 needs q = 3 mod 4 and k odd");
  if (c.rprime == 1 && c.k % 2 != 0) return fail("r' = 1 needs k even");
  if (c.rprime != 0 && c.rprime != 1) return fail("r' must be 0 or 1");
  if (!is_prime(c.t) || c.t == c.q) return fail("t must be a prime different from q");
  auto C = cyclic_quotient(c.q, c.k);
  std::vector<std::int64_t> seen;
  for (auto p : c.W) {
    if (!is_prime(p) || p == c.q || p == c.t) return fail("W must consist of primes outside {q, t}");
    if (std::find(seen.begin(), seen.end(), p) != seen.end()) return fail("W has repeated primes");
    seen.push_back(p);
    int idx = C.index(p);
    if (idx == 0) return fail("a prime of W splits completely in L'");
    if (c.rprime == 0 && idx % 2 != 0) return fail("a prime of W does not split in L");
  }
  return c.rprime == 0 ? unramified_r0(c) : unramified_r1(c);
}

}  // namespace starkit
