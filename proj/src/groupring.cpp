#include "starkit/groupring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace starkit {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  n_ = 1;
  exponent_ = 1;
  for (int d : orders_) {
    if (d < 1) throw std::invalid_argument("cyclic factor of order < 1");
    n_ *= d;
    exponent_ = std::lcm(exponent_, d);
  }
  exps_.resize(n_);
  for (int g = 0; g < n_; ++g) {
    std::vector<int> e(orders_.size());
    int r = g;
    for (int i = rank() - 1; i >= 0; --i) {
      e[i] = r % orders_[i];
      r /= orders_[i];
    }
    exps_[g] = std::move(e);
  }
  mul_.resize(static_cast<std::size_t>(n_) * n_);
  inv_.resize(n_);
  for (int a = 0; a < n_; ++a) {
    std::vector<int> e(orders_.size());
    for (int i = 0; i < rank(); ++i) e[i] = (orders_[i] - exps_[a][i]) % orders_[i];
    inv_[a] = index(e);
    for (int b = 0; b < n_; ++b) {
      for (int i = 0; i < rank(); ++i) e[i] = (exps_[a][i] + exps_[b][i]) % orders_[i];
      mul_[static_cast<std::size_t>(a) * n_ + b] = index(e);
    }
  }
}

int FiniteAbelianGroup::index(const std::vector<int>& e) const {
  int g = 0;
  for (int i = 0; i < rank(); ++i) {
    int v = e[i] % orders_[i];
    if (v < 0) v += orders_[i];
    g = g * orders_[i] + v;
  }
  return g;
}

int FiniteAbelianGroup::pow(int a, long long k) const {
  std::vector<int> e(orders_.size());
  for (int i = 0; i < rank(); ++i) e[i] = static_cast<int>(mod(exps_[a][i] * k, orders_[i]));
  return index(e);
}

int FiniteAbelianGroup::order_of(int a) const {
  int o = 1;
  for (int i = 0; i < rank(); ++i) o = std::lcm(o, orders_[i] / std::gcd(orders_[i], exps_[a][i]));
  return o;
}

int FiniteAbelianGroup::generator(int i) const {
  std::vector<int> e(orders_.size(), 0);
  e[i] = 1;
  return index(e);
}

std::vector<int> FiniteAbelianGroup::closure(const std::vector<int>& gens) const {
  std::vector<char> in(n_, 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int g : gens) {
      int h = mul(elems[i], g);
      if (!in[h]) {
        in[h] = 1;
        elems.push_back(h);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool FiniteAbelianGroup::is_subgroup(const std::vector<int>& elems) const {
  std::set<int> s(elems.begin(), elems.end());
  if (!s.count(0)) return false;
  for (int a : s)
    for (int b : s)
      if (!s.count(mul(a, inv(b)))) return false;
  return true;
}

int FiniteAbelianGroup::char_angle(const std::vector<int>& k, int g) const {
  long long a = 0;
  for (int i = 0; i < rank(); ++i) a += static_cast<long long>(k[i]) * exps_[g][i] * (exponent_ / orders_[i]);
  return static_cast<int>(mod(a, exponent_));
}

std::vector<std::vector<int>> FiniteAbelianGroup::characters() const {
  std::vector<std::vector<int>> out;
  for (int g = 0; g < n_; ++g) out.push_back(exps_[g]);
  return out;
}

GroupPtr make_group(std::vector<int> orders) { return std::make_shared<FiniteAbelianGroup>(std::move(orders)); }

QuotientMap quotient_group(const GroupPtr& G, const std::vector<int>& H) {
  const int k = G->rank();
  IMat R = IMat::Zero(k + static_cast<int>(H.size()), k);
  for (int i = 0; i < k; ++i) R(i, i) = G->orders()[i];
  for (std::size_t j = 0; j < H.size(); ++j) {
    auto e = G->exps(H[j]);
    for (int i = 0; i < k; ++i) R(k + static_cast<int>(j), i) = e[i];
  }
  std::vector<int> qorders;
  std::vector<int> cols;
  IMat V = identity_matrix(k);
  if (k > 0) {
    auto s = snf(R);
    V = s.V;
    for (int i = 0; i < k; ++i) {
      Integer d = s.D(i, i);
      if (d != 1) {
        qorders.push_back(static_cast<int>(to_i64(d)));
        cols.push_back(i);
      }
    }
  }
  QuotientMap q;
  q.quotient = make_group(qorders);
  q.proj.resize(G->size());
  q.lift.assign(q.quotient->size(), -1);
  for (int g = 0; g < G->size(); ++g) {
    auto e = G->exps(g);
    std::vector<int> y(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      Integer s = 0;
      for (int i = 0; i < k; ++i) s += Integer(e[i]) * V(i, cols[c]);
      y[c] = static_cast<int>(to_i64(mod(s, Integer(qorders[c]))));
    }
    int idx = q.quotient->index(y);
    q.proj[g] = idx;
    if (q.lift[idx] < 0) q.lift[idx] = g;
  }
  return q;
}

IntElement norm_element(const GroupPtr& G, const std::vector<int>& H) {
  IntElement x(G);
  for (int h : H) x[h] += 1;
  return x;
}

IntElement push_forward(const IntElement& x, const QuotientMap& q) {
  IntElement r(q.quotient);
  for (int g = 0; g < x.group()->size(); ++g)
    if (x[g] != 0) r[q.proj[g]] += x[g];
  return r;
}

RatElement to_rational(const IntElement& x) {
  RatElement r(x.group());
  for (int g = 0; g < x.group()->size(); ++g) r[g] = Rational(x[g]);
  return r;
}

CxElement to_complex(const IntElement& x) {
  CxElement r(x.group());
  for (int g = 0; g < x.group()->size(); ++g) r[g] = Cx(Real(x[g]));
  return r;
}

CxElement to_complex(const RatElement& x) {
  CxElement r(x.group());
  for (int g = 0; g < x.group()->size(); ++g) r[g] = Cx(Real(numerator(x[g])) / Real(denominator(x[g])));
  return r;
}

namespace {

std::vector<int> subgroup_generators(const GroupPtr& G, const std::vector<int>& H) {
  // greedy generating set of H
  std::vector<int> gens;
  std::vector<int> span{0};
  for (int h : H) {
    if (std::binary_search(span.begin(), span.end(), h)) continue;
    gens.push_back(h);
    span = G->closure(gens);
  }
  return gens;
}

IMat times_generators(const GroupPtr& G, const IMat& B, const std::vector<int>& gens,
                      const std::vector<int>* pos, const std::vector<int>* elems) {
  const int dim = static_cast<int>(B.cols());
  IMat out = IMat::Zero(B.rows() * static_cast<int>(gens.size()), dim);
  int r = 0;
  for (int i = 0; i < B.rows(); ++i) {
    for (int h : gens) {
      for (int j = 0; j < dim; ++j) {
        if (B(i, j) == 0) continue;
        int g = elems ? (*elems)[j] : j;
        int gh = G->mul(g, h);
        int col = pos ? (*pos)[gh] : gh;
        out(r, col) += B(i, j);
        out(r, j) -= B(i, j);
      }
      ++r;
    }
  }
  return out;
}

}  // namespace

IMat augmentation_power(const GroupPtr& G, const std::vector<int>& H, int d) {
  IMat B = identity_matrix(G->size());
  auto gens = subgroup_generators(G, H);
  for (int k = 0; k < d; ++k) {
    if (gens.empty()) return IMat(0, G->size());
    B = hnf_basis(times_generators(G, B, gens, nullptr, nullptr));
  }
  return B;
}

IMat augmentation_power_local(const GroupPtr& G, const std::vector<int>& H, int d) {
  std::vector<int> pos(G->size(), -1);
  for (std::size_t i = 0; i < H.size(); ++i) pos[H[i]] = static_cast<int>(i);
  IMat B = identity_matrix(static_cast<int>(H.size()));
  auto gens = subgroup_generators(G, H);
  for (int k = 0; k < d; ++k) {
    if (gens.empty()) return IMat(0, static_cast<int>(H.size()));
    B = hnf_basis(times_generators(G, B, gens, &pos, &H));
  }
  return B;
}

std::optional<IVec> echelon_coords(const IMat& basis, const IVec& x) {
  IVec rem = x;
  IVec c = IVec::Zero(basis.rows());
  int col = 0;
  for (int i = 0; i < basis.rows(); ++i) {
    while (col < basis.cols() && basis(i, col) == 0) {
      if (rem(col) != 0) return std::nullopt;
      ++col;
    }
    if (col == basis.cols()) break;
    if (rem(col) % basis(i, col) != 0) return std::nullopt;
    c(i) = rem(col) / basis(i, col);
    if (c(i) != 0)
      for (int j = col; j < basis.cols(); ++j)
        if (basis(i, j) != 0) rem(j) -= c(i) * basis(i, j);
    ++col;
  }
  for (int j = 0; j < rem.size(); ++j)
    if (rem(j) != 0) return std::nullopt;
  return c;
}

bool in_augmentation_power(const IntElement& x, const std::vector<int>& H, int d) {
  return echelon_coords(augmentation_power(x.group(), H, d), x.coeffs()).has_value();
}

namespace {

Presentation relative_quotient(const IMat& outer, const IMat& inner) {
  IMat sub(inner.rows(), outer.rows());
  for (int i = 0; i < inner.rows(); ++i) {
    auto c = echelon_coords(outer, inner.row(i).transpose());
    if (!c) throw std::logic_error("relative_quotient: inner not contained in outer");
    sub.row(i) = c->transpose();
  }
  return quotient_structure(sub, static_cast<int>(outer.rows()));
}

}  // namespace

std::optional<IVec> AugQuotient::project(const IntElement& x) const {
  auto c = echelon_coords(basis, x.coeffs());
  if (!c) return std::nullopt;
  return pres.project(*c);
}

AugQuotient aug_quotient(const GroupPtr& G, const std::vector<int>& H, int d) {
  AugQuotient q;
  q.G = G;
  q.H = H;
  q.d = d;
  q.basis = augmentation_power(G, H, d);
  IMat next = augmentation_power(G, H, d + 1);
  q.pres = relative_quotient(q.basis, next);
  return q;
}

IVec LocalAug::local_coords(const IntElement& x) const {
  IVec v = IVec::Zero(static_cast<int>(H.size()));
  for (int g = 0; g < G->size(); ++g) {
    if (x[g] == 0) continue;
    if (pos[g] < 0) throw std::invalid_argument("element not supported on H");
    v(pos[g]) = x[g];
  }
  return v;
}

std::optional<IVec> LocalAug::project_quot(const IVec& local) const {
  auto c = echelon_coords(ideal_d, local);
  if (!c) return std::nullopt;
  return quot.project(*c);
}

IntElement LocalAug::to_group(const IVec& local) const {
  IntElement x(G);
  for (std::size_t i = 0; i < H.size(); ++i) x[H[i]] = local(static_cast<int>(i));
  return x;
}

std::vector<IVec> LocalAug::quot_generators() const {
  std::vector<IVec> out;
  for (int k = 0; k < quot.size(); ++k) out.push_back((quot.lift.row(k) * ideal_d).transpose());
  return out;
}

LocalAug local_aug(const GroupPtr& G, const std::vector<int>& H, int d) {
  LocalAug a;
  a.G = G;
  a.H = H;
  a.d = d;
  a.pos.assign(G->size(), -1);
  for (std::size_t i = 0; i < H.size(); ++i) a.pos[H[i]] = static_cast<int>(i);
  a.ideal_d = augmentation_power_local(G, H, d);
  a.ideal_next = augmentation_power_local(G, H, d + 1);
  a.ring = quotient_structure(a.ideal_next, static_cast<int>(H.size()));
  a.quot = relative_quotient(a.ideal_d, a.ideal_next);
  return a;
}

std::optional<IVec> eqaug_map(const AugQuotient& target, const LocalAug& local, const QuotientMap& q,
                              const std::vector<std::pair<int, IVec>>& terms) {
  IntElement x(target.G);
  for (auto& [coset, a] : terms) x += local.to_group(a).shifted(q.lift[coset]);
  return target.project(x);
}

EqaugCheck check_eqaug(const GroupPtr& G, const std::vector<int>& H, int d) {
  EqaugCheck res;
  auto target = aug_quotient(G, H, d);
  auto local = local_aug(G, H, d);
  auto q = quotient_group(G, H);
  auto gens = local.quot_generators();
  res.source_order = bmp::pow(local.quot.order(), static_cast<unsigned>(q.quotient->size()));
  res.target_order = target.order();
  res.orders_match = res.source_order == res.target_order;
  // independence of the coset lift: sigma~ h a = sigma~ a in Q_H^d
  res.well_defined = true;
  for (int c = 0; c < q.quotient->size() && res.well_defined; ++c) {
    for (auto& a : gens) {
      auto base = eqaug_map(target, local, q, {{c, a}});
      if (!base) {
        res.well_defined = false;
        break;
      }
      for (int h : H) {
        IntElement x = local.to_group(a).shifted(G->mul(q.lift[c], h));
        auto img = target.project(x);
        if (!img || *img != *base) {
          res.well_defined = false;
          break;
        }
      }
    }
  }
  // surjectivity: images together with the relations generate everything
  const int k = target.pres.size();
  std::vector<IVec> imgs;
  for (int c = 0; c < q.quotient->size(); ++c)
    for (auto& a : gens) {
      auto img = eqaug_map(target, local, q, {{c, a}});
      if (img) imgs.push_back(*img);
    }
  IMat M = IMat::Zero(static_cast<int>(imgs.size()) + k, k);
  for (std::size_t i = 0; i < imgs.size(); ++i) M.row(i) = imgs[i].transpose();
  for (int i = 0; i < k; ++i) M(static_cast<int>(imgs.size()) + i, i) = target.pres.moduli[i];
  if (k == 0) {
    res.surjective = true;
  } else {
    auto s = snf(M);
    res.surjective = s.rank == k;
    for (int i = 0; i < s.rank; ++i)
      if (s.D(i, i) != 1) res.surjective = false;
  }
  return res;
}

IntElement kolyvagin_derivative(const GroupPtr& G, int gamma, long long l) {
  if (G->order_of(gamma) != l - 1) throw std::invalid_argument("kolyvagin_derivative: gamma is not a generator of order l-1");
  IntElement D(G);
  int g = gamma;
  for (long long i = 1; i <= l - 2; ++i) {
    D[g] += Integer(i);
    g = G->mul(g, gamma);
  }
  return D;
}

Cx char_value(const GroupPtr& G, const std::vector<int>& chi, int g) {
  return root_of_unity(G->char_angle(chi, g), G->exponent());
}

CxElement idempotent(const GroupPtr& G, const std::vector<int>& chi) {
  CxElement e(G);
  Real inv = Real(1) / Real(G->size());
  for (int g = 0; g < G->size(); ++g) {
    Cx v = char_value(G, chi, g);
    e[G->inv(g)] = Cx(v.re * inv, v.im * inv);
  }
  return e;
}

Cx char_apply(const CxElement& x, const std::vector<int>& chi) {
  Cx s;
  for (int g = 0; g < x.group()->size(); ++g) s += x[g] * char_value(x.group(), chi, g);
  return s;
}

}  // namespace starkit
