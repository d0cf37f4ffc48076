#pragma once

#include "starkit/exactlat.hpp"

#include <memory>
#include <vector>

namespace Eigen {
template <>
struct NumTraits<starkit::Cx> : GenericNumTraits<starkit::Cx> {
  using Real = starkit::Real;
  using NonInteger = starkit::Cx;
  using Nested = starkit::Cx;
  using Literal = starkit::Cx;
  enum { IsComplex = 1, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 4, AddCost = 8, MulCost = 16 };
};
}  // namespace Eigen

namespace starkit {

// Product of cyclic groups Z/d_0 x ... x Z/d_{k-1}, elements indexed in
// mixed radix with the last factor varying fastest.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<int>{}) {}
  explicit FiniteAbelianGroup(std::vector<int> orders);

  int size() const { return n_; }
  int rank() const { return static_cast<int>(orders_.size()); }
  const std::vector<int>& orders() const { return orders_; }
  int exponent() const { return exponent_; }

  int index(const std::vector<int>& e) const;
  std::vector<int> exps(int g) const { return exps_[g]; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int pow(int a, long long k) const;
  int identity() const { return 0; }
  int order_of(int a) const;
  int generator(int i) const;  // e_i
  std::vector<int> closure(const std::vector<int>& gens) const;
  bool is_subgroup(const std::vector<int>& elems) const;
  // exp(2 pi i <k, g>): returns a with value zeta_exponent^a
  int char_angle(const std::vector<int>& k, int g) const;
  std::vector<std::vector<int>> characters() const;

 private:
  std::vector<int> orders_;
  int n_ = 1;
  int exponent_ = 1;
  std::vector<std::vector<int>> exps_;
  std::vector<int> mul_;
  std::vector<int> inv_;
};

using GroupPtr = std::shared_ptr<const FiniteAbelianGroup>;

GroupPtr make_group(std::vector<int> orders);

// G -> G/H with a section.
struct QuotientMap {
  GroupPtr quotient;
  std::vector<int> proj;  // |G| entries
  std::vector<int> lift;  // |G/H| entries
};

QuotientMap quotient_group(const GroupPtr& G, const std::vector<int>& H);

template <class S>
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(GroupPtr G) : G_(std::move(G)), c_(Vec<S>::Constant(G_->size(), S(0))) {}
  GroupRingElement(GroupPtr G, Vec<S> c) : G_(std::move(G)), c_(std::move(c)) {}

  static GroupRingElement basis(GroupPtr G, int g, S coef = S(1)) {
    GroupRingElement x(G);
    x.c_(g) = coef;
    return x;
  }
  static GroupRingElement scalar(GroupPtr G, S v) { return basis(std::move(G), 0, std::move(v)); }

  const GroupPtr& group() const { return G_; }
  const Vec<S>& coeffs() const { return c_; }
  Vec<S>& coeffs() { return c_; }
  const S& operator[](int g) const { return c_(g); }
  S& operator[](int g) { return c_(g); }

  GroupRingElement operator+(const GroupRingElement& o) const { return {G_, Vec<S>(c_ + o.c_)}; }
  GroupRingElement operator-(const GroupRingElement& o) const { return {G_, Vec<S>(c_ - o.c_)}; }
  GroupRingElement operator-() const { return {G_, Vec<S>(-c_)}; }
  GroupRingElement& operator+=(const GroupRingElement& o) {
    c_ += o.c_;
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& o) {
    c_ -= o.c_;
    return *this;
  }
  GroupRingElement operator*(const GroupRingElement& o) const {
    GroupRingElement r(G_);
    const int n = G_->size();
    for (int a = 0; a < n; ++a) {
      if (c_(a) == S(0)) continue;
      for (int b = 0; b < n; ++b) {
        if (o.c_(b) == S(0)) continue;
        r.c_(G_->mul(a, b)) += c_(a) * o.c_(b);
      }
    }
    return r;
  }
  GroupRingElement& operator*=(const GroupRingElement& o) { return *this = *this * o; }
  GroupRingElement scaled(const S& s) const { return {G_, Vec<S>(c_ * s)}; }
  // multiplication by a group element
  GroupRingElement shifted(int g) const {
    GroupRingElement r(G_);
    for (int a = 0; a < G_->size(); ++a) r.c_(G_->mul(g, a)) = c_(a);
    return r;
  }
  bool operator==(const GroupRingElement& o) const { return c_ == o.c_; }
  bool operator!=(const GroupRingElement& o) const { return !(*this == o); }
  bool is_zero() const {
    for (int i = 0; i < c_.size(); ++i)
      if (c_(i) != S(0)) return false;
    return true;
  }
  S augmentation() const {
    S s(0);
    for (int i = 0; i < c_.size(); ++i) s += c_(i);
    return s;
  }
  // sum a_g g^{-1}
  GroupRingElement involution() const {
    GroupRingElement r(G_);
    for (int a = 0; a < G_->size(); ++a) r.c_(G_->inv(a)) = c_(a);
    return r;
  }

 private:
  GroupPtr G_;
  Vec<S> c_;
};

using IntElement = GroupRingElement<Integer>;
using RatElement = GroupRingElement<Rational>;
using CxElement = GroupRingElement<Cx>;

IntElement norm_element(const GroupPtr& G, const std::vector<int>& H);
// image under the projection G -> G/H
IntElement push_forward(const IntElement& x, const QuotientMap& q);
RatElement to_rational(const IntElement& x);
CxElement to_complex(const IntElement& x);
CxElement to_complex(const RatElement& x);

// Z-basis (Hermite rows) of I_H^d = Z[G] I(H)^d inside Z^{|G|}; d = 0 gives Z[G].
IMat augmentation_power(const GroupPtr& G, const std::vector<int>& H, int d);
// Z-basis of I(H)^d inside Z[H] in coordinates of the listed elements of H.
IMat augmentation_power_local(const GroupPtr& G, const std::vector<int>& H, int d);
bool in_augmentation_power(const IntElement& x, const std::vector<int>& H, int d);

// Coordinates of x in the row lattice spanned by an echelon basis, if x lies in it.
std::optional<IVec> echelon_coords(const IMat& basis, const IVec& x);

// Q_H^d = I_H^d / I_H^{d+1}.
struct AugQuotient {
  GroupPtr G;
  std::vector<int> H;
  int d = 0;
  IMat basis;  // I_H^d rows
  Presentation pres;
  // nullopt when x is not in I_H^d
  std::optional<IVec> project(const IntElement& x) const;
  Integer order() const { return pres.order(); }
};

AugQuotient aug_quotient(const GroupPtr& G, const std::vector<int>& H, int d);

// R_d = Z[H] / I(H)^{d+1} and Q(H)^d = I(H)^d / I(H)^{d+1}, in coordinates of
// the listed elements of H.
struct LocalAug {
  GroupPtr G;
  std::vector<int> H;
  std::vector<int> pos;  // position of a group element inside H, -1 outside
  int d = 0;
  IMat ideal_d;      // I(H)^d
  IMat ideal_next;   // I(H)^{d+1}
  Presentation ring;  // Z[H]/I(H)^{d+1}
  Presentation quot;  // I(H)^d/I(H)^{d+1}
  IVec local_coords(const IntElement& x) const;  // x supported on H
  std::optional<IVec> project_quot(const IVec& local) const;
  // Z[G]-element supported on H from local coordinates
  IntElement to_group(const IVec& local) const;
  // lifts of the generators of Q(H)^d as elements of Z[H] (local coordinates)
  std::vector<IVec> quot_generators() const;
};

LocalAug local_aug(const GroupPtr& G, const std::vector<int>& H, int d);

struct EqaugCheck {
  bool well_defined = false;
  bool surjective = false;
  bool orders_match = false;
  bool bijective() const { return well_defined && surjective && orders_match; }
  Integer source_order, target_order;
};

// Z[G/H] (x) Q(H)^d -> Q_H^d, sigma-bar (x) a |-> sigma~ a
EqaugCheck check_eqaug(const GroupPtr& G, const std::vector<int>& H, int d);
// image of sum_k sigma~_k a_k given local coordinates per coset representative
std::optional<IVec> eqaug_map(const AugQuotient& target, const LocalAug& local, const QuotientMap& q,
                              const std::vector<std::pair<int, IVec>>& terms);

// sum_{i=1}^{l-2} i gamma^i for a generator gamma of a cyclic subgroup of order l-1
IntElement kolyvagin_derivative(const GroupPtr& G, int gamma, long long l);

// e_chi = (1/|G|) sum chi(g) g^{-1}
CxElement idempotent(const GroupPtr& G, const std::vector<int>& chi);
Cx char_value(const GroupPtr& G, const std::vector<int>& chi, int g);
// sum_g x_g chi(g)
Cx char_apply(const CxElement& x, const std::vector<int>& chi);

}  // namespace starkit
