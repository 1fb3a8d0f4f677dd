#pragma once

#include <map>
#include <optional>
#include <vector>

#include "thom/algebra.hpp"
#include "thom/partition.hpp"

namespace thom {

// Pontrjagin classes live over Q with p_i in degree 4i; Stiefel-Whitney
// classes over F2 with w_i in degree i.
enum class ClassKind { Pontrjagin, StiefelWhitney };

ClassKind kind_for(Field field);
Field field_for(ClassKind kind);
inline int unit_degree(ClassKind kind) { return kind == ClassKind::Pontrjagin ? 4 : 1; }
inline int class_degree(ClassKind kind, const Partition& p) { return unit_degree(kind) * p.weight(); }

// Total characteristic class 1 + c_1 + c_2 + ... with c_i homogeneous.
class TotalClass {
 public:
  TotalClass() = default;
  // The trivial class 1.
  TotalClass(AlgebraPtr owner, ClassKind kind);

  static TotalClass from_components(AlgebraPtr owner, ClassKind kind,
                                    std::map<int, AlgebraElement> components);
  // Splits an inhomogeneous total element by degree. The constant term must be 1.
  static TotalClass from_element(const AlgebraElement& total, ClassKind kind);

  const AlgebraPtr& owner() const { return owner_; }
  ClassKind kind() const { return kind_; }
  // c_i; zero for i < 0 or above the top degree, 1 for i = 0.
  AlgebraElement component(int i) const;
  const std::map<int, AlgebraElement>& components() const { return components_; }
  AlgebraElement total() const;
  int max_index() const { return owner_->top_degree() / unit_degree(kind_); }
  bool is_trivial() const { return components_.empty(); }

  friend bool operator==(const TotalClass& a, const TotalClass& b) {
    return a.owner_ == b.owner_ && a.kind_ == b.kind_ && a.components_ == b.components_;
  }

 private:
  AlgebraPtr owner_;
  ClassKind kind_ = ClassKind::Pontrjagin;
  std::map<int, AlgebraElement> components_;  // nonzero, i >= 1
};

TotalClass whitney_sum(const TotalClass& u, const TotalClass& v);
TotalClass stable_inverse(const TotalClass& u);
// u^{(+) n}; n may be 0.
TotalClass whitney_power(const TotalClass& u, int n);
// Image of a total class under a ring map (pullback or Kunneth inclusion).
TotalClass transport(const LinearMap& ring_map, const TotalClass& u);

// Total class plus rank and optional Euler class of a (possibly virtual)
// bundle. For F2 the Euler class is the top class w_rank.
struct BundleData {
  TotalClass total;
  int rank = 0;
  std::optional<AlgebraElement> euler;

  // Checks euler degree, rank >= 0 when euler is present, and that the
  // classes of an honest bundle vanish above its rank. Fills the F2 euler
  // class from w_rank when absent.
  static BundleData make(TotalClass total, int rank, std::optional<AlgebraElement> euler);
  const AlgebraElement& euler_class() const;
};

struct SpaceModel {
  AlgebraPtr algebra;
  TotalClass tangent;

  static SpaceModel make(AlgebraPtr algebra, TotalClass tangent);
  int dim() const { return algebra->top_degree(); }
  Field field() const { return algebra->field(); }
};

// Truncated partition-indexed symmetric series with coefficients in an
// algebra (monomial symmetric basis). Partitions of class degree above the
// owner's top degree are dropped.
class BetaSeries {
 public:
  BetaSeries() = default;
  // The zero series.
  BetaSeries(AlgebraPtr owner, ClassKind kind);

  static BetaSeries from_coefficients(AlgebraPtr owner, ClassKind kind,
                                      std::map<Partition, AlgebraElement> coeffs);
  static BetaSeries one(const AlgebraPtr& owner, ClassKind kind);

  const AlgebraPtr& owner() const { return owner_; }
  ClassKind kind() const { return kind_; }
  const std::map<Partition, AlgebraElement>& coefficients() const { return coeffs_; }
  AlgebraElement coefficient(const Partition& p) const;
  int max_weight() const { return owner_->top_degree() / unit_degree(kind_); }
  bool is_zero() const { return coeffs_.empty(); }

  // Set when the series is beta_of(u); enables the Whitney-sum shortcut.
  const std::optional<TotalClass>& generator() const { return generator_; }

  friend bool operator==(const BetaSeries& a, const BetaSeries& b) {
    return a.owner_ == b.owner_ && a.kind_ == b.kind_ && a.coeffs_ == b.coeffs_;
  }

 private:
  friend BetaSeries beta_of(const TotalClass& u);
  void set(const Partition& p, AlgebraElement value);

  AlgebraPtr owner_;
  ClassKind kind_ = ClassKind::Pontrjagin;
  std::map<Partition, AlgebraElement> coeffs_;  // nonzero only
  std::optional<TotalClass> generator_;
};

// prod_i (1 + u_1 t_i + u_2 t_i^2 + ...): coefficient at l is prod u_{l_i}.
BetaSeries beta_of(const TotalClass& u);

// Product of symmetric series. Uses whitney_sum when both factors carry a
// generator, otherwise the general kernel.
BetaSeries series_mul(const BetaSeries& s, const BetaSeries& t);
// General product read per monomial, parallel over output partitions.
BetaSeries series_mul_general(const BetaSeries& s, const BetaSeries& t);
BetaSeries series_pow(const BetaSeries& s, int n);

BetaSeries series_scale(const AlgebraElement& c, const BetaSeries& s);
BetaSeries series_add(const BetaSeries& s, const BetaSeries& t);
BetaSeries series_sub(const BetaSeries& s, const BetaSeries& t);
BetaSeries series_negate(const BetaSeries& s);
// Coefficientwise application of a linear map (f^* or f_!).
BetaSeries series_pushpull(const LinearMap& phi, const BetaSeries& s);

}  // namespace thom
