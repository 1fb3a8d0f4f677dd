#include "thom/charclass.hpp"

#include <set>

#include "thom/error.hpp"

namespace thom {

ClassKind kind_for(Field field) {
  return field == Field::Rat ? ClassKind::Pontrjagin : ClassKind::StiefelWhitney;
}

Field field_for(ClassKind kind) { return kind == ClassKind::Pontrjagin ? Field::Rat : Field::F2; }

namespace {

void require_kind_matches(const AlgebraPtr& owner, ClassKind kind) {
  if (field_for(kind) != owner->field())
    throw InvariantError(kind == ClassKind::Pontrjagin ? "Pontrjagin classes need a Q algebra"
                                                       : "Stiefel-Whitney classes need an F2 algebra");
}

void require_compatible(const TotalClass& u, const TotalClass& v, const char* op) {
  if (u.owner() != v.owner()) throw InvariantError(std::string(op) + ": classes live over different algebras");
  if (u.kind() != v.kind()) throw InvariantError(std::string(op) + ": mixing Pontrjagin and Stiefel-Whitney classes");
}

void require_compatible(const BetaSeries& s, const BetaSeries& t, const char* op) {
  if (s.owner() != t.owner()) throw InvariantError(std::string(op) + ": series live over different algebras");
  if (s.kind() != t.kind()) throw InvariantError(std::string(op) + ": series of different kinds");
}

Scalar binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(out);
}

// Sum over splittings b + c = lambda (as exponent vectors) of s_{part(b)} t_{part(c)}.
// Equal parts of lambda are grouped; a group of m copies of v split into
// counts c_0..c_v contributes the multinomial m! / prod c_s!.
AlgebraElement split_sum(const Partition& lambda, const BetaSeries& s, const BetaSeries& t) {
  std::vector<std::pair<int, int>> groups;
  for (int p : lambda.parts()) {
    if (!groups.empty() && groups.back().first == p)
      ++groups.back().second;
    else
      groups.emplace_back(p, 1);
  }
  AlgebraElement acc(s.owner());
  std::vector<int> left, right;
  auto leaf = [&](const Scalar& weight) {
    auto sl = s.coefficients().find(Partition(left));
    if (sl == s.coefficients().end()) return;
    auto tr = t.coefficients().find(Partition(right));
    if (tr == t.coefficients().end()) return;
    acc += weight * (sl->second * tr->second);
  };
  // Assign `remaining` copies of groups[g].first, choosing how many get left part `split`.
  auto rec = [&](auto&& self, std::size_t g, int split, int remaining, const Scalar& weight) -> void {
    if (g == groups.size()) {
      leaf(weight);
      return;
    }
    const int value = groups[g].first;
    if (split == value) {
      for (int i = 0; i < remaining; ++i) {
        left.push_back(value);
      }
      if (g + 1 < groups.size())
        self(self, g + 1, 0, groups[g + 1].second, weight);
      else
        leaf(weight);
      left.resize(left.size() - static_cast<std::size_t>(remaining));
      return;
    }
    for (int count = 0; count <= remaining; ++count) {
      for (int i = 0; i < count; ++i) {
        if (split > 0) left.push_back(split);
        right.push_back(value - split);
      }
      self(self, g, split + 1, remaining - count, weight * binomial(remaining, count));
      for (int i = 0; i < count; ++i) {
        if (split > 0) left.pop_back();
        right.pop_back();
      }
    }
  };
  if (groups.empty()) {
    leaf(Scalar(1));
  } else {
    rec(rec, 0, 0, groups[0].second, Scalar(1));
  }
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------

TotalClass::TotalClass(AlgebraPtr owner, ClassKind kind) : owner_(std::move(owner)), kind_(kind) {
  require_kind_matches(owner_, kind_);
}

TotalClass TotalClass::from_components(AlgebraPtr owner, ClassKind kind,
                                       std::map<int, AlgebraElement> components) {
  TotalClass out(std::move(owner), kind);
  const int unit = unit_degree(kind);
  for (auto& [i, c] : components) {
    if (c.owner() != out.owner_) throw InvariantError("total class component over a different algebra");
    if (i < 1) throw InvariantError("total class components are indexed from 1");
    if (!c.is_homogeneous(unit * i))
      throw InvariantError("component " + std::to_string(i) + " must be homogeneous of degree " +
                           std::to_string(unit * i));
    if (!c.is_zero()) out.components_.emplace(i, std::move(c));
  }
  return out;
}

TotalClass TotalClass::from_element(const AlgebraElement& total, ClassKind kind) {
  const auto& owner = total.owner();
  require_kind_matches(owner, kind);
  if (total.constant_term() != 1) throw InvariantError("total class must have constant term 1");
  const int unit = unit_degree(kind);
  std::map<int, AlgebraElement> comps;
  std::set<int> degrees;
  for (const auto& [idx, c] : total.coeffs()) degrees.insert(owner->degree(idx));
  for (int d : degrees) {
    if (d == 0) continue;
    if (d % unit != 0)
      throw InvariantError("total class has a component in degree " + std::to_string(d) +
                           ", not a multiple of " + std::to_string(unit));
    comps.emplace(d / unit, total.homogeneous_part(d));
  }
  return from_components(owner, kind, std::move(comps));
}

AlgebraElement TotalClass::component(int i) const {
  if (i == 0) return AlgebraElement::one(owner_);
  auto it = components_.find(i);
  return it == components_.end() ? AlgebraElement(owner_) : it->second;
}

AlgebraElement TotalClass::total() const {
  AlgebraElement out = AlgebraElement::one(owner_);
  for (const auto& [i, c] : components_) out += c;
  return out;
}

TotalClass whitney_sum(const TotalClass& u, const TotalClass& v) {
  require_compatible(u, v, "whitney_sum");
  std::map<int, AlgebraElement> comps;
  for (int n = 1; n <= u.max_index(); ++n) {
    AlgebraElement c(u.owner());
    for (int i = 0; i <= n; ++i) {
      if (i > 0 && !u.components().count(i)) continue;
      if (i < n && !v.components().count(n - i)) continue;
      c += u.component(i) * v.component(n - i);
    }
    comps.emplace(n, std::move(c));
  }
  return TotalClass::from_components(u.owner(), u.kind(), std::move(comps));
}

TotalClass stable_inverse(const TotalClass& u) {
  std::map<int, AlgebraElement> inv;
  auto get = [&](int i) { return i == 0 ? AlgebraElement::one(u.owner()) : inv.at(i); };
  for (int n = 1; n <= u.max_index(); ++n) {
    AlgebraElement c(u.owner());
    for (const auto& [i, ui] : u.components()) {
      if (i > n) break;
      c -= ui * get(n - i);
    }
    inv.emplace(n, std::move(c));
  }
  return TotalClass::from_components(u.owner(), u.kind(), std::move(inv));
}

TotalClass whitney_power(const TotalClass& u, int n) {
  if (n < 0) return whitney_power(stable_inverse(u), -n);
  TotalClass out(u.owner(), u.kind());
  for (int i = 0; i < n; ++i) out = whitney_sum(out, u);
  return out;
}

TotalClass transport(const LinearMap& ring_map, const TotalClass& u) {
  if (!ring_map.is_ring_map()) throw InvariantError("total classes transport only along ring maps");
  if (ring_map.source() != u.owner()) throw InvariantError("transport: class is not over the map's source");
  std::map<int, AlgebraElement> comps;
  for (const auto& [i, c] : u.components()) {
    if (unit_degree(u.kind()) * i > ring_map.target()->top_degree()) continue;
    comps.emplace(i, ring_map(c));
  }
  return TotalClass::from_components(ring_map.target(), u.kind(), std::move(comps));
}

// ---------------------------------------------------------------------------

BundleData BundleData::make(TotalClass total, int rank, std::optional<AlgebraElement> euler) {
  BundleData out{std::move(total), rank, std::move(euler)};
  const auto& owner = out.total.owner();
  const bool mod2 = out.total.kind() == ClassKind::StiefelWhitney;
  if (rank >= 0) {
    for (const auto& [i, c] : out.total.components()) {
      const int real_rank_needed = mod2 ? i : 2 * i;
      if (real_rank_needed > rank)
        throw InvariantError("bundle of rank " + std::to_string(rank) + " has a nonzero class of index " +
                             std::to_string(i));
    }
  }
  if (mod2 && rank >= 0) {
    AlgebraElement top = out.total.component(rank);
    if (out.euler && *out.euler != top)
      throw InvariantError("F2 Euler class must equal the top Stiefel-Whitney class w_" + std::to_string(rank));
    out.euler = top;
  }
  if (out.euler) {
    if (rank < 0) throw InvariantError("a bundle with an Euler class must have rank >= 0");
    if (out.euler->owner() != owner) throw InvariantError("Euler class lives over a different algebra");
    if (!out.euler->is_homogeneous(rank))
      throw InvariantError("Euler class must be homogeneous of degree " + std::to_string(rank));
  }
  return out;
}

const AlgebraElement& BundleData::euler_class() const {
  if (!euler) throw InvariantError("operation requires an Euler class but the bundle has none");
  return *euler;
}

SpaceModel SpaceModel::make(AlgebraPtr algebra, TotalClass tangent) {
  if (tangent.owner() != algebra) throw InvariantError("tangent class lives over a different algebra");
  if (tangent.kind() != kind_for(algebra->field())) throw InvariantError("tangent class kind does not match field");
  return SpaceModel{std::move(algebra), std::move(tangent)};
}

// ---------------------------------------------------------------------------

BetaSeries::BetaSeries(AlgebraPtr owner, ClassKind kind) : owner_(std::move(owner)), kind_(kind) {
  require_kind_matches(owner_, kind_);
}

BetaSeries BetaSeries::from_coefficients(AlgebraPtr owner, ClassKind kind,
                                         std::map<Partition, AlgebraElement> coeffs) {
  BetaSeries out(std::move(owner), kind);
  for (auto& [p, c] : coeffs) {
    if (c.owner() != out.owner_) throw InvariantError("series coefficient over a different algebra");
    out.set(p, std::move(c));
  }
  return out;
}

BetaSeries BetaSeries::one(const AlgebraPtr& owner, ClassKind kind) {
  return beta_of(TotalClass(owner, kind));
}

void BetaSeries::set(const Partition& p, AlgebraElement value) {
  if (class_degree(kind_, p) > owner_->top_degree() || value.is_zero()) {
    coeffs_.erase(p);
    return;
  }
  coeffs_.insert_or_assign(p, std::move(value));
}

AlgebraElement BetaSeries::coefficient(const Partition& p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? AlgebraElement(owner_) : it->second;
}

BetaSeries beta_of(const TotalClass& u) {
  BetaSeries out(u.owner(), u.kind());
  const auto parts = partitions_up_to(out.max_weight());
  std::vector<AlgebraElement> values(parts.size());
  const long n = static_cast<long>(parts.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    AlgebraElement value = AlgebraElement::one(u.owner());
    for (int part : parts[i].parts()) {
      if (!u.components().count(part)) {
        value = AlgebraElement(u.owner());
        break;
      }
      value = value * u.component(part);
      if (value.is_zero()) break;
    }
    values[i] = std::move(value);
  }
  for (std::size_t i = 0; i < parts.size(); ++i) out.set(parts[i], std::move(values[i]));
  out.generator_ = u;
  return out;
}

BetaSeries series_mul_general(const BetaSeries& s, const BetaSeries& t) {
  require_compatible(s, t, "series_mul");
  std::map<Partition, AlgebraElement> out;
  if (s.is_zero() || t.is_zero()) return BetaSeries(s.owner(), s.kind());
  const auto parts = partitions_up_to(s.max_weight());
  std::vector<AlgebraElement> values(parts.size());
  const long n = static_cast<long>(parts.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) values[i] = split_sum(parts[i], s, t);
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (!values[i].is_zero()) out.emplace(parts[i], std::move(values[i]));
  return BetaSeries::from_coefficients(s.owner(), s.kind(), std::move(out));
}

BetaSeries series_mul(const BetaSeries& s, const BetaSeries& t) {
  require_compatible(s, t, "series_mul");
  if (s.generator() && t.generator()) return beta_of(whitney_sum(*s.generator(), *t.generator()));
  return series_mul_general(s, t);
}

BetaSeries series_pow(const BetaSeries& s, int n) {
  if (n < 0) throw InvariantError("series_pow: negative exponent");
  BetaSeries out = BetaSeries::one(s.owner(), s.kind());
  for (int i = 0; i < n; ++i) out = series_mul(out, s);
  return out;
}

BetaSeries series_scale(const AlgebraElement& c, const BetaSeries& s) {
  if (c.owner() != s.owner()) throw InvariantError("series_scale: scalar lives over a different algebra");
  std::map<Partition, AlgebraElement> out;
  for (const auto& [p, v] : s.coefficients()) out.emplace(p, c * v);
  return BetaSeries::from_coefficients(s.owner(), s.kind(), std::move(out));
}

BetaSeries series_add(const BetaSeries& s, const BetaSeries& t) {
  require_compatible(s, t, "series_add");
  auto out = s.coefficients();
  for (const auto& [p, v] : t.coefficients()) {
    auto [it, inserted] = out.try_emplace(p, v);
    if (!inserted) it->second += v;
  }
  return BetaSeries::from_coefficients(s.owner(), s.kind(), std::move(out));
}

BetaSeries series_negate(const BetaSeries& s) {
  std::map<Partition, AlgebraElement> out;
  for (const auto& [p, v] : s.coefficients()) out.emplace(p, -v);
  return BetaSeries::from_coefficients(s.owner(), s.kind(), std::move(out));
}

BetaSeries series_sub(const BetaSeries& s, const BetaSeries& t) {
  require_compatible(s, t, "series_sub");
  return series_add(s, series_negate(t));
}

BetaSeries series_pushpull(const LinearMap& phi, const BetaSeries& s) {
  if (phi.source() != s.owner()) throw InvariantError("series_pushpull: series is not over the map's source");
  std::map<Partition, AlgebraElement> out;
  for (const auto& [p, v] : s.coefficients()) {
    if (class_degree(s.kind(), p) > phi.target()->top_degree()) continue;
    out.emplace(p, phi(v));
  }
  return BetaSeries::from_coefficients(phi.target(), s.kind(), std::move(out));
}

}  // namespace thom
