#include "thom/cobordism.hpp"

#include <algorithm>

#include "thom/error.hpp"

namespace thom {
namespace {

int unit(Field field) { return unit_degree(kind_for(field)); }

// Partitions of class degree exactly dim (none when dim is not a multiple of the unit).
std::vector<Partition> partitions_in_degree(Field field, int dim) {
  if (dim < 0 || dim % unit(field) != 0) return {};
  return partitions_of(dim / unit(field));
}

using FormalTerm = std::pair<Partition, Partition>;

// Expansion of prod_i (sum_{a=0}^{lambda_i} P_a Q_{lambda_i - a}) in the
// two-sided ring of formal generators P_1, P_2, ... and Q_1, Q_2, ...
std::map<FormalTerm, long> cartan_expansion(const Partition& lambda) {
  std::map<std::pair<std::vector<int>, std::vector<int>>, long> terms{{{{}, {}}, 1}};
  for (int part : lambda.parts()) {
    std::map<std::pair<std::vector<int>, std::vector<int>>, long> next;
    for (const auto& [monomial, count] : terms)
      for (int a = 0; a <= part; ++a) {
        auto [left, right] = monomial;
        if (a > 0) left.push_back(a);
        if (part - a > 0) right.push_back(part - a);
        std::sort(left.begin(), left.end(), std::greater<>());
        std::sort(right.begin(), right.end(), std::greater<>());
        next[{left, right}] += count;
      }
    terms = std::move(next);
  }
  std::map<FormalTerm, long> out;
  for (const auto& [monomial, count] : terms) out.emplace(FormalTerm{Partition(monomial.first), Partition(monomial.second)}, count);
  return out;
}

void require_same_field(const CobordismClass& a, const CobordismClass& b, const char* op) {
  if (a.field() != b.field()) throw InvariantError(std::string(op) + ": classes over different fields");
}

}  // namespace

CobordismClass CobordismClass::zero(Field field, int dim) {
  if (dim < 0) return CobordismClass(field, std::nullopt);
  CobordismClass out(field, dim);
  for (const auto& p : partitions_in_degree(field, dim)) out.numbers_.emplace(p, Scalar(0));
  return out;
}

CobordismClass CobordismClass::make(Field field, int dim, const std::map<Partition, Scalar>& numbers) {
  CobordismClass out = zero(field, dim);
  for (const auto& [p, v] : numbers) {
    auto it = out.numbers_.find(p);
    if (it == out.numbers_.end())
      throw InvariantError("partition " + p.to_string() + " does not have class degree " + std::to_string(dim));
    it->second = reduce(field, v);
  }
  return out;
}

CobordismClass CobordismClass::point(Field field) { return make(field, 0, {{Partition(), Scalar(1)}}); }

Scalar CobordismClass::number(const Partition& p) const {
  auto it = numbers_.find(p);
  return it == numbers_.end() ? Scalar(0) : it->second;
}

bool CobordismClass::is_zero() const {
  return std::all_of(numbers_.begin(), numbers_.end(), [](const auto& kv) { return kv.second == 0; });
}

bool equivalent(const CobordismClass& a, const CobordismClass& b) {
  if (a.field() != b.field()) return false;
  if (a.is_void() || b.is_void()) return a.is_zero() && b.is_zero();
  return a == b;
}

CobordismClass operator+(const CobordismClass& a, const CobordismClass& b) {
  require_same_field(a, b, "class sum");
  if (a.is_void() && b.is_void()) return a;
  if (a.is_void()) return b;
  if (b.is_void()) return a;
  if (a.dim() != b.dim()) throw InvariantError("class sum: dimensions differ");
  std::map<Partition, Scalar> sum = a.numbers();
  for (const auto& [p, v] : b.numbers()) sum[p] += v;
  return CobordismClass::make(a.field(), a.dim(), sum);
}

CobordismClass operator*(const Scalar& c, const CobordismClass& a) {
  if (a.is_void()) return a;
  std::map<Partition, Scalar> scaled;
  for (const auto& [p, v] : a.numbers()) scaled.emplace(p, c * v);
  return CobordismClass::make(a.field(), a.dim(), scaled);
}

CobordismClass operator-(const CobordismClass& a, const CobordismClass& b) { return a + Scalar(-1) * b; }

CobordismClass class_product(const CobordismClass& a, const CobordismClass& b) {
  require_same_field(a, b, "class_product");
  const Field field = a.field();
  if (a.is_void() || b.is_void()) return CobordismClass::zero(field, -1);
  const int u = unit(field);
  std::map<Partition, Scalar> numbers;
  for (const auto& lambda : partitions_in_degree(field, a.dim() + b.dim())) {
    Scalar value = 0;
    for (const auto& [term, count] : cartan_expansion(lambda)) {
      if (u * term.first.weight() != a.dim() || u * term.second.weight() != b.dim()) continue;
      value += Scalar(count) * a.number(term.first) * b.number(term.second);
    }
    numbers.emplace(lambda, value);
  }
  return CobordismClass::make(field, a.dim() + b.dim(), numbers);
}

CobordismClass manifold_class(const SpaceModel& space) {
  return numbers_from_series(beta_of(space.tangent), space.dim());
}

CobordismClass numbers_from_series(const BetaSeries& series, int dim) {
  const Field field = series.owner()->field();
  if (dim < 0) return CobordismClass::zero(field, dim);
  std::map<Partition, Scalar> numbers;
  for (const auto& p : partitions_in_degree(field, dim)) numbers.emplace(p, series.coefficient(p).pair());
  return CobordismClass::make(field, dim, numbers);
}

}  // namespace thom
