#pragma once

#include <map>
#include <optional>

#include "thom/charclass.hpp"
#include "thom/partition.hpp"
#include "thom/scalar.hpp"

namespace thom {

// Characteristic-number vector of a closed manifold: Pontrjagin numbers over
// Q, Stiefel-Whitney numbers over F2. Holds an entry for every partition of
// class degree exactly dim. Negative formal dimension is the VOID zero class.
class CobordismClass {
 public:
  static CobordismClass zero(Field field, int dim);
  // Entries not given are zero; partitions of the wrong degree are rejected.
  static CobordismClass make(Field field, int dim, const std::map<Partition, Scalar>& numbers);
  // Class of a point: dim 0, [] -> 1.
  static CobordismClass point(Field field);

  Field field() const { return field_; }
  bool is_void() const { return !dim_; }
  // Formal dimension; negative for VOID classes.
  int dim() const { return dim_.value_or(-1); }
  const std::map<Partition, Scalar>& numbers() const { return numbers_; }
  Scalar number(const Partition& p) const;
  bool is_zero() const;

  friend bool operator==(const CobordismClass&, const CobordismClass&) = default;

 private:
  CobordismClass(Field field, std::optional<int> dim) : field_(field), dim_(dim) {}

  Field field_ = Field::Rat;
  std::optional<int> dim_;
  std::map<Partition, Scalar> numbers_;
};

// Equality where a VOID class matches any zero class.
bool equivalent(const CobordismClass& a, const CobordismClass& b);

CobordismClass operator+(const CobordismClass& a, const CobordismClass& b);
CobordismClass operator-(const CobordismClass& a, const CobordismClass& b);
CobordismClass operator*(const Scalar& c, const CobordismClass& a);

// Numbers of the product manifold from the numbers of the factors, through
// the Cartan expansion p_j(xi + eta) = sum_a p_a(xi) p_{j-a}(eta).
CobordismClass class_product(const CobordismClass& a, const CobordismClass& b);

// Characteristic numbers <p_lambda(T), [M]> of a space model.
CobordismClass manifold_class(const SpaceModel& space);

// Numbers read from a pushed-forward series: entry lambda is the pairing of
// the coefficient at lambda, for partitions of class degree `dim`.
CobordismClass numbers_from_series(const BetaSeries& series, int dim);

}  // namespace thom
