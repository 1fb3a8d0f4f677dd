#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "thom/scalar.hpp"

namespace thom {

class GradedAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

// Sparse coefficient vector over the basis of an algebra. Never stores zeros.
using Coefficients = std::map<std::uint32_t, Scalar>;

struct Generator {
  std::string name;
  int degree = 1;
  int nilpotency = 2;  // g^nilpotency = 0
};

struct BasisEntry {
  std::string label;
  int degree = 0;
};

// Product of two basis elements in an algebra given by structure constants.
struct StructureConstant {
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  Coefficients product;
};

// Finite graded commutative algebra over Q or F2 with a fundamental class.
//
// Basis index 0 is always the unit. Two representations share this class:
// monomial algebras (tensor products of truncated polynomial rings, whose
// basis is indexed in mixed radix so products are index sums) and explicit
// algebras given by a structure-constant table.
class GradedAlgebra {
 public:
  // Q[g1..gm]/(gi^ni) or its F2 analogue. `dim` must equal the degree of the
  // top monomial prod gi^(ni-1), which becomes the fundamental monomial.
  static AlgebraPtr truncated_poly(std::vector<Generator> gens, Field field, int dim);

  // Explicit basis with structure constants for products of positive-degree
  // basis elements; missing pairs multiply to zero. Checks grading,
  // commutativity and associativity eagerly.
  static AlgebraPtr from_structure_constants(Field field, std::vector<BasisEntry> basis,
                                             const std::vector<StructureConstant>& table,
                                             std::uint32_t fundamental);

  // Kunneth model. Generator names of `b` that clash with names of `a` get a
  // trailing prime. Basis index of x(a) y(b) is a + size(A) * b.
  static AlgebraPtr tensor(const AlgebraPtr& a, const AlgebraPtr& b);

  Field field() const { return field_; }
  int top_degree() const { return top_degree_; }
  std::size_t size() const { return basis_.size(); }
  const BasisEntry& basis(std::size_t i) const { return basis_.at(i); }
  int degree(std::size_t i) const { return basis_[i].degree; }
  std::uint32_t fundamental() const { return fundamental_; }
  bool is_monomial() const { return !exponents_.empty(); }

  // Named algebra generators usable in polynomial strings.
  const std::vector<std::pair<std::string, Coefficients>>& named_generators() const {
    return named_;
  }
  const std::vector<Generator>& generators() const { return gens_; }

  std::vector<std::uint32_t> basis_in_degree(int d) const;

  // acc += c * b_i * b_j
  void multiply_into(std::uint32_t i, std::uint32_t j, const Scalar& c, Coefficients& acc) const;

 private:
  GradedAlgebra() = default;
  void add_term(Coefficients& acc, std::uint32_t index, const Scalar& c) const;

  Field field_ = Field::Rat;
  int top_degree_ = 0;
  std::vector<BasisEntry> basis_;
  std::uint32_t fundamental_ = 0;
  std::vector<std::pair<std::string, Coefficients>> named_;

  // monomial representation
  std::vector<Generator> gens_;
  std::vector<std::vector<int>> exponents_;

  // explicit representation: table_[i * size + j]
  std::vector<Coefficients> table_;

  friend class AlgebraElement;
};

class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(AlgebraPtr owner) : owner_(std::move(owner)) {}
  AlgebraElement(AlgebraPtr owner, Coefficients coeffs);

  static AlgebraElement one(const AlgebraPtr& owner);
  static AlgebraElement basis(const AlgebraPtr& owner, std::uint32_t index,
                              const Scalar& c = 1);
  static AlgebraElement constant(const AlgebraPtr& owner, const Scalar& c);

  const AlgebraPtr& owner() const { return owner_; }
  const Coefficients& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Scalar coefficient(std::uint32_t index) const;

  // Part of degree d.
  AlgebraElement homogeneous_part(int d) const;
  bool is_homogeneous(int d) const;
  // Degree-0 coefficient.
  Scalar constant_term() const { return coefficient(0); }

  // Value on the fundamental class: coefficient of the fundamental monomial.
  Scalar pair() const;

  AlgebraElement pow(int exponent) const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Scalar& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= Scalar(-1); }
  friend AlgebraElement operator*(AlgebraElement a, const Scalar& c) { return a *= c; }
  friend AlgebraElement operator*(const Scalar& c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  void require_same_owner(const AlgebraElement& other, const char* op) const;

  AlgebraPtr owner_;
  Coefficients coeffs_;
};

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);
Scalar pair(const AlgebraElement& x);

// Linear map between algebras raising degree by `degree_shift`. Ring maps
// (f^*) are checked for multiplicativity and unitality on construction.
class LinearMap {
 public:
  LinearMap(AlgebraPtr source, AlgebraPtr target, int degree_shift,
            std::vector<Coefficients> columns, bool ring_map);

  static LinearMap identity(const AlgebraPtr& a);
  static LinearMap zero(const AlgebraPtr& source, const AlgebraPtr& target, int degree_shift);
  // x -> x (x) 1 and y -> 1 (x) y into tensor(a, b).
  static LinearMap left_inclusion(const AlgebraPtr& a, const AlgebraPtr& product);
  static LinearMap right_inclusion(const AlgebraPtr& b, const AlgebraPtr& product);
  // Restriction to a (x) {point}: x (x) 1 -> x, positive-degree right factors -> 0.
  static LinearMap left_restriction(const AlgebraPtr& product, const AlgebraPtr& a);

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  int degree_shift() const { return shift_; }
  bool is_ring_map() const { return ring_map_; }

  AlgebraElement apply(const AlgebraElement& x) const;
  AlgebraElement operator()(const AlgebraElement& x) const { return apply(x); }

 private:
  AlgebraPtr source_;
  AlgebraPtr target_;
  int shift_ = 0;
  std::vector<Coefficients> columns_;
  bool ring_map_ = false;
};

// Render as "3*x^2 - 1/2*x*y + 1"; "0" for zero.
std::string to_string(const AlgebraElement& x);

}  // namespace thom
