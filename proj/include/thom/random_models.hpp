#pragma once

#include <cstdint>
#include <random>

#include "thom/charclass.hpp"
#include "thom/morin.hpp"
#include "thom/multipoint.hpp"
#include "thom/singularity.hpp"

namespace thom {

// Seeded generators of random model data for the identity suites. The same
// seed always yields the same sequence of objects.
class ModelGenerator {
 public:
  explicit ModelGenerator(std::uint64_t seed);
  // Independent stream for case `index` of a suite run with `seed`.
  ModelGenerator(std::uint64_t seed, std::uint64_t index);

  int uniform(int lo, int hi);
  bool chance(int numerator, int denominator);
  Scalar coefficient(Field field);

  // Tensor product of 1-3 truncated polynomial rings with top degree in
  // [1, max_top].
  AlgebraPtr algebra(Field field, int max_top);
  // Random homogeneous element of degree d (possibly zero).
  AlgebraElement element(const AlgebraPtr& owner, int degree);
  // Random total class with components of index <= max_index.
  TotalClass total_class(const AlgebraPtr& owner, ClassKind kind, int max_index);
  SpaceModel space(Field field, int max_top);
  // Random series whose coefficient at l has degree class_degree(l) + shift.
  BetaSeries series(const AlgebraPtr& owner, ClassKind kind, int shift);

  // Honest rank-k normal bundle, tangent its stable inverse.
  ImmersionData euclidean_immersion(Field field, int max_top, bool even_codim = false);
  // Tangent and normal unrelated; gysin data built from a random m_2 via
  // f^* n_1 = beta(nu) m_2 + e beta(M).
  GeneralMapData general_immersion(Field field, int max_top);
  // Virtual normal class of any codimension in [min_codim, max_codim]
  // (even codimensions only over Q).
  MapData map_data(Field field, int max_top, int min_codim, int max_codim);
  MorinClass morin_class(int n, int k);
  MorinClass morin_class();

 private:
  std::mt19937_64 rng_;
};

}  // namespace thom
