#include "thom/random_models.hpp"

#include <algorithm>

#include "thom/error.hpp"

namespace thom {

ModelGenerator::ModelGenerator(std::uint64_t seed) : rng_(seed) {}

ModelGenerator::ModelGenerator(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  rng_.seed(seq);
}

int ModelGenerator::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool ModelGenerator::chance(int numerator, int denominator) { return uniform(1, denominator) <= numerator; }

Scalar ModelGenerator::coefficient(Field field) {
  if (field == Field::F2) return 1;
  int v = uniform(1, 3) * (chance(1, 2) ? 1 : -1);
  Scalar c(v);
  if (chance(1, 5)) c /= 2;
  return c;
}

AlgebraPtr ModelGenerator::algebra(Field field, int max_top) {
  const int smallest = field == Field::Rat ? 2 : 1;
  if (max_top < smallest) throw InvariantError("random algebra needs room for one generator");
  static const char* names[] = {"a", "b", "c"};
  std::vector<Generator> gens;
  int used = 0;
  const int count = uniform(1, 3);
  for (int g = 0; g < count; ++g) {
    const int room = max_top - used;
    if (room < smallest) break;
    int degree = field == Field::Rat ? 2 * uniform(1, 2) : uniform(1, 3);
    if (degree > room) degree = smallest;
    const int max_nil = std::min(4, room / degree + 1);
    const int nil = uniform(2, max_nil);
    gens.push_back(Generator{names[gens.size()], degree, nil});
    used += degree * (nil - 1);
  }
  return GradedAlgebra::truncated_poly(std::move(gens), field, used);
}

AlgebraElement ModelGenerator::element(const AlgebraPtr& owner, int degree) {
  Coefficients c;
  for (auto i : owner->basis_in_degree(degree))
    if (chance(2, 3)) c[i] = coefficient(owner->field());
  return AlgebraElement(owner, std::move(c));
}

TotalClass ModelGenerator::total_class(const AlgebraPtr& owner, ClassKind kind, int max_index) {
  std::map<int, AlgebraElement> comps;
  const int top = std::min(max_index, owner->top_degree() / unit_degree(kind));
  for (int i = 1; i <= top; ++i) comps.emplace(i, element(owner, i * unit_degree(kind)));
  return TotalClass::from_components(owner, kind, std::move(comps));
}

SpaceModel ModelGenerator::space(Field field, int max_top) {
  AlgebraPtr a = algebra(field, max_top);
  TotalClass tangent = total_class(a, kind_for(field), a->top_degree());
  return SpaceModel::make(a, std::move(tangent));
}

BetaSeries ModelGenerator::series(const AlgebraPtr& owner, ClassKind kind, int shift) {
  std::map<Partition, AlgebraElement> coeffs;
  for (const auto& p : partitions_up_to(owner->top_degree() / unit_degree(kind))) {
    const int d = class_degree(kind, p) + shift;
    if (d > owner->top_degree()) continue;
    if (chance(1, 2)) coeffs.emplace(p, element(owner, d));
  }
  return BetaSeries::from_coefficients(owner, kind, std::move(coeffs));
}

namespace {

// Honest rank-k normal data: components vanish above the rank and over Q the
// top Pontrjagin class is e^2.
BundleData honest_normal(ModelGenerator& gen, const AlgebraPtr& a, int k) {
  const ClassKind kind = kind_for(a->field());
  if (kind == ClassKind::StiefelWhitney) return BundleData::make(gen.total_class(a, kind, k), k, std::nullopt);
  AlgebraElement e = gen.element(a, k);
  std::map<int, AlgebraElement> comps;
  for (int i = 1; i < k / 2; ++i) comps.emplace(i, gen.element(a, 4 * i));
  comps.emplace(k / 2, e * e);
  return BundleData::make(TotalClass::from_components(a, kind, std::move(comps)), k, e);
}

int random_codim(ModelGenerator& gen, Field field, bool even = false) {
  return field == Field::Rat || even ? 2 * gen.uniform(1, field == Field::Rat ? 3 : 2) : gen.uniform(1, 4);
}

}  // namespace

ImmersionData ModelGenerator::euclidean_immersion(Field field, int max_top, bool even_codim) {
  AlgebraPtr a = algebra(field, max_top);
  const int k = random_codim(*this, field, even_codim);
  BundleData normal = honest_normal(*this, a, k);
  SpaceModel source = SpaceModel::make(a, stable_inverse(normal.total));
  return ImmersionData::make(std::move(source), k, std::move(normal));
}

GeneralMapData ModelGenerator::general_immersion(Field field, int max_top) {
  SpaceModel source = space(field, max_top);
  const AlgebraPtr a = source.algebra;
  const ClassKind kind = kind_for(field);
  const int k = random_codim(*this, field);
  BundleData normal = honest_normal(*this, a, k);
  const BetaSeries m2 = series(a, kind, k);
  const BetaSeries gysin =
      series_add(series_mul(beta_of(normal.total), m2), series_scale(normal.euler_class(), beta_of(source.tangent)));
  ImmersionData base = ImmersionData::make(std::move(source), k, std::move(normal), false);
  return GeneralMapData::make(std::move(base), gysin);
}

MapData ModelGenerator::map_data(Field field, int max_top, int min_codim, int max_codim) {
  SpaceModel source = space(field, max_top);
  int codim = uniform(min_codim, max_codim);
  if (field == Field::Rat && codim % 2 != 0) codim += codim < max_codim ? 1 : -1;
  TotalClass normal = total_class(source.algebra, kind_for(field), source.algebra->top_degree());
  return MapData::make(std::move(source), codim, std::move(normal));
}

MorinClass ModelGenerator::morin_class(int n, int k) {
  std::map<int, CobordismClass> strata;
  for (int r = 0; n - r * (k + 1) >= 0; r += 2) {
    if (k % 2 == 0 && r >= 1) break;
    const int dim = n - r * (k + 1);
    std::map<Partition, Scalar> numbers;
    if (dim % 4 == 0) {
      const int max_part = k % 2 != 0 ? (k - 1) / 2 : dim / 4;
      for (const auto& p : partitions_of(dim / 4, max_part))
        if (chance(2, 3)) numbers.emplace(p, Scalar(uniform(-5, 5)));
    }
    strata.emplace(r, CobordismClass::make(Field::Rat, dim, numbers));
  }
  return MorinClass(n, k, std::move(strata));
}

MorinClass ModelGenerator::morin_class() {
  const int k = uniform(1, 5);
  const int n = uniform(0, 16);
  return morin_class(n, k);
}

}  // namespace thom
