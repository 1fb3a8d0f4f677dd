#include "thom/singularity.hpp"

#include <algorithm>

#include "thom/error.hpp"

namespace thom {
namespace {

// Pulls a class on M x S^j back to M along the inclusion of M x {point}.
AlgebraElement restrict_to_factor(const AlgebraElement& x, const AlgebraPtr& factor) {
  if (x.owner() == factor) return x;
  return LinearMap::left_restriction(x.owner(), factor)(x);
}

enum class Stratum { Sigma1, Sigma2 };

AlgebraElement thom_class(Stratum s, const MapData& f) {
  return s == Stratum::Sigma1 ? thom_sigma1(f) : thom_sigma2(f);
}

StratumProduct stratum_product(Stratum kind, const MapData& f, const MapData& g, bool verify) {
  const AlgebraPtr fa = f.source.algebra;
  const AlgebraPtr ga = g.source.algebra;
  StratumProduct out;
  out.algebra = GradedAlgebra::tensor(fa, ga);
  const LinearMap into_left = LinearMap::left_inclusion(fa, out.algebra);
  const LinearMap into_right = LinearMap::right_inclusion(ga, out.algebra);

  // nu_{f x g} = nu_f x nu_g
  const TotalClass normal =
      whitney_sum(transport(into_left, f.normal), transport(into_right, g.normal));
  // Sigma^1: index k1 + k2 + 1 and unit step 1. Sigma^2: index t with
  // 2t - 2 = k1 + k2 and suspensions in steps of 2.
  const int step = kind == Stratum::Sigma1 ? 1 : 2;
  const int index = kind == Stratum::Sigma1 ? f.codim + g.codim + 1 : (f.codim + g.codim) / 2 + 1;
  out.total = index < 0 ? AlgebraElement(out.algebra) : normal.component(index);

  const int last_j = std::max(f.codim, g.codim) / step + 1;
  for (int j = 1; j <= last_j; ++j) {
    StratumTerm term;
    term.j = j;
    const int up = step * j - step;  // f_{j-1} or f_{2j-2}
    const int down = -step * j;      // g_{(-j)} or g_{(-2j)}
    term.first = into_left(thom_class(kind, suspend(f, up))) *
                 into_right(restrict_to_factor(thom_class(kind, suspend(g, down)), ga));
    term.second = into_left(restrict_to_factor(thom_class(kind, suspend(f, down)), fa)) *
                  into_right(thom_class(kind, suspend(g, up)));
    out.terms.push_back(std::move(term));
  }

  if (verify) {
    AlgebraElement sum(out.algebra);
    for (const auto& t : out.terms) sum += t.sum();
    if (sum != out.total)
      throw IdentityCheckError(std::string(kind == Stratum::Sigma1 ? "Sigma^1" : "Sigma^2") +
                               " product formula disagrees with the Cartan expansion: terms give " +
                               to_string(sum) + ", direct gives " + to_string(out.total));
  }
  return out;
}

}  // namespace

MapData MapData::make(SpaceModel source, int codim, TotalClass normal) {
  if (normal.owner() != source.algebra) throw InvariantError("map normal class lives over a different algebra");
  if (normal.kind() != source.tangent.kind()) throw InvariantError("map normal class kind does not match the source");
  return MapData{std::move(source), codim, std::move(normal)};
}

AlgebraElement thom_sigma1(const MapData& f) {
  if (f.normal.kind() != ClassKind::StiefelWhitney)
    throw InvariantError("thom_sigma1 needs Stiefel-Whitney map data");
  const int index = f.codim + 1;
  if (index < 0) return AlgebraElement(f.normal.owner());
  return f.normal.component(index);
}

AlgebraElement thom_sigma2(const MapData& f) {
  if (f.normal.kind() != ClassKind::Pontrjagin) throw InvariantError("thom_sigma2 needs Pontrjagin map data");
  if (f.codim % 2 != 0) throw InvariantError("thom_sigma2 needs even codimension (got " + std::to_string(f.codim) + ")");
  const int t = f.codim / 2 + 1;
  if (t < 0) return AlgebraElement(f.normal.owner());
  return f.normal.component(t);
}

AlgebraPtr sphere_model(Field field, int j) {
  if (j < 1) throw InvariantError("sphere model needs dimension >= 1");
  return GradedAlgebra::truncated_poly({Generator{"s", j, 2}}, field, j);
}

MapData suspend(const MapData& f, int j) {
  if (j >= 0) return MapData{f.source, f.codim + j, f.normal};
  const AlgebraPtr product = GradedAlgebra::tensor(f.source.algebra, sphere_model(f.field(), -j));
  const LinearMap inclusion = LinearMap::left_inclusion(f.source.algebra, product);
  SpaceModel source = SpaceModel::make(product, transport(inclusion, f.source.tangent));
  return MapData::make(std::move(source), f.codim + j, transport(inclusion, f.normal));
}

StratumProduct sigma1_product(const MapData& f, const MapData& g, bool verify) {
  if (f.normal.kind() != ClassKind::StiefelWhitney || g.normal.kind() != ClassKind::StiefelWhitney)
    throw InvariantError("sigma1_product needs Stiefel-Whitney map data");
  return stratum_product(Stratum::Sigma1, f, g, verify);
}

StratumProduct sigma2_product(const MapData& f, const MapData& g, bool verify) {
  if (f.normal.kind() != ClassKind::Pontrjagin || g.normal.kind() != ClassKind::Pontrjagin)
    throw InvariantError("sigma2_product needs Pontrjagin map data");
  if (f.codim % 2 != 0 || g.codim % 2 != 0) throw InvariantError("sigma2_product needs even codimensions");
  return stratum_product(Stratum::Sigma2, f, g, verify);
}

}  // namespace thom
