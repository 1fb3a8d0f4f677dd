#include "thom/multipoint.hpp"

#include "thom/error.hpp"

namespace thom {
namespace {

// Pairs c * prod_i u_{lambda_i} for every partition of class degree `dim`.
CobordismClass pair_against(const TotalClass& u, const AlgebraElement& c, int dim) {
  const Field field = u.owner()->field();
  if (dim < 0) return CobordismClass::zero(field, dim);
  const int unit = unit_degree(u.kind());
  std::map<Partition, Scalar> numbers;
  if (dim % unit == 0) {
    for (const auto& lambda : partitions_of(dim / unit)) {
      AlgebraElement value = c;
      for (int part : lambda.parts()) {
        if (value.is_zero()) break;
        value = value * u.component(part);
      }
      numbers.emplace(lambda, value.pair());
    }
  }
  return CobordismClass::make(field, dim, numbers);
}

void require_source(const BetaSeries& s, const ImmersionData& imm, const char* what) {
  if (s.owner() != imm.source.algebra)
    throw InvariantError(std::string("herbert_step: ") + what + " is not over the source algebra");
  if (s.kind() != imm.source.tangent.kind()) throw InvariantError(std::string("herbert_step: ") + what + " has the wrong kind");
}

}  // namespace

ImmersionData ImmersionData::make(SpaceModel source, int codim, BundleData normal, bool euclidean_target) {
  if (codim < 1) throw InvariantError("immersions need codimension >= 1");
  if (normal.total.owner() != source.algebra) throw InvariantError("normal bundle lives over a different algebra");
  if (normal.total.kind() != source.tangent.kind()) throw InvariantError("normal bundle kind does not match the source");
  if (normal.rank != codim) throw InvariantError("normal bundle rank must equal the codimension");
  if (source.field() == Field::Rat && codim % 2 != 0)
    throw InvariantError("RAT mode requires even codimension (got " + std::to_string(codim) + ")");
  if (!normal.euler) throw InvariantError("immersion normal bundle needs an Euler class");
  if (euclidean_target && !whitney_sum(source.tangent, normal.total).is_trivial())
    throw InvariantError("tangent and normal classes are not stably inverse (Whitney constraint)");
  return ImmersionData{std::move(source), codim, std::move(normal)};
}

GeneralMapData GeneralMapData::euclidean(ImmersionData base) { return GeneralMapData{std::move(base), {}, {}}; }

GeneralMapData GeneralMapData::make(ImmersionData base, std::optional<BetaSeries> gysin_pull,
                                    std::optional<LinearMap> pullback) {
  if (gysin_pull) {
    if (gysin_pull->owner() != base.source.algebra) throw InvariantError("gysin series is not over the source algebra");
    if (gysin_pull->kind() != base.source.tangent.kind()) throw InvariantError("gysin series kind does not match the field");
  }
  if (pullback) {
    if (pullback->target() != base.source.algebra) throw InvariantError("pullback must land in the source algebra");
    if (!pullback->is_ring_map()) throw InvariantError("pullback must be a ring map");
  }
  return GeneralMapData{std::move(base), std::move(gysin_pull), std::move(pullback)};
}

BetaSeries GeneralMapData::pulled_n1() const {
  if (gysin_pull) return *gysin_pull;
  return BetaSeries(base.source.algebra, base.source.tangent.kind());
}

BetaSeries multipoint_series(const ImmersionData& imm, int r) {
  if (r < 1) throw InvariantError("multipoint: r must be >= 1");
  const AlgebraElement factor = (-imm.euler()).pow(r - 1);
  return series_scale(factor, beta_of(whitney_power(imm.source.tangent, r)));
}

CobordismClass multipoint_numbers(const ImmersionData& imm, int r) {
  if (r < 1) throw InvariantError("multipoint: r must be >= 1");
  const int dim = imm.dim() - (r - 1) * imm.codim;
  const AlgebraElement factor = (-imm.euler()).pow(r - 1);
  return pair_against(whitney_power(imm.source.tangent, r), factor, dim);
}

BetaSeries herbert_step(const GeneralMapData& data, const BetaSeries& m_prev, const BetaSeries& n_prev_pulled,
                        int r) {
  if (r < 2) throw InvariantError("herbert_step: r must be >= 2");
  const ImmersionData& imm = data.base;
  require_source(m_prev, imm, "m_{r-1}");
  require_source(n_prev_pulled, imm, "f^* n_{r-1}");
  const BetaSeries inverse_normal = beta_of(stable_inverse(imm.normal.total));
  return series_mul(inverse_normal, series_sub(n_prev_pulled, series_scale(imm.euler(), m_prev)));
}

CobordismClass euler_locus(const SpaceModel& base, const BundleData& xi) {
  if (xi.total.owner() != base.algebra) throw InvariantError("euler_locus: bundle lives over a different algebra");
  const AlgebraElement& e = xi.euler_class();
  const TotalClass quotient = whitney_sum(base.tangent, stable_inverse(xi.total));
  return pair_against(quotient, e, base.dim() - xi.rank);
}

ImmersionData product_immersion(const ImmersionData& g1, const ImmersionData& g2) {
  if (g1.field() != g2.field()) throw InvariantError("product of immersions over different fields");
  const AlgebraPtr product = GradedAlgebra::tensor(g1.source.algebra, g2.source.algebra);
  const LinearMap left = LinearMap::left_inclusion(g1.source.algebra, product);
  const LinearMap right = LinearMap::right_inclusion(g2.source.algebra, product);
  SpaceModel source = SpaceModel::make(
      product, whitney_sum(transport(left, g1.source.tangent), transport(right, g2.source.tangent)));
  TotalClass normal = whitney_sum(transport(left, g1.normal.total), transport(right, g2.normal.total));
  AlgebraElement euler = left(g1.euler()) * right(g2.euler());
  BundleData bundle = BundleData::make(std::move(normal), g1.codim + g2.codim, std::move(euler));
  return ImmersionData::make(std::move(source), g1.codim + g2.codim, std::move(bundle), false);
}

CobordismClass product_immersion_multipoint(const ImmersionData& g1, const ImmersionData& g2, int r, bool verify) {
  if (g1.field() != g2.field()) throw InvariantError("product_immersion_multipoint: fields differ");
  const Field field = g1.field();
  const Scalar sign = (field == Field::Rat && (r - 1) % 2 != 0) ? -1 : 1;
  CobordismClass result = sign * class_product(multipoint_numbers(g1, r), multipoint_numbers(g2, r));
  const int dim = g1.dim() + g2.dim() - (r - 1) * (g1.codim + g2.codim);
  if (result.is_void() && dim >= 0) result = CobordismClass::zero(field, dim);
  if (verify) {
    const CobordismClass direct = multipoint_numbers(product_immersion(g1, g2), r);
    if (!equivalent(direct, result))
      throw IdentityCheckError("r-fold product theorem failed for r = " + std::to_string(r));
  }
  return result;
}

CobordismClass double_point_numbers(const GeneralMapData& g) {
  const ImmersionData& imm = g.base;
  const BetaSeries m2 = herbert_step(g, beta_of(imm.source.tangent), g.pulled_n1(), 2);
  return numbers_from_series(m2, imm.dim() - imm.codim);
}

BetaSeries series_external(const BetaSeries& s, const BetaSeries& t, const AlgebraPtr& product) {
  const BetaSeries left = series_pushpull(LinearMap::left_inclusion(s.owner(), product), s);
  const BetaSeries right = series_pushpull(LinearMap::right_inclusion(t.owner(), product), t);
  return series_mul_general(left, right);
}

CobordismClass product_double_points_direct(const GeneralMapData& g1, const GeneralMapData& g2) {
  ImmersionData prod = product_immersion(g1.base, g2.base);
  const AlgebraPtr algebra = prod.source.algebra;
  const int dim = prod.dim() - prod.codim;
  BetaSeries pulled = series_external(g1.pulled_n1(), g2.pulled_n1(), algebra);
  const GeneralMapData data = GeneralMapData::make(std::move(prod), pulled);
  const BetaSeries m2 = herbert_step(data, beta_of(data.base.source.tangent), pulled, 2);
  return numbers_from_series(m2, dim);
}

CobordismClass product_double_points(const GeneralMapData& g1, const GeneralMapData& g2, bool verify) {
  if (g1.base.field() != g2.base.field()) throw InvariantError("product_double_points: fields differ");
  const CobordismClass m1 = double_point_numbers(g1);
  const CobordismClass m2 = double_point_numbers(g2);
  const CobordismClass d1 = euler_locus(g1.base.source, g1.base.normal);
  const CobordismClass d2 = euler_locus(g2.base.source, g2.base.normal);
  CobordismClass result = class_product(m1, m2) + class_product(m1, d2) + class_product(d1, m2);
  const int dim = g1.base.dim() + g2.base.dim() - g1.base.codim - g2.base.codim;
  if (result.is_void() && dim >= 0) result = CobordismClass::zero(g1.base.field(), dim);
  if (verify) {
    const CobordismClass direct = product_double_points_direct(g1, g2);
    if (!equivalent(direct, result)) throw IdentityCheckError("double-point product theorem failed");
  }
  return result;
}

}  // namespace thom
