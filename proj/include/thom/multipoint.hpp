#pragma once

#include <optional>

#include "thom/charclass.hpp"
#include "thom/cobordism.hpp"

namespace thom {

// Generic immersion f: M^n -> R^{n+k} (or a general target when wrapped in
// GeneralMapData) described by its source model and normal bundle.
struct ImmersionData {
  SpaceModel source;
  int codim = 0;
  BundleData normal;

  // Over Q requires even codim. With `euclidean_target`, checks that the
  // tangent and normal classes are stably inverse.
  static ImmersionData make(SpaceModel source, int codim, BundleData normal, bool euclidean_target = true);

  Field field() const { return source.field(); }
  int dim() const { return source.dim(); }
  const AlgebraElement& euler() const { return normal.euler_class(); }
};

// Immersion into a general target. `gysin_pull` is f^* f_!(beta(M)), the
// pulled-back n_1 series; absent means a Euclidean target (f^* = 0).
struct GeneralMapData {
  ImmersionData base;
  std::optional<BetaSeries> gysin_pull;
  std::optional<LinearMap> pullback;

  static GeneralMapData euclidean(ImmersionData base);
  static GeneralMapData make(ImmersionData base, std::optional<BetaSeries> gysin_pull,
                             std::optional<LinearMap> pullback = std::nullopt);
  // gysin_pull or the zero series.
  BetaSeries pulled_n1() const;
};

// m_r = (-e)^{r-1} beta(M)^r over the source, for a Euclidean target.
BetaSeries multipoint_series(const ImmersionData& imm, int r);

// Characteristic numbers of the r-fold point manifold, dimension n - (r-1)k.
CobordismClass multipoint_numbers(const ImmersionData& imm, int r);

// One step of m_r beta(nu) = f^* n_{r-1} - e(nu) m_{r-1}, solved for m_r.
BetaSeries herbert_step(const GeneralMapData& data, const BetaSeries& m_prev, const BetaSeries& n_prev_pulled,
                        int r);

// Numbers of the zero set of a generic section of xi.
CobordismClass euler_locus(const SpaceModel& base, const BundleData& xi);

// Model of g1 x g2 on the Kunneth tensor of the sources.
ImmersionData product_immersion(const ImmersionData& g1, const ImmersionData& g2);

// (-1)^{r-1} M_r(g1) x M_r(g2) (no sign over F2). With `verify`, also
// computes the r-fold numbers of the product immersion directly and throws
// IdentityCheckError on disagreement.
CobordismClass product_immersion_multipoint(const ImmersionData& g1, const ImmersionData& g2, int r,
                                            bool verify = true);

// M_2(g1) x M_2(g2) + M_2(g1) x Delta(nu2) + Delta(nu1) x M_2(g2). With
// `verify`, compares against the double points of g1 x g2 obtained from the
// recursion with f^* n_1 = gysin1 (x) gysin2.
CobordismClass product_double_points(const GeneralMapData& g1, const GeneralMapData& g2, bool verify = true);

// Double-point numbers of a general-target map via one recursion step.
CobordismClass double_point_numbers(const GeneralMapData& g);

// Left side of the double-point product formula: numbers of M_2(g1 x g2)
// from the recursion on the tensor model.
CobordismClass product_double_points_direct(const GeneralMapData& g1, const GeneralMapData& g2);

// External product of series: embed both into the tensor model and multiply.
BetaSeries series_external(const BetaSeries& s, const BetaSeries& t, const AlgebraPtr& product);

}  // namespace thom
