#pragma once

// Small hand-built models shared by the unit tests and the acceptance binary.

#include "thom/charclass.hpp"
#include "thom/multipoint.hpp"
#include "thom/singularity.hpp"

namespace fixtures {

using namespace thom;

inline AlgebraElement gen(const AlgebraPtr& a, std::uint32_t index, const Scalar& c = 1) {
  return AlgebraElement::basis(a, index, c);
}

// H*(CP^n; Q) = Q[x]/(x^{n+1}), x in degree 2.
inline AlgebraPtr cp(int n, Field f = Field::Rat) {
  return GradedAlgebra::truncated_poly({Generator{"x", 2, n + 1}}, f, 2 * n);
}

// x in cp(n) has basis index 1.
inline AlgebraElement x_of(const AlgebraPtr& a) { return gen(a, 1); }

// p(T CP^n) = (1 + x^2)^{n+1}.
inline SpaceModel cp_space(int n) {
  AlgebraPtr a = cp(n);
  AlgebraElement base = AlgebraElement::one(a) + x_of(a).pow(2);
  return SpaceModel::make(a, TotalClass::from_element(base.pow(n + 1), ClassKind::Pontrjagin));
}

// Realification of O(d): p = 1 + d^2 x^2, e = d x.
inline BundleData line_bundle(const AlgebraPtr& a, long d) {
  AlgebraElement x = x_of(a);
  TotalClass p = TotalClass::from_element(AlgebraElement::one(a) + Scalar(d * d) * x.pow(2), ClassKind::Pontrjagin);
  return BundleData::make(p, 2, Scalar(d) * x);
}

// RP^2 with w(T) = (1 + a)^3 = 1 + a + a^2.
inline AlgebraPtr rp2() { return GradedAlgebra::truncated_poly({Generator{"a", 1, 3}}, Field::F2, 2); }

// Boy's surface RP^2 -> R^3: w(nu) = 1 + a, e = w_1 = a.
inline ImmersionData boy() {
  AlgebraPtr a = rp2();
  AlgebraElement t = gen(a, 1);
  SpaceModel m = SpaceModel::make(a, TotalClass::from_element(AlgebraElement::one(a) + t + t * t, ClassKind::StiefelWhitney));
  BundleData nu = BundleData::make(TotalClass::from_element(AlgebraElement::one(a) + t, ClassKind::StiefelWhitney), 1,
                                   std::nullopt);
  return ImmersionData::make(m, 1, nu);
}

// S^2 with trivial stable tangent bundle, immersed in R^4 with normal Euler
// class e*s.
inline ImmersionData sphere_in_r4(long e, const std::string& name = "s", Field f = Field::Rat) {
  AlgebraPtr a = GradedAlgebra::truncated_poly({Generator{name, 2, 2}}, f, 2);
  SpaceModel m = SpaceModel::make(a, TotalClass(a, kind_for(f)));
  BundleData nu = BundleData::make(TotalClass(a, kind_for(f)), 2,
                                   f == Field::F2 ? std::optional<AlgebraElement>() : gen(a, 1, e));
  return ImmersionData::make(m, 2, nu);
}

// CP^2 -> R^4 as a map of codimension 0: nu = -T.
inline MapData cp2_to_r4() {
  SpaceModel m = cp_space(2);
  return MapData::make(m, 0, stable_inverse(m.tangent));
}

}  // namespace fixtures
