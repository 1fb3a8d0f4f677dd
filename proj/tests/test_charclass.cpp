#include <doctest.h>

#include "fixtures.hpp"
#include "thom/error.hpp"
#include "thom/random_models.hpp"
#include "thom/reference.hpp"

using namespace thom;
using fixtures::gen;

namespace {

TotalClass random_class(ModelGenerator& g, const AlgebraPtr& a) {
  const ClassKind kind = kind_for(a->field());
  return g.total_class(a, kind, a->top_degree());
}

}  // namespace

TEST_SUITE("charclass") {

TEST_CASE("whitney sum and stable inverse") {
  auto t = fixtures::cp_space(2).tangent;
  auto a = t.owner();
  auto x = fixtures::x_of(a);
  auto one = AlgebraElement::one(a);
  // (1 + x^2)^3 = 1 + 3x^2 in CP^2
  CHECK(t.total() == one + Scalar(3) * x * x);
  auto inv = stable_inverse(t);
  CHECK(inv.total() == one - Scalar(3) * x * x);
  CHECK(whitney_sum(t, inv).is_trivial());
  CHECK(whitney_power(t, 0).is_trivial());
  CHECK(whitney_power(t, 2) == whitney_sum(t, t));

  auto b = fixtures::rp2();
  auto w = TotalClass::from_element(AlgebraElement::one(b) + gen(b, 1) + gen(b, 2), ClassKind::StiefelWhitney);
  CHECK(stable_inverse(w).total() == AlgebraElement::one(b) + gen(b, 1));
}

TEST_CASE("total class validation") {
  auto a = fixtures::cp(2);
  auto x = fixtures::x_of(a);
  CHECK_THROWS_AS(TotalClass::from_element(x, ClassKind::Pontrjagin), InvariantError);
  // degree 2 is not a Pontrjagin degree
  CHECK_THROWS_AS(TotalClass::from_element(AlgebraElement::one(a) + x, ClassKind::Pontrjagin), InvariantError);
  CHECK_THROWS_AS(TotalClass(fixtures::rp2(), ClassKind::Pontrjagin), InvariantError);
  auto t = fixtures::cp_space(2).tangent;
  CHECK(t.component(-1).is_zero());
  CHECK(t.component(0) == AlgebraElement::one(t.owner()));
  CHECK(t.component(7).is_zero());
}

TEST_CASE("bundle data") {
  auto a = fixtures::cp(2);
  auto x = fixtures::x_of(a);
  auto xi = fixtures::line_bundle(a, 3);
  CHECK(xi.euler_class() == Scalar(3) * x);
  // honest rank-2 bundle cannot carry p_2
  auto big = GradedAlgebra::truncated_poly({Generator{"x", 2, 5}}, Field::Rat, 8);
  auto y = gen(big, 1);
  auto p = TotalClass::from_element(AlgebraElement::one(big) + y.pow(4), ClassKind::Pontrjagin);
  CHECK_THROWS_AS(BundleData::make(p, 2, std::nullopt), InvariantError);
  CHECK_NOTHROW(BundleData::make(p, -1, std::nullopt));
  CHECK_THROWS_AS(BundleData::make(TotalClass(a, ClassKind::Pontrjagin), 2, x * x), InvariantError);
  CHECK_THROWS_WITH(BundleData::make(TotalClass(a, ClassKind::Pontrjagin), 2, std::nullopt).euler_class(),
                    doctest::Contains("requires an Euler class"));

  auto b = fixtures::rp2();
  auto w = TotalClass::from_element(AlgebraElement::one(b) + gen(b, 1), ClassKind::StiefelWhitney);
  CHECK(BundleData::make(w, 1, std::nullopt).euler_class() == gen(b, 1));
  CHECK_THROWS_AS(BundleData::make(w, 1, AlgebraElement(b)), InvariantError);
}

TEST_CASE("beta series of CP^2") {
  auto m = fixtures::cp_space(2);
  auto x = fixtures::x_of(m.algebra);
  auto beta = beta_of(m.tangent);
  CHECK(beta.coefficient(Partition()) == AlgebraElement::one(m.algebra));
  CHECK(beta.coefficient(Partition({1})) == Scalar(3) * x * x);
  CHECK(beta.coefficient(Partition({1, 1})).is_zero());
  CHECK(beta.coefficients().size() == 2);
  CHECK(beta == reference::beta_of(m.tangent));
}

TEST_CASE("series arithmetic") {
  auto a = fixtures::cp(4);
  auto x = fixtures::x_of(a);
  auto one = AlgebraElement::one(a);
  auto u = TotalClass::from_element(one + x.pow(2) + Scalar(2) * x.pow(4), ClassKind::Pontrjagin);
  auto s = beta_of(u);
  // the shortcut and the general kernel agree
  auto general = series_mul_general(s, s);
  CHECK(series_mul(s, s) == general);
  CHECK(general == reference::series_mul(s, s));
  // beta(u)^2 = beta(u + u): coefficient at [1,1] is (2 p1)^2
  CHECK(general.coefficient(Partition({1, 1})) == Scalar(4) * x.pow(4));
  CHECK(general.coefficient(Partition({1})) == Scalar(2) * x.pow(2));
  CHECK(general.coefficient(Partition({2})) == Scalar(2) * Scalar(2) * x.pow(4) + x.pow(4));
  CHECK(series_sub(s, s).is_zero());
  CHECK(series_add(s, series_negate(s)).is_zero());
  CHECK(series_pow(s, 0) == BetaSeries::one(a, ClassKind::Pontrjagin));
  CHECK(series_scale(x, BetaSeries::one(a, ClassKind::Pontrjagin)).coefficient(Partition()) == x);
}

TEST_CASE("pushpull") {
  auto s = beta_of(fixtures::cp_space(2).tangent);
  auto a = s.owner();
  CHECK(series_pushpull(LinearMap::zero(a, a, 0), s).is_zero());
  CHECK(series_pushpull(LinearMap::identity(a), s) == s);
}

TEST_CASE("beta is multiplicative and invertible on random classes") {
  for (int field = 0; field < 2; ++field) {
    const Field f = field == 0 ? Field::Rat : Field::F2;
    for (std::uint64_t c = 0; c < 60; ++c) {
      ModelGenerator g(3, c);
      auto a = g.algebra(f, f == Field::Rat ? 16 : 8);
      auto u = random_class(g, a);
      auto v = random_class(g, a);
      auto bu = beta_of(u);
      auto bv = beta_of(v);
      CHECK(beta_of(whitney_sum(u, v)) == series_mul_general(bu, bv));
      CHECK(series_mul_general(bu, beta_of(stable_inverse(u))) == BetaSeries::one(a, kind_for(f)));
    }
  }
}

TEST_CASE("parallel kernels match the serial references") {
  for (int field = 0; field < 2; ++field) {
    const Field f = field == 0 ? Field::Rat : Field::F2;
    for (std::uint64_t c = 0; c < 40; ++c) {
      ModelGenerator g(5, c);
      auto a = g.algebra(f, f == Field::Rat ? 16 : 8);
      const ClassKind kind = kind_for(f);
      auto u = random_class(g, a);
      CHECK(beta_of(u) == reference::beta_of(u));
      auto s = g.series(a, kind, 0);
      auto t = g.series(a, kind, 0);
      CHECK(series_mul_general(s, t) == reference::series_mul(s, t));
      CHECK(series_mul_general(s, t) == series_mul_general(t, s));
      auto w = g.series(a, kind, 0);
      CHECK(series_mul_general(series_mul_general(s, t), w) == series_mul_general(s, series_mul_general(t, w)));
    }
  }
}

}
