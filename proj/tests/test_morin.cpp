#include <doctest.h>

#include <functional>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "thom/error.hpp"
#include "thom/morin.hpp"
#include "thom/random_models.hpp"

using namespace thom;
using fixtures::gen;
using oracles::rank_oracle;
using oracles::tensor_oracle;

namespace {

CobordismClass cp2_class() { return CobordismClass::make(Field::Rat, 4, {{Partition({1}), 3}}); }

MorinClass square_example() {
  return MorinClass(4, 1, {{0, cp2_class()}});
}

}  // namespace

TEST_SUITE("morin") {

TEST_CASE("class product") {
  auto sq = class_product(cp2_class(), cp2_class());
  CHECK(sq.dim() == 8);
  CHECK(sq.number(Partition({1, 1})) == 18);
  CHECK(sq.number(Partition({2})) == 9);
  CHECK(class_product(cp2_class(), CobordismClass::point(Field::Rat)) == cp2_class());
  CHECK(class_product(cp2_class(), CobordismClass::zero(Field::Rat, 4)).is_zero());
  CHECK(class_product(cp2_class(), CobordismClass::zero(Field::Rat, -1)).is_void());
  CHECK(equivalent(sq, tensor_oracle(fixtures::cp_space(2), fixtures::cp_space(2))));
  CHECK(equivalent(class_product(cp2_class(), manifold_class(fixtures::cp_space(4))),
                   tensor_oracle(fixtures::cp_space(2), fixtures::cp_space(4))));
}

TEST_CASE("class product against the tensor model on random spaces") {
  for (std::uint64_t c = 0; c < 40; ++c) {
    ModelGenerator g(9, c);
    const Field f = c % 2 == 0 ? Field::Rat : Field::F2;
    auto m1 = g.space(f, f == Field::Rat ? 8 : 5);
    auto m2 = g.space(f, f == Field::Rat ? 8 : 5);
    CHECK(equivalent(class_product(manifold_class(m1), manifold_class(m2)), tensor_oracle(m1, m2)));
  }
}

TEST_CASE("morin ranks") {
  CHECK(morin_rank(4, 1) == 1);
  CHECK(morin_rank(6, 1) == 0);
  CHECK(morin_rank(8, 3) == 2);
  for (int k = 1; k <= 12; ++k) CHECK(morin_rank(0, k) == 1);
  for (int n = 0; n <= 40; ++n) CHECK(morin_rank(n, 1) == (n % 4 == 0 ? 1 : 0));
  for (int n = 0; n <= 40; ++n)
    for (int k = 1; k <= 9; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(morin_rank(n, k) == rank_oracle(n, k));
    }
  CHECK_THROWS_AS(morin_rank(-1, 1), InvariantError);
  CHECK_THROWS_AS(morin_rank(4, 0), InvariantError);
}

TEST_CASE("morin class construction") {
  auto a = square_example();
  CHECK(a.strata().size() == 2);
  CHECK(a.stratum(2).dim() == 0);
  CHECK(a.stratum(2).is_zero());
  CHECK(a.stratum(4).is_void());
  CHECK_THROWS_AS(MorinClass(4, 1, {{1, CobordismClass::point(Field::Rat)}}), InvariantError);
  CHECK_THROWS_AS(MorinClass(4, 1, {{0, CobordismClass::point(Field::Rat)}}), InvariantError);
  CHECK_THROWS_AS(MorinClass(6, 2, {{2, CobordismClass::make(Field::Rat, 0, {{Partition(), 1}})}}), InvariantError);
  CHECK_THROWS_AS(MorinClass(0, 1, {{0, CobordismClass::point(Field::F2)}}), InvariantError);
  // [CP^2] at k = 1 involves p_1, which no class in the image of Mor(4,1) can
  CHECK(a.image_violations().size() == 1);
  CHECK(MorinClass(8, 3, {{0, class_product(cp2_class(), cp2_class())}}).image_violations().size() == 1);
}

TEST_CASE("morin products") {
  auto a = MorinClass(4, 1, {{0, cp2_class()}, {2, CobordismClass::point(Field::Rat)}});
  CHECK(a.stratum(2).number(Partition()) == 1);
  auto sq = morin_mul(a, a);
  CHECK(sq.n() == 8);
  CHECK(sq.k() == 3);
  CHECK(sq.stratum(0) == class_product(cp2_class(), cp2_class()));
  CHECK(sq.stratum(2).number(Partition()) == 1);

  auto even = MorinClass(4, 2, {{0, cp2_class()}});
  auto killed = morin_mul(a, even);
  CHECK(killed.k() == 4);
  for (const auto& [r, cls] : killed.strata())
    if (r >= 1) CHECK(cls.is_zero());
  CHECK(killed.stratum(0) == class_product(cp2_class(), cp2_class()));
  CHECK_THROWS_AS(morin_add(a, even), InvariantError);
}

TEST_CASE("prim strata") {
  auto s = fixtures::sphere_in_r4(2);
  auto m = prim_strata(s);
  CHECK(m.n() == 2);
  CHECK(m.k() == 1);
  CHECK(m.strata().size() == 1);
  CHECK(m.stratum(0).is_zero());
  CHECK(m.stratum(2).is_void());
  CHECK_THROWS_AS(prim_strata(fixtures::boy()), InvariantError);

  // CP^2 with e = 0: stratum 0 is the manifold itself
  auto cp2 = fixtures::cp_space(2);
  auto nu = BundleData::make(stable_inverse(cp2.tangent), 2, AlgebraElement(cp2.algebra));
  auto p = prim_strata(ImmersionData::make(cp2, 2, nu));
  CHECK(p.stratum(0) == cp2_class());
}

TEST_CASE("prim strata are additive under connected sums") {
  // M = CP^2 # CP^2 by structure constants. An immersion with e = c1 a + c2 b
  // has the strata of the two CP^2 immersions with e = c1 x and e = c2 x
  // added together.
  std::vector<BasisEntry> basis{{"1", 0}, {"a", 2}, {"b", 2}, {"t", 4}};
  std::vector<StructureConstant> table{{1, 1, {{3, 1}}}, {2, 2, {{3, 1}}}};
  auto sum = GradedAlgebra::from_structure_constants(Field::Rat, basis, table, 3);
  auto a = gen(sum, 1), b = gen(sum, 2), one = AlgebraElement::one(sum);
  auto tangent = TotalClass::from_element(one + Scalar(3) * a * a + Scalar(3) * b * b, ClassKind::Pontrjagin);
  auto m = SpaceModel::make(sum, tangent);
  for (long c1 = -2; c1 <= 2; ++c1)
    for (long c2 = -2; c2 <= 2; ++c2) {
      auto e = Scalar(c1) * a + Scalar(c2) * b;
      auto nu = BundleData::make(stable_inverse(tangent), 2, e);
      auto whole = prim_strata(ImmersionData::make(m, 2, nu));
      auto cp2 = fixtures::cp_space(2);
      auto x = fixtures::x_of(cp2.algebra);
      auto part = [&](long c) {
        auto n = BundleData::make(stable_inverse(cp2.tangent), 2, Scalar(c) * x);
        return prim_strata(ImmersionData::make(cp2, 2, n));
      };
      CHECK(whole == morin_add(part(c1), part(c2)));
      CHECK(whole.stratum(2).number(Partition()) == c1 * c1 + c2 * c2);
    }
}

TEST_CASE("ring axioms on random classes") {
  for (std::uint64_t c = 0; c < 40; ++c) {
    ModelGenerator g(6, c);
    auto a = g.morin_class(), b = g.morin_class(), d = g.morin_class();
    auto ab = morin_mul(a, b);
    CHECK(ab == morin_mul(b, a));
    CHECK(morin_mul(ab, d) == morin_mul(a, morin_mul(b, d)));
    CHECK(ab.n() == a.n() + b.n());
    CHECK(ab.k() + 1 == (a.k() + 1) + (b.k() + 1));
    auto b2 = g.morin_class(b.n(), b.k());
    CHECK(morin_mul(a, morin_add(b, b2)) == morin_add(ab, morin_mul(a, b2)));
    if (a.k() % 2 == 0 || b.k() % 2 == 0)
      for (const auto& [r, cls] : ab.strata())
        if (r >= 1) CHECK(cls.is_zero());
    // products of classes in the image stay in the image
    if (a.k() % 2 != 0 && b.k() % 2 != 0 && a.image_violations().empty() && b.image_violations().empty())
      CHECK(ab.image_violations().empty());
  }
}


TEST_CASE("prim strata turn products of immersions into Morin products") {
  for (std::uint64_t c = 0; c < 15; ++c) {
    ModelGenerator g(12, c);
    auto g1 = g.euclidean_immersion(Field::Rat, 8, true);
    auto g2 = g.euclidean_immersion(Field::Rat, 8, true);
    CHECK(prim_strata(oracles::product_by_hand(g1, g2)) == morin_mul(prim_strata(g1), prim_strata(g2)));
  }
}

}
