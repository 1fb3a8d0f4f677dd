#pragma once

// Independent recomputations used by the unit tests and the acceptance run.

#include <functional>
#include <map>
#include <vector>

#include "thom/cobordism.hpp"
#include "thom/multipoint.hpp"
#include "thom/singularity.hpp"

namespace oracles {

using namespace thom;

// Pontrjagin numbers of a degree-d hypersurface X in CP^n (n odd), from
// T X + O(d) = (n+1) O(1) restricted to X and <h^{n-1}, [X]> = d. Plain
// integer power series in y = h^2.
inline std::map<Partition, long> hypersurface_numbers(int n, long d) {
  const int top = (n - 1) / 2;
  std::vector<long> p(top + 1, 0);
  // (1 + y)^{n+1}
  std::vector<long> binom(top + 1, 0);
  long c = 1;
  for (int i = 0; i <= top; ++i) {
    binom[i] = c;
    c = c * (n + 1 - i) / (i + 1);
  }
  // divide by (1 + d^2 y)
  for (int i = 0; i <= top; ++i) {
    long v = 0, q = 1;
    for (int j = i; j >= 0; --j) {
      v += binom[j] * q;
      q *= -d * d;
    }
    p[i] = v;
  }
  std::map<Partition, long> out;
  for (const auto& lambda : partitions_of(top)) {
    long v = d;
    for (int part : lambda.parts()) v *= p[part];
    out[lambda] = v;
  }
  return out;
}

// Iterates the recursion from m_1 = beta(M) with no target contribution.
inline CobordismClass euclidean_recursion(const ImmersionData& imm, int r) {
  const auto data = GeneralMapData::euclidean(imm);
  const BetaSeries zero(imm.source.algebra, imm.source.tangent.kind());
  BetaSeries m = beta_of(imm.source.tangent);
  for (int s = 2; s <= r; ++s) m = herbert_step(data, m, zero, s);
  return numbers_from_series(m, imm.dim() - (r - 1) * imm.codim);
}

inline AlgebraElement external(const AlgebraElement& x, const AlgebraElement& y, const AlgebraPtr& ab) {
  return LinearMap::left_inclusion(x.owner(), ab)(x) * LinearMap::right_inclusion(y.owner(), ab)(y);
}

inline TotalClass external(const TotalClass& u, const TotalClass& v, const AlgebraPtr& ab) {
  return whitney_sum(transport(LinearMap::left_inclusion(u.owner(), ab), u),
                     transport(LinearMap::right_inclusion(v.owner(), ab), v));
}

inline SpaceModel product_space(const SpaceModel& m1, const SpaceModel& m2) {
  auto ab = GradedAlgebra::tensor(m1.algebra, m2.algebra);
  return SpaceModel::make(ab, external(m1.tangent, m2.tangent, ab));
}

// Numbers of M1 x M2 computed on the Kunneth model with tangent T1 x T2.
inline CobordismClass tensor_oracle(const SpaceModel& m1, const SpaceModel& m2) {
  return manifold_class(product_space(m1, m2));
}

// g1 x g2 into the product of the targets, assembled by hand.
inline ImmersionData product_by_hand(const ImmersionData& g1, const ImmersionData& g2) {
  auto s = product_space(g1.source, g2.source);
  auto nu = external(g1.normal.total, g2.normal.total, s.algebra);
  auto e = external(g1.euler(), g2.euler(), s.algebra);
  return ImmersionData::make(s, g1.codim + g2.codim, BundleData::make(nu, g1.codim + g2.codim, e));
}

inline MapData product_by_hand(const MapData& f, const MapData& g) {
  auto s = product_space(f.source, g.source);
  return MapData::make(s, f.codim + g.codim, external(f.normal, g.normal, s.algebra));
}

// Counts monomials in generators of the given degrees with total degree n.
inline long count_monomials(const std::vector<int>& degrees, int n) {
  std::function<long(std::size_t, int)> rec = [&](std::size_t i, int left) -> long {
    if (i == degrees.size()) return left == 0 ? 1 : 0;
    long total = 0;
    for (int e = 0; e * degrees[i] <= left; ++e) total += rec(i + 1, left - e * degrees[i]);
    return total;
  };
  return rec(0, n);
}

inline long rank_oracle(int n, int k) {
  std::vector<int> degrees;
  if (k % 2 != 0) {
    for (int j = 1; j <= (k - 1) / 2; ++j) degrees.push_back(4 * j);
    long total = 0;
    for (int i = 0; n - 2 * i * (k + 1) >= 0; ++i) total += count_monomials(degrees, n - 2 * i * (k + 1));
    return total;
  }
  for (int j = 1; j <= k / 2 - 1; ++j) degrees.push_back(4 * j);
  degrees.push_back(k);
  return count_monomials(degrees, n);
}

}  // namespace oracles
