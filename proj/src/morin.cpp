#include "thom/morin.hpp"

#include "thom/error.hpp"

namespace thom {
namespace {

int stratum_dim(int n, int k, int r) { return n - r * (k + 1); }

// Number of partitions of m with all parts <= max_part.
long count_partitions(int m, int max_part) {
  if (m < 0) return 0;
  return static_cast<long>(partitions_of(m, max_part).size());
}

}  // namespace

MorinClass::MorinClass(int n, int k, std::map<int, CobordismClass> strata) : n_(n), k_(k) {
  if (n < 0) throw InvariantError("Morin class needs n >= 0");
  if (k < 1) throw InvariantError("Morin class needs codimension k >= 1");
  for (auto& [r, cls] : strata) {
    if (r < 0 || r % 2 != 0) throw InvariantError("Morin strata are indexed by even r >= 0 (got " + std::to_string(r) + ")");
    if (cls.field() != Field::Rat) throw InvariantError("Morin strata are rational cobordism classes");
    const int dim = stratum_dim(n, k, r);
    if (dim < 0) {
      if (!cls.is_zero()) throw InvariantError("stratum " + std::to_string(r) + " has negative dimension but is nonzero");
      continue;
    }
    if (cls.is_void()) continue;
    if (cls.dim() != dim)
      throw InvariantError("stratum " + std::to_string(r) + " must have dimension " + std::to_string(dim));
    if (k % 2 == 0 && r >= 1 && !cls.is_zero())
      throw InvariantError("even-codimension Morin classes have no singular strata (r = " + std::to_string(r) + ")");
  }
  for (int r = 0; stratum_dim(n, k, r) >= 0; r += 2) {
    auto it = strata.find(r);
    strata_.emplace(r, it != strata.end() && !it->second.is_void() ? it->second
                                                                   : CobordismClass::zero(Field::Rat, stratum_dim(n, k, r)));
  }
}

const CobordismClass& MorinClass::stratum(int r) const {
  auto it = strata_.find(r);
  if (it == strata_.end()) {
    static const CobordismClass empty = CobordismClass::zero(Field::Rat, -1);
    return empty;
  }
  return it->second;
}

std::vector<std::pair<int, Partition>> MorinClass::image_violations() const {
  std::vector<std::pair<int, Partition>> out;
  if (k_ % 2 == 0) return out;
  const int max_part = (k_ - 1) / 2;
  for (const auto& [r, cls] : strata_)
    for (const auto& [p, v] : cls.numbers())
      if (v != 0 && p.largest_part() > max_part) out.emplace_back(r, p);
  return out;
}

long morin_rank(int n, int k) {
  if (n < 0 || k < 1) throw InvariantError("morin_rank needs n >= 0 and k >= 1");
  long rank = 0;
  if (k % 2 != 0) {
    // Summands Imm^{xi_{2i}}(n - 2i(k+1), ...) with rational homology of BSO(k)
    // in degree n - 2i(k+1), generated by p_1..p_{(k-1)/2}.
    for (int i = 0; n - 2 * i * (k + 1) >= 0; ++i) {
      const int m = n - 2 * i * (k + 1);
      if (m % 4 == 0) rank += count_partitions(m / 4, (k - 1) / 2);
    }
    return rank;
  }
  // Imm^SO(n,k): H^*(BSO(k); Q) = Q[p_1..p_{k/2-1}, chi_k].
  for (int c = 0; c * k <= n; ++c) {
    const int m = n - c * k;
    if (m % 4 == 0) rank += count_partitions(m / 4, k / 2 - 1);
  }
  return rank;
}

MorinClass morin_mul(const MorinClass& a, const MorinClass& b) {
  const int n = a.n() + b.n();
  const int k = a.k() + b.k() + 1;
  const bool annihilate = a.k() % 2 == 0 || b.k() % 2 == 0;
  std::map<int, CobordismClass> strata;
  for (const auto& [r, cls] : a.strata()) {
    if (annihilate && r >= 1) break;
    if (stratum_dim(n, k, r) < 0) break;
    strata.emplace(r, class_product(cls, b.stratum(r)));
  }
  return MorinClass(n, k, std::move(strata));
}

MorinClass morin_add(const MorinClass& a, const MorinClass& b) {
  if (a.n() != b.n() || a.k() != b.k()) throw InvariantError("morin_add: bidegrees differ");
  std::map<int, CobordismClass> strata;
  for (const auto& [r, cls] : a.strata()) strata.emplace(r, cls + b.stratum(r));
  return MorinClass(a.n(), a.k(), std::move(strata));
}

MorinClass prim_strata(const ImmersionData& imm) {
  if (imm.field() != Field::Rat) throw InvariantError("prim_strata works over Q");
  if (imm.codim < 2 || imm.codim % 2 != 0)
    throw InvariantError("prim_strata needs an immersion of even codimension >= 2");
  const int k = imm.codim - 1;
  std::map<int, CobordismClass> strata;
  for (int r = 0; stratum_dim(imm.dim(), k, r) >= 0; r += 2) strata.emplace(r, multipoint_numbers(imm, r + 1));
  return MorinClass(imm.dim(), k, std::move(strata));
}

}  // namespace thom
