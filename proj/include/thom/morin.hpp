#pragma once

#include <map>
#include <utility>
#include <vector>

#include "thom/cobordism.hpp"
#include "thom/multipoint.hpp"

namespace thom {

// Element of Mor(n,k) (x) Q represented by the rational cobordism classes of
// its Sigma^{1_r} strata for even r. Stratum r has dimension n - r(k+1).
class MorinClass {
 public:
  // Missing strata are zero. Rejects odd r, wrong dimensions, non-Q classes
  // and nonzero r >= 1 strata in even codimension.
  MorinClass(int n, int k, std::map<int, CobordismClass> strata);

  int n() const { return n_; }
  int k() const { return k_; }
  // Strata r = 0, 2, 4, ... with n - r(k+1) >= 0, zero-filled.
  const std::map<int, CobordismClass>& strata() const { return strata_; }
  const CobordismClass& stratum(int r) const;

  // (r, partition) pairs with a nonzero number involving p_i for
  // i > (k-1)/2. Empty for even k. Classes in the image of the Morin
  // cobordism group have none.
  std::vector<std::pair<int, Partition>> image_violations() const;

  friend bool operator==(const MorinClass&, const MorinClass&) = default;

 private:
  int n_ = 0;
  int k_ = 1;
  std::map<int, CobordismClass> strata_;
};

// Rank of Mor(n,k) (x) Q.
long morin_rank(int n, int k);

// The *-product: bidegrees (n, k+1) add and strata multiply; a factor of even
// codimension kills every stratum r >= 1.
MorinClass morin_mul(const MorinClass& a, const MorinClass& b);
// Disjoint union (strata-wise sum); bidegrees must agree.
MorinClass morin_add(const MorinClass& a, const MorinClass& b);

// Strata of the hyperplane projection of an immersion of even codimension
// k+1: stratum r is the (r+1)-fold point class of the immersion.
MorinClass prim_strata(const ImmersionData& imm);

}  // namespace thom
