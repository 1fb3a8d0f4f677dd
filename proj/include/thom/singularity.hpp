#pragma once

#include <vector>

#include "thom/charclass.hpp"

namespace thom {

// Generic map f: M^n -> N^{n+k} seen through its source model and the total
// class of its virtual normal bundle. Stiefel-Whitney data for Sigma^1,
// Pontrjagin data for Sigma^2.
struct MapData {
  SpaceModel source;
  int codim = 0;
  TotalClass normal;

  static MapData make(SpaceModel source, int codim, TotalClass normal);
  Field field() const { return source.field(); }
};

// [Sigma^1 f] = w_{k+1}(nu_f).
AlgebraElement thom_sigma1(const MapData& f);
// [Sigma^2 f] = p_t(nu_f) for k = 2t - 2.
AlgebraElement thom_sigma2(const MapData& f);

// f_j = f x q_j. For j >= 0 only the codimension grows; for j < 0 the source
// becomes M x S^{|j|} and the codimension drops by |j|.
MapData suspend(const MapData& f, int j);

// Model of S^j: one generator s of degree j with s^2 = 0.
AlgebraPtr sphere_model(Field field, int j);

struct StratumTerm {
  int j = 0;
  AlgebraElement first;   // [S f_{..}] x id^*[S g_{(-..)}]
  AlgebraElement second;  // id^*[S f_{(-..)}] x [S g_{..}]
  AlgebraElement sum() const { return first + second; }
};

struct StratumProduct {
  AlgebraPtr algebra;  // Kunneth model of the product source
  AlgebraElement total;
  std::vector<StratumTerm> terms;
};

// w_{k1+k2+1}(nu_f x nu_g) and the suspension term list; with `verify`, the
// term sum must equal the Whitney-Cartan expansion or IdentityCheckError is
// thrown.
StratumProduct sigma1_product(const MapData& f, const MapData& g, bool verify = true);
// p_t(nu_f x nu_g), 2t - 2 = k1 + k2, with the analogous term list.
StratumProduct sigma2_product(const MapData& f, const MapData& g, bool verify = true);

}  // namespace thom
