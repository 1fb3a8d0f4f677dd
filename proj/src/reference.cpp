#include "thom/reference.hpp"

#include "thom/error.hpp"

namespace thom::reference {

BetaSeries series_mul(const BetaSeries& s, const BetaSeries& t) {
  if (s.owner() != t.owner() || s.kind() != t.kind())
    throw InvariantError("reference::series_mul: incompatible series");
  std::map<Partition, AlgebraElement> out;
  for (const auto& lambda : partitions_up_to(s.max_weight())) {
    const auto& a = lambda.parts();
    std::vector<int> b(a.size(), 0), c(a.size(), 0);
    AlgebraElement acc(s.owner());
    for (;;) {
      for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
      acc += s.coefficient(Partition::from_exponents(b)) * t.coefficient(Partition::from_exponents(c));
      std::size_t i = 0;
      while (i < a.size() && b[i] == a[i]) b[i++] = 0;
      if (i == a.size()) break;
      ++b[i];
    }
    out.emplace(lambda, std::move(acc));
  }
  return BetaSeries::from_coefficients(s.owner(), s.kind(), std::move(out));
}

BetaSeries beta_of(const TotalClass& u) {
  const AlgebraPtr& owner = u.owner();
  std::map<Partition, AlgebraElement> out;
  for (const auto& lambda : partitions_up_to(u.max_index())) {
    const auto& bound = lambda.parts();
    // Polynomial in l(lambda) variables, exponents capped by lambda.
    std::map<std::vector<int>, AlgebraElement> poly;
    poly.emplace(std::vector<int>(bound.size(), 0), AlgebraElement::one(owner));
    for (std::size_t var = 0; var < bound.size(); ++var) {
      std::map<std::vector<int>, AlgebraElement> next;
      for (const auto& [exps, coeff] : poly)
        for (int j = 0; j <= bound[var]; ++j) {
          AlgebraElement term = coeff * u.component(j);
          if (term.is_zero()) continue;
          auto e = exps;
          e[var] = j;
          auto [it, inserted] = next.try_emplace(e, term);
          if (!inserted) it->second += term;
        }
      poly = std::move(next);
    }
    auto it = poly.find(bound);
    if (it != poly.end()) out.emplace(lambda, it->second);
  }
  return BetaSeries::from_coefficients(owner, u.kind(), std::move(out));
}

}  // namespace thom::reference
