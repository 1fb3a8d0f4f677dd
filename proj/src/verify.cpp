#include "thom/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "thom/error.hpp"
#include "thom/random_models.hpp"

namespace thom {
namespace {

using CaseFn = std::function<std::optional<std::string>(ModelGenerator&, std::uint64_t)>;

Field field_for_case(std::uint64_t i) { return i % 2 == 0 ? Field::Rat : Field::F2; }

std::optional<std::string> beta_case(ModelGenerator& g, std::uint64_t i) {
  const Field f = field_for_case(i);
  auto a = g.algebra(f, f == Field::Rat ? 16 : 8);
  const ClassKind kind = kind_for(f);
  auto u = g.total_class(a, kind, a->top_degree());
  auto v = g.total_class(a, kind, a->top_degree());
  if (beta_of(whitney_sum(u, v)) != series_mul_general(beta_of(u), beta_of(v)))
    return "beta(u + v) != beta(u) beta(v)";
  if (series_mul_general(beta_of(u), beta_of(stable_inverse(u))) != BetaSeries::one(a, kind))
    return "beta(u) beta(u)^-1 != 1";
  return std::nullopt;
}

std::optional<std::string> herbert_case(ModelGenerator& g, std::uint64_t i) {
  const Field f = field_for_case(i);
  auto imm = g.euclidean_immersion(f, f == Field::Rat ? 16 : 8);
  const auto data = GeneralMapData::euclidean(imm);
  const BetaSeries zero(imm.source.algebra, kind_for(f));
  BetaSeries m = beta_of(imm.source.tangent);
  for (int r = 2; r <= 4; ++r) {
    m = herbert_step(data, m, zero, r);
    if (m != multipoint_series(imm, r)) return "recursion differs from the closed form at r = " + std::to_string(r);
  }
  return std::nullopt;
}

std::optional<std::string> product_multi_case(ModelGenerator& g, std::uint64_t i) {
  const Field f = field_for_case(i);
  const int top = f == Field::Rat ? 8 : 6;
  auto g1 = g.euclidean_immersion(f, top, true);
  auto g2 = g.euclidean_immersion(f, top, true);
  const ImmersionData prod = product_immersion(g1, g2);
  for (int r = 2; r <= 4; ++r) {
    const Scalar sign = f == Field::Rat && r % 2 == 0 ? -1 : 1;
    auto expected = sign * class_product(multipoint_numbers(g1, r), multipoint_numbers(g2, r));
    if (!equivalent(multipoint_numbers(prod, r), expected))
      return "product theorem fails at r = " + std::to_string(r);
  }
  return std::nullopt;
}

std::optional<std::string> double_product_case(ModelGenerator& g, std::uint64_t i) {
  const Field f = field_for_case(i);
  const int top = f == Field::Rat ? 8 : 5;
  auto g1 = g.general_immersion(f, top);
  auto g2 = g.general_immersion(f, top);
  if (!equivalent(product_double_points(g1, g2, false), product_double_points_direct(g1, g2)))
    return "three-term formula differs from the recursion on the product";
  return std::nullopt;
}

AlgebraElement term_sum(const StratumProduct& p) {
  AlgebraElement s(p.algebra);
  for (const auto& t : p.terms) s += t.sum();
  return s;
}

std::optional<std::string> sigma1_case(ModelGenerator& g, std::uint64_t) {
  auto f = g.map_data(Field::F2, 6, -3, 5);
  auto h = g.map_data(Field::F2, 6, -3, 5);
  auto p = sigma1_product(f, h, false);
  if (term_sum(p) != p.total) return "Sigma^1 terms differ from w(nu_f x nu_g)";
  return std::nullopt;
}

std::optional<std::string> sigma2_case(ModelGenerator& g, std::uint64_t) {
  auto f = g.map_data(Field::Rat, 10, -4, 6);
  auto h = g.map_data(Field::Rat, 10, -4, 6);
  auto p = sigma2_product(f, h, false);
  if (term_sum(p) != p.total) return "Sigma^2 terms differ from p(nu_f x nu_g)";
  return std::nullopt;
}

std::optional<std::string> class_product_case(ModelGenerator& g, std::uint64_t i) {
  const Field f = field_for_case(i);
  auto m1 = g.space(f, f == Field::Rat ? 8 : 5);
  auto m2 = g.space(f, f == Field::Rat ? 8 : 5);
  auto ab = GradedAlgebra::tensor(m1.algebra, m2.algebra);
  auto t = whitney_sum(transport(LinearMap::left_inclusion(m1.algebra, ab), m1.tangent),
                       transport(LinearMap::right_inclusion(m2.algebra, ab), m2.tangent));
  if (!equivalent(class_product(manifold_class(m1), manifold_class(m2)), manifold_class(SpaceModel::make(ab, t))))
    return "Cartan product differs from the tensor model";
  return std::nullopt;
}

std::optional<std::string> morin_ring_case(ModelGenerator& g, std::uint64_t) {
  auto a = g.morin_class(), b = g.morin_class(), c = g.morin_class();
  auto ab = morin_mul(a, b);
  if (ab != morin_mul(b, a)) return "not commutative";
  if (morin_mul(ab, c) != morin_mul(a, morin_mul(b, c))) return "not associative";
  if (ab.n() != a.n() + b.n() || ab.k() + 1 != a.k() + b.k() + 2) return "bidegrees do not add";
  auto b2 = g.morin_class(b.n(), b.k());
  if (morin_mul(a, morin_add(b, b2)) != morin_add(ab, morin_mul(a, b2))) return "not distributive";
  if (a.k() % 2 == 0 || b.k() % 2 == 0)
    for (const auto& [r, cls] : ab.strata())
      if (r >= 1 && !cls.is_zero()) return "even codimension factor leaves a nonzero stratum";
  return std::nullopt;
}

// Rank against a direct count of monomials in the generator degrees.
std::optional<std::string> morin_rank_case(ModelGenerator& g, std::uint64_t) {
  const int n = g.uniform(0, 40);
  const int k = g.uniform(1, 9);
  std::vector<int> degrees;
  std::vector<int> targets;
  if (k % 2 != 0) {
    for (int j = 1; j <= (k - 1) / 2; ++j) degrees.push_back(4 * j);
    for (int i = 0; n - 2 * i * (k + 1) >= 0; ++i) targets.push_back(n - 2 * i * (k + 1));
  } else {
    for (int j = 1; j <= k / 2 - 1; ++j) degrees.push_back(4 * j);
    degrees.push_back(k);
    targets.push_back(n);
  }
  std::function<long(std::size_t, int)> count = [&](std::size_t i, int left) -> long {
    if (i == degrees.size()) return left == 0 ? 1 : 0;
    long total = 0;
    for (int e = 0; e * degrees[i] <= left; ++e) total += count(i + 1, left - e * degrees[i]);
    return total;
  };
  long expected = 0;
  for (int t : targets) expected += count(0, t);
  if (morin_rank(n, k) != expected)
    return "rank(" + std::to_string(n) + "," + std::to_string(k) + ") = " + std::to_string(morin_rank(n, k)) +
           ", monomial count gives " + std::to_string(expected);
  return std::nullopt;
}

const std::map<std::string, CaseFn>& registry() {
  static const std::map<std::string, CaseFn> suites{
      {"beta", beta_case},
      {"herbert", herbert_case},
      {"product-multi", product_multi_case},
      {"double-product", double_product_case},
      {"sigma1-product", sigma1_case},
      {"sigma2-product", sigma2_case},
      {"class-product", class_product_case},
      {"morin-ring", morin_ring_case},
      {"morin-rank", morin_rank_case},
  };
  return suites;
}

}  // namespace

bool SuiteResult::all_pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

std::size_t SuiteResult::failures() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.pass; }));
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : registry()) out.push_back(name);
  return out;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int cases, bool parallel) {
  auto it = registry().find(name);
  if (it == registry().end()) {
    std::string known;
    for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
    throw InvariantError("unknown check suite '" + name + "' (known: " + known + ")");
  }
  if (cases < 0) throw InvariantError("check suite needs cases >= 0");
  SuiteResult out{name, seed, std::vector<CaseResult>(static_cast<std::size_t>(cases))};
  const CaseFn& fn = it->second;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < cases; ++i) {
    CaseResult& res = out.cases[static_cast<std::size_t>(i)];
    res.index = static_cast<std::uint64_t>(i);
    try {
      ModelGenerator gen(seed, res.index);
      auto failure = fn(gen, res.index);
      res.pass = !failure;
      if (failure) res.detail = *failure;
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = e.what();
    }
  }
  return out;
}

}  // namespace thom
