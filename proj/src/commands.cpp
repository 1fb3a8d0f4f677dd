#include "thom/commands.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "thom/error.hpp"
#include "thom/verify.hpp"

namespace thom {
namespace {

using Handler = std::function<void(const ModelSet&, const Json&, const RunOptions&, Report&)>;

const Json& arg(const Json& cmd, const char* key) {
  auto it = cmd.find(key);
  if (it == cmd.end()) throw ParseError(std::string("missing argument '") + key + "'");
  return *it;
}

std::string arg_string(const Json& cmd, const char* key) {
  const Json& v = arg(cmd, key);
  if (!v.is_string()) throw ParseError(std::string("argument '") + key + "' must be a string");
  return v.get<std::string>();
}

long long arg_int(const Json& cmd, const char* key) {
  const Json& v = arg(cmd, key);
  if (!v.is_number_integer()) throw ParseError(std::string("argument '") + key + "' must be an integer");
  return v.get<long long>();
}

long long arg_int(const Json& cmd, const char* key, long long fallback) {
  return cmd.contains(key) ? arg_int(cmd, key) : fallback;
}

int arg_small(const Json& cmd, const char* key, long long lo, long long hi) {
  const long long v = arg_int(cmd, key);
  if (v < lo || v > hi)
    throw InvariantError(std::string("argument '") + key + "' must lie in [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
  return static_cast<int>(v);
}

std::pair<std::string, std::string> arg_pair(const Json& cmd, const char* key) {
  const Json& v = arg(cmd, key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
    throw ParseError(std::string("argument '") + key + "' must list two names");
  return {v[0].get<std::string>(), v[1].get<std::string>()};
}

const ImmersionData& euclidean_immersion(const ModelSet& m, const std::string& name) {
  const auto& imm = m.immersion(name);
  if (!imm.euclidean) throw InvariantError("immersion '" + name + "' has a general target; this operation needs R^N");
  return imm.data.base;
}

void add_check(Report& r, std::string name, bool pass, std::string detail = {}) {
  r.checks.push_back(Check{std::move(name), pass, std::move(detail)});
}

BetaSeries iterate_recursion(const ImmersionData& imm, int r) {
  const auto data = GeneralMapData::euclidean(imm);
  const BetaSeries zero(imm.source.algebra, imm.source.tangent.kind());
  BetaSeries m = beta_of(imm.source.tangent);
  for (int s = 2; s <= r; ++s) m = herbert_step(data, m, zero, s);
  return m;
}

AlgebraElement term_sum(const StratumProduct& p) {
  AlgebraElement s(p.algebra);
  for (const auto& t : p.terms) s += t.sum();
  return s;
}

Json render_stratum_product(const StratumProduct& p) {
  Json out = Json::object();
  out["total"] = to_string(p.total);
  out["pairing"] = to_string(pair(p.total));
  Json terms = Json::array();
  for (const auto& t : p.terms) {
    Json item = Json::object();
    item["j"] = t.j;
    item["first"] = to_string(t.first);
    item["second"] = to_string(t.second);
    terms.push_back(std::move(item));
  }
  out["terms"] = std::move(terms);
  return out;
}

// A space name (its manifold class) or an inline {"field", "dim", "numbers"}.
CobordismClass class_operand(const ModelSet& m, const Json& v, std::optional<SpaceModel>& space) {
  if (v.is_string()) {
    space = m.space(v.get<std::string>());
    return manifold_class(*space);
  }
  if (!v.is_object()) throw ParseError("class operands are space names or {\"dim\", \"numbers\"} objects");
  Field field = Field::Rat;
  if (auto f = v.find("field"); f != v.end()) {
    if (!f->is_string()) throw ParseError("'field' must be a string");
    field = parse_field(f->get<std::string>());
  }
  return parse_numbers(arg(v, "numbers"), field, static_cast<int>(arg_int(v, "dim")));
}

MorinClass morin_operand(const ModelSet& m, const Json& v) {
  if (v.is_string()) return m.morin_class(v.get<std::string>());
  return parse_morin(v);
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"beta",
       [](const ModelSet& m, const Json& c, const RunOptions&, Report& r) {
         if (c.contains("bundle")) {
           r.result = render_series(beta_of(m.bundle(arg_string(c, "bundle")).total));
         } else {
           r.result = render_series(beta_of(m.space(arg_string(c, "space")).tangent));
         }
       }},
      {"multipoint",
       [](const ModelSet& m, const Json& c, const RunOptions& o, Report& r) {
         const auto& named = m.immersion(arg_string(c, "immersion"));
         const int rr = arg_small(c, "r", 1, 64);
         if (!named.euclidean) {
           if (rr == 1) {
             r.result = render_numbers(manifold_class(named.data.base.source));
           } else if (rr == 2) {
             r.result = render_numbers(double_point_numbers(named.data));
           } else {
             throw InvariantError("r >= 3 needs a Euclidean target");
           }
           return;
         }
         const ImmersionData& imm = named.data.base;
         const CobordismClass numbers = multipoint_numbers(imm, rr);
         r.result = render_numbers(numbers);
         if (o.verify) {
           const int dim = imm.dim() - (rr - 1) * imm.codim;
           add_check(r, "closed form equals the recursion",
                     equivalent(numbers_from_series(iterate_recursion(imm, rr), dim), numbers));
         }
       }},
      {"herbert",
       [](const ModelSet& m, const Json& c, const RunOptions& o, Report& r) {
         const auto& named = m.immersion(arg_string(c, "immersion"));
         const int rr = c.contains("r") ? arg_small(c, "r", 2, 64) : 2;
         const ImmersionData& imm = named.data.base;
         BetaSeries series;
         if (named.euclidean) {
           series = iterate_recursion(imm, rr);
         } else {
           if (rr != 2) throw InvariantError("general targets support the step r = 2 only");
           series = herbert_step(named.data, beta_of(imm.source.tangent), named.data.pulled_n1(), 2);
         }
         const int dim = imm.dim() - (rr - 1) * imm.codim;
         r.result = Json::object();
         r.result["series"] = render_series(series);
         r.result["numbers"] = render_numbers(numbers_from_series(series, dim));
         if (o.verify && named.euclidean)
           add_check(r, "recursion equals (-e)^(r-1) beta(M)^r", series == multipoint_series(imm, rr));
       }},
      {"euler-locus",
       [](const ModelSet& m, const Json& c, const RunOptions&, Report& r) {
         const std::string bundle = arg_string(c, "bundle");
         m.bundle(bundle);
         const std::string& space = m.bundles.at(bundle).first;
         if (c.contains("space") && arg_string(c, "space") != space)
           throw InvariantError("bundle '" + bundle + "' lives over '" + space + "'");
         r.result = render_numbers(euler_locus(m.space(space), m.bundle(bundle)));
       }},
      {"product-multi",
       [](const ModelSet& m, const Json& c, const RunOptions& o, Report& r) {
         const auto [a, b] = arg_pair(c, "immersions");
         const ImmersionData& g1 = euclidean_immersion(m, a);
         const ImmersionData& g2 = euclidean_immersion(m, b);
         const int rr = arg_small(c, "r", 1, 64);
         const CobordismClass result = product_immersion_multipoint(g1, g2, rr, false);
         r.result = render_numbers(result);
         if (o.verify)
           add_check(r, "r-fold product theorem",
                     equivalent(multipoint_numbers(product_immersion(g1, g2), rr), result));
       }},
      {"product-double",
       [](const ModelSet& m, const Json& c, const RunOptions& o, Report& r) {
         const auto [a, b] = arg_pair(c, "immersions");
         const auto& g1 = m.immersion(a).data;
         const auto& g2 = m.immersion(b).data;
         const CobordismClass result = product_double_points(g1, g2, false);
         r.result = render_numbers(result);
         if (o.verify)
           add_check(r, "double-point product theorem", equivalent(product_double_points_direct(g1, g2), result));
       }},
      {"thom-sigma1",
       [](const ModelSet& m, const Json& c, const RunOptions&, Report& r) {
         const AlgebraElement cls = thom_sigma1(m.map(arg_string(c, "map")));
         r.result = Json::object();
         r.result["class"] = to_string(cls);
         r.result["pairing"] = to_string(pair(cls));
       }},
      {"thom-sigma2",
       [](const ModelSet& m, const Json& c, const RunOptions&, Report& r) {
         const AlgebraElement cls = thom_sigma2(m.map(arg_string(c, "map")));
         r.result = Json::object();
         r.result["class"] = to_string(cls);
         r.result["pairing"] = to_string(pair(cls));
       }},
      {"suspend",
       [](const ModelSet& m, const Json& c, const RunOptions&, Report& r) {
         const MapData s = suspend(m.map(arg_string(c, "map")), arg_small(c, "j", -64, 64));
         r.result = Json::object();
         r.result["dim"] = s.source.dim();
         r.result["codim"] = s.codim;
         r.result["normal"] = to_string(s.normal.total());
         r.result["tangent"] = to_string(s.source.tangent.total());
       }},
      {"sigma1-product",
       [](const ModelSet& m, const Json& c, const RunOptions& o, Report& r) {
         const auto [a, b] = arg_pair(c, "maps");
         const StratumProduct p = sigma1_product(m.map(a), m.map(b), false);
         r.result = render_stratum_product(p);
         if (o.verify) add_check(r, "Sigma^1 product formula", term_sum(p) == p.total);
       }},
      {"sigma2-product",
       [](const ModelSet& m, const Json& c, const RunOptions& o, Report& r) {
         const auto [a, b] = arg_pair(c, "maps");
         const StratumProduct p = sigma2_product(m.map(a), m.map(b), false);
         r.result = render_stratum_product(p);
         if (o.verify) add_check(r, "Sigma^2 product formula", term_sum(p) == p.total);
       }},
      {"class-product",
       [](const ModelSet& m, const Json& c, const RunOptions& o, Report& r) {
         const Json& ops = arg(c, "classes");
         if (!ops.is_array() || ops.size() != 2) throw ParseError("argument 'classes' must list two operands");
         std::optional<SpaceModel> s1, s2;
         const CobordismClass a = class_operand(m, ops[0], s1);
         const CobordismClass b = class_operand(m, ops[1], s2);
         const CobordismClass result = class_product(a, b);
         r.result = render_numbers(result);
         if (o.verify && s1 && s2) {
           auto ab = GradedAlgebra::tensor(s1->algebra, s2->algebra);
           auto t = whitney_sum(transport(LinearMap::left_inclusion(s1->algebra, ab), s1->tangent),
                                transport(LinearMap::right_inclusion(s2->algebra, ab), s2->tangent));
           add_check(r, "Cartan product equals the tensor model",
                     equivalent(manifold_class(SpaceModel::make(ab, t)), result));
         }
       }},
      {"morin-rank",
       [](const ModelSet&, const Json& c, const RunOptions&, Report& r) {
         r.result = morin_rank(arg_small(c, "n", 0, 4096), arg_small(c, "k", 1, 4096));
       }},
      {"morin-mul",
       [](const ModelSet& m, const Json& c, const RunOptions& o, Report& r) {
         const Json& ops = arg(c, "classes");
         if (!ops.is_array() || ops.size() != 2) throw ParseError("argument 'classes' must list two operands");
         const MorinClass a = morin_operand(m, ops[0]);
         const MorinClass b = morin_operand(m, ops[1]);
         const MorinClass result = morin_mul(a, b);
         r.result = render_morin(result);
         if (o.verify) add_check(r, "commutativity", morin_mul(b, a) == result);
       }},
      {"prim-strata",
       [](const ModelSet& m, const Json& c, const RunOptions&, Report& r) {
         r.result = render_morin(prim_strata(euclidean_immersion(m, arg_string(c, "immersion"))));
       }},
      {"check",
       [](const ModelSet&, const Json& c, const RunOptions& o, Report& r) {
         const std::string suite = arg_string(c, "suite");
         const long long seed = arg_int(c, "seed", static_cast<long long>(o.seed));
         if (seed < 0) throw InvariantError("argument 'seed' must be >= 0");
         const int cases = c.contains("cases") ? arg_small(c, "cases", 0, 1000000) : 50;
         const SuiteResult res = run_suite(suite, static_cast<std::uint64_t>(seed), cases, o.parallel_checks);
         r.result = Json::object();
         r.result["suite"] = suite;
         r.result["seed"] = seed;
         r.result["cases"] = cases;
         r.result["failures"] = res.failures();
         for (const auto& cr : res.cases) add_check(r, suite + " case " + std::to_string(cr.index), cr.pass, cr.detail);
       }},
  };
  return table;
}

template <class E>
[[noreturn]] void rethrow_as(const std::string& op, const E& e) {
  throw E(op + ": " + e.what());
}

}  // namespace

std::vector<std::string> command_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : handlers()) out.push_back(name);
  return out;
}

Report execute(const ModelSet& model, const Json& command, const RunOptions& options) {
  if (!command.is_object()) throw ParseError("a command must be a JSON object");
  const std::string op = arg_string(command, "op");
  auto it = handlers().find(op);
  if (it == handlers().end()) throw ParseError("unknown op '" + op + "'");
  Report report;
  report.command = command;
  const auto start = std::chrono::steady_clock::now();
  try {
    it->second(model, command, options, report);
  } catch (const ParseError& e) {
    rethrow_as(op, e);
  } catch (const InvariantError& e) {
    rethrow_as(op, e);
  } catch (const IdentityCheckError& e) {
    rethrow_as(op, e);
  }
  if (options.timing)
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace thom
