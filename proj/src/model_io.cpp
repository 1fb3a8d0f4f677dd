#include "thom/model_io.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "thom/error.hpp"

namespace thom {
namespace {

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const std::string& what) {
  throw ParseError("parse error at position " + std::to_string(pos) + " in '" + std::string(text) + "': " + what);
}

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  std::vector<PolynomialTerm> run() {
    std::vector<PolynomialTerm> terms;
    skip();
    if (at_end()) parse_fail(text_, pos_, "empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        parse_fail(text_, pos_, "expected '+' or '-'");
      }
      first = false;
      PolynomialTerm t = term();
      t.coefficient *= sign;
      terms.push_back(std::move(t));
      skip();
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) parse_fail(text_, pos_, "expected an integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::pair<std::string, int> factor() {
    if (at_end() || !ident_start(peek())) parse_fail(text_, pos_, "expected a generator name");
    const std::size_t start = pos_;
    while (!at_end() && ident_char(peek())) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    skip();
    int exponent = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip();
      const std::size_t at = pos_;
      const std::string d = digits();
      if (d.size() > 6) parse_fail(text_, at, "exponent too large");
      exponent = std::stoi(d);
      skip();
    }
    return {std::move(name), exponent};
  }

  PolynomialTerm term() {
    PolynomialTerm t;
    t.position = pos_;
    t.coefficient = 1;
    if (at_end()) parse_fail(text_, pos_, "expected a term");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num(digits());
      skip();
      mpz_class den(1);
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip();
        const std::size_t at = pos_;
        den = mpz_class(digits());
        if (den == 0) parse_fail(text_, at, "zero denominator");
        skip();
      }
      t.coefficient = Scalar(num, den);
      t.coefficient.canonicalize();
    } else {
      t.factors.push_back(factor());
    }
    while (!at_end() && peek() == '*') {
      ++pos_;
      skip();
      t.factors.push_back(factor());
    }
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string context(const std::string& section, const std::string& name) { return section + "." + name; }

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing key '" + key + "'");
  return *it;
}

std::string get_string(const Json& obj, const char* key, const std::string& where) {
  const Json& v = require(obj, key, where);
  if (!v.is_string()) throw ParseError(where + ": '" + key + "' must be a string");
  return v.get<std::string>();
}

int get_int(const Json& obj, const char* key, const std::string& where) {
  const Json& v = require(obj, key, where);
  if (!v.is_number_integer()) throw ParseError(where + ": '" + key + "' must be an integer");
  return v.get<int>();
}

std::string value_text(const Json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError(where + ": expected a polynomial string or an integer");
}

AlgebraElement polynomial_at(const AlgebraPtr& owner, const Json& v, const std::string& where) {
  try {
    return parse_polynomial(owner, value_text(v, where));
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  } catch (const InvariantError& e) {
    throw InvariantError(where + ": " + e.what());
  }
}

// Wraps module errors with the name of the object being built.
template <class F>
auto build(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    if (msg.rfind(where, 0) == 0) throw;
    throw ParseError(where + ": " + msg);
  } catch (const InvariantError& e) {
    const std::string msg = e.what();
    if (msg.rfind(where, 0) == 0) throw;
    throw InvariantError(where + ": " + msg);
  }
}

Field field_of(const Json& spec, Field fallback, const std::string& where) {
  auto it = spec.find("field");
  if (it == spec.end()) return fallback;
  if (!it->is_string()) throw ParseError(where + ": 'field' must be a string");
  try {
    return parse_field(it->get<std::string>());
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

AlgebraPtr explicit_algebra(const Json& spec, Field field, const std::string& where) {
  const Json& basis_json = require(spec, "basis", where);
  if (!basis_json.is_array()) throw ParseError(where + ": 'basis' must be an array");
  std::vector<BasisEntry> basis{{"1", 0}};
  std::map<std::string, std::uint32_t> index{{"1", 0}};
  for (const auto& b : basis_json) {
    BasisEntry e{get_string(b, "label", where + ".basis"), get_int(b, "degree", where + ".basis")};
    if (e.label == "1" && e.degree == 0) continue;
    if (index.count(e.label)) throw InvariantError(where + ": duplicate basis label '" + e.label + "'");
    index[e.label] = static_cast<std::uint32_t>(basis.size());
    basis.push_back(std::move(e));
  }
  // Values are linear combinations of basis labels.
  auto combination = [&](const Json& v, const std::string& at) {
    Coefficients c;
    for (const auto& t : parse_terms(value_text(v, at))) {
      std::uint32_t idx = 0;
      if (t.factors.size() > 1 || (t.factors.size() == 1 && t.factors[0].second != 1))
        throw ParseError(at + ": products must be linear combinations of basis labels");
      if (!t.factors.empty()) {
        auto it = index.find(t.factors[0].first);
        if (it == index.end()) throw ParseError(at + ": unknown basis label '" + t.factors[0].first + "'");
        idx = it->second;
      }
      c[idx] = reduce(field, c[idx] + t.coefficient);
      if (c[idx] == 0) c.erase(idx);
    }
    return c;
  };
  auto label_index = [&](const std::string& label, const std::string& at) {
    auto it = index.find(label);
    if (it == index.end()) throw ParseError(at + ": unknown basis label '" + label + "'");
    return it->second;
  };
  std::vector<StructureConstant> table;
  if (auto it = spec.find("products"); it != spec.end()) {
    if (!it->is_array()) throw ParseError(where + ": 'products' must be an array");
    for (const auto& p : *it) {
      const std::string at = where + ".products";
      StructureConstant sc;
      sc.left = label_index(get_string(p, "left", at), at);
      sc.right = label_index(get_string(p, "right", at), at);
      sc.product = combination(require(p, "value", at), at);
      table.push_back(std::move(sc));
    }
  }
  const std::uint32_t fundamental = label_index(get_string(spec, "fundamental", where), where);
  return GradedAlgebra::from_structure_constants(field, std::move(basis), table, fundamental);
}

}  // namespace

std::vector<PolynomialTerm> parse_terms(std::string_view text) { return TermParser(text).run(); }

Scalar parse_scalar(std::string_view text) {
  const auto terms = parse_terms(text);
  if (terms.size() != 1 || !terms[0].factors.empty()) throw ParseError("expected a rational number, got '" + std::string(text) + "'");
  return terms[0].coefficient;
}

AlgebraElement parse_polynomial(const AlgebraPtr& owner, std::string_view text) {
  std::map<std::string, const Coefficients*> named;
  for (const auto& [name, coeffs] : owner->named_generators()) named.emplace(name, &coeffs);
  AlgebraElement out(owner);
  for (const auto& t : parse_terms(text)) {
    AlgebraElement term = AlgebraElement::constant(owner, reduce(owner->field(), t.coefficient));
    for (const auto& [name, exponent] : t.factors) {
      auto it = named.find(name);
      if (it == named.end()) parse_fail(text, t.position, "unknown generator '" + name + "'");
      term = term * AlgebraElement(owner, *it->second).pow(exponent);
    }
    out += term;
  }
  return out;
}

const SpaceModel& ModelSet::space(const std::string& name) const {
  auto it = spaces.find(name);
  if (it == spaces.end()) throw InvariantError("unknown space '" + name + "'");
  return it->second;
}

const BundleData& ModelSet::bundle(const std::string& name) const {
  auto it = bundles.find(name);
  if (it == bundles.end()) throw InvariantError("unknown bundle '" + name + "'");
  return it->second.second;
}

const NamedImmersion& ModelSet::immersion(const std::string& name) const {
  auto it = immersions.find(name);
  if (it == immersions.end()) throw InvariantError("unknown immersion '" + name + "'");
  return it->second;
}

const MapData& ModelSet::map(const std::string& name) const {
  auto it = maps.find(name);
  if (it == maps.end()) throw InvariantError("unknown map '" + name + "'");
  return it->second.second;
}

const MorinClass& ModelSet::morin_class(const std::string& name) const {
  auto it = morin.find(name);
  if (it == morin.end()) throw InvariantError("unknown Morin class '" + name + "'");
  return it->second;
}

CobordismClass parse_numbers(const Json& numbers, Field field, int dim) {
  if (!numbers.is_object()) throw ParseError("characteristic numbers must be an object {\"[1]\": \"3\", ...}");
  std::map<Partition, Scalar> out;
  for (const auto& [key, value] : numbers.items()) {
    Partition p = Partition::parse(key);
    out[p] = reduce(field, parse_scalar(value_text(value, "numbers")));
  }
  return CobordismClass::make(field, dim, out);
}

MorinClass parse_morin(const Json& spec) {
  const std::string where = "morin";
  const int n = get_int(spec, "n", where);
  const int k = get_int(spec, "k", where);
  std::map<int, CobordismClass> strata;
  if (auto it = spec.find("strata"); it != spec.end()) {
    if (!it->is_object()) throw ParseError(where + ": 'strata' must be an object");
    for (const auto& [key, value] : it->items()) {
      int r = 0;
      try {
        std::size_t used = 0;
        r = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::logic_error&) {
        throw ParseError(where + ": stratum key '" + key + "' is not an integer");
      }
      strata.emplace(r, parse_numbers(value, Field::Rat, n - r * (k + 1)));
    }
  }
  return MorinClass(n, k, std::move(strata));
}

ModelSet load_model(const Json& doc, Field default_field) {
  if (!doc.is_object()) throw ParseError("model file must be a JSON object");
  static const std::set<std::string> known{"spaces", "bundles", "immersions", "maps", "morin", "commands"};
  for (const auto& [key, _] : doc.items())
    if (!known.count(key)) throw ParseError("unknown top-level key '" + key + "'");
  auto section = [&](const char* key) -> Json {
    auto it = doc.find(key);
    if (it == doc.end()) return Json::object();
    if (!it->is_object()) throw ParseError(std::string("'") + key + "' must be an object");
    return *it;
  };

  ModelSet out;
  const Json spaces = section("spaces");
  std::set<std::string> visiting;
  std::function<const SpaceModel&(const std::string&, const std::string&)> resolve_space =
      [&](const std::string& name, const std::string& from) -> const SpaceModel& {
    if (auto it = out.spaces.find(name); it != out.spaces.end()) return it->second;
    auto spec_it = spaces.find(name);
    if (spec_it == spaces.end()) throw InvariantError(from + ": unknown space '" + name + "'");
    if (!visiting.insert(name).second) throw InvariantError(from + ": cyclic tensor reference through '" + name + "'");
    const Json& spec = *spec_it;
    const std::string where = context("spaces", name);
    SpaceModel model = build(where, [&] {
      if (!spec.is_object()) throw ParseError("expected an object");
      AlgebraPtr algebra;
      std::optional<TotalClass> tangent;
      if (auto t = spec.find("tensor"); t != spec.end()) {
        if (!t->is_array() || t->size() != 2 || !(*t)[0].is_string() || !(*t)[1].is_string())
          throw ParseError("'tensor' must list two space names");
        const SpaceModel& a = resolve_space((*t)[0].get<std::string>(), where);
        const SpaceModel& b = resolve_space((*t)[1].get<std::string>(), where);
        algebra = GradedAlgebra::tensor(a.algebra, b.algebra);
        tangent = whitney_sum(transport(LinearMap::left_inclusion(a.algebra, algebra), a.tangent),
                              transport(LinearMap::right_inclusion(b.algebra, algebra), b.tangent));
      } else {
        const Field field = field_of(spec, default_field, where);
        if (spec.contains("basis")) {
          algebra = explicit_algebra(spec, field, where);
        } else {
          const Json& gens = require(spec, "generators", where);
          if (!gens.is_array()) throw ParseError("'generators' must be an array");
          std::vector<Generator> list;
          int top = 0;
          for (const auto& g : gens) {
            Generator gen{get_string(g, "name", where), get_int(g, "degree", where), get_int(g, "nilpotency", where)};
            top += gen.degree * (gen.nilpotency - 1);
            list.push_back(std::move(gen));
          }
          const int dim = spec.contains("dim") ? get_int(spec, "dim", where) : top;
          algebra = GradedAlgebra::truncated_poly(std::move(list), field, dim);
        }
      }
      const ClassKind kind = kind_for(algebra->field());
      if (auto t = spec.find("tangent"); t != spec.end())
        tangent = TotalClass::from_element(polynomial_at(algebra, *t, where + ".tangent"), kind);
      if (!tangent) tangent = TotalClass(algebra, kind);
      return SpaceModel::make(algebra, *tangent);
    });
    visiting.erase(name);
    return out.spaces.emplace(name, std::move(model)).first->second;
  };
  for (const auto& [name, _] : spaces.items()) resolve_space(name, "spaces");

  const Json bundles_json = section("bundles");
  for (const auto& [name, spec] : bundles_json.items()) {
    const std::string where = context("bundles", name);
    const std::string space_name = get_string(spec, "space", where);
    const SpaceModel& space = resolve_space(space_name, where);
    BundleData data = build(where, [&] {
      const AlgebraPtr& a = space.algebra;
      TotalClass total(a, kind_for(a->field()));
      if (auto t = spec.find("total"); t != spec.end())
        total = TotalClass::from_element(polynomial_at(a, *t, where + ".total"), kind_for(a->field()));
      std::optional<AlgebraElement> euler;
      if (auto e = spec.find("euler"); e != spec.end()) euler = polynomial_at(a, *e, where + ".euler");
      return BundleData::make(total, get_int(spec, "rank", where), euler);
    });
    out.bundles.emplace(name, std::make_pair(space_name, std::move(data)));
  }

  const Json immersions_json = section("immersions");
  for (const auto& [name, spec] : immersions_json.items()) {
    const std::string where = context("immersions", name);
    const std::string space_name = get_string(spec, "space", where);
    const SpaceModel& space = resolve_space(space_name, where);
    NamedImmersion imm = build(where, [&] {
      const AlgebraPtr& a = space.algebra;
      const ClassKind kind = kind_for(a->field());
      const int codim = get_int(spec, "codim", where);
      std::optional<BundleData> normal;
      if (auto b = spec.find("bundle"); b != spec.end()) {
        if (!b->is_string()) throw ParseError("'bundle' must be a bundle name");
        auto it = out.bundles.find(b->get<std::string>());
        if (it == out.bundles.end()) throw InvariantError("unknown bundle '" + b->get<std::string>() + "'");
        if (it->second.first != space_name)
          throw InvariantError("bundle '" + it->first + "' lives over '" + it->second.first + "', not '" + space_name + "'");
        normal = it->second.second;
      } else {
        TotalClass total = stable_inverse(space.tangent);
        if (auto t = spec.find("normal"); t != spec.end())
          total = TotalClass::from_element(polynomial_at(a, *t, where + ".normal"), kind);
        std::optional<AlgebraElement> euler;
        if (auto e = spec.find("euler"); e != spec.end()) euler = polynomial_at(a, *e, where + ".euler");
        normal = BundleData::make(total, codim, euler);
      }
      std::optional<BetaSeries> gysin;
      if (auto g = spec.find("gysin"); g != spec.end()) {
        if (!g->is_object()) throw ParseError("'gysin' must map partitions to polynomials");
        std::map<Partition, AlgebraElement> coeffs;
        for (const auto& [key, value] : g->items())
          coeffs[Partition::parse(key)] = polynomial_at(a, value, where + ".gysin");
        gysin = BetaSeries::from_coefficients(a, kind, std::move(coeffs));
      }
      ImmersionData base = ImmersionData::make(space, codim, *normal, !gysin);
      const bool euclidean = !gysin;
      return NamedImmersion{GeneralMapData::make(std::move(base), std::move(gysin)), space_name, euclidean};
    });
    out.immersions.emplace(name, std::move(imm));
  }

  const Json maps_json = section("maps");
  for (const auto& [name, spec] : maps_json.items()) {
    const std::string where = context("maps", name);
    const std::string space_name = get_string(spec, "space", where);
    const SpaceModel& space = resolve_space(space_name, where);
    MapData data = build(where, [&] {
      TotalClass normal = stable_inverse(space.tangent);
      if (auto t = spec.find("normal"); t != spec.end())
        normal = TotalClass::from_element(polynomial_at(space.algebra, *t, where + ".normal"),
                                          kind_for(space.field()));
      return MapData::make(space, get_int(spec, "codim", where), normal);
    });
    out.maps.emplace(name, std::make_pair(space_name, std::move(data)));
  }

  const Json morin_json = section("morin");
  for (const auto& [name, spec] : morin_json.items())
    out.morin.emplace(name, build(context("morin", name), [&] { return parse_morin(spec); }));

  if (auto it = doc.find("commands"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("'commands' must be an array");
    for (const auto& c : *it) {
      if (!c.is_object() || !c.contains("op")) throw ParseError("each command must be an object with an 'op'");
      out.commands.push_back(c);
    }
  }
  return out;
}

ModelSet load_model_file(const std::string& path, Field default_field) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json doc;
  try {
    doc = Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return load_model(doc, default_field);
}

}  // namespace thom
