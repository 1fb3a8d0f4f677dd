#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "thom/cobordism.hpp"
#include "thom/morin.hpp"
#include "thom/multipoint.hpp"
#include "thom/singularity.hpp"

namespace thom {

using Json = nlohmann::ordered_json;

// One parsed term of a polynomial string: coefficient times a product of
// generator powers. `position` is the offset of the term in the input.
struct PolynomialTerm {
  Scalar coefficient;
  std::vector<std::pair<std::string, int>> factors;
  std::size_t position = 0;
};

// expr := ['-'] term (('+'|'-') term)*
// term := coeff ('*' gen ('^' int)?)* | gen ('^' int)? ('*' gen ('^' int)?)*
// coeff := int | int '/' int
std::vector<PolynomialTerm> parse_terms(std::string_view text);
// Evaluates a polynomial string over the named generators of `owner`.
AlgebraElement parse_polynomial(const AlgebraPtr& owner, std::string_view text);
// "3", "-1/2". F2 values are reduced.
Scalar parse_scalar(std::string_view text);

struct NamedImmersion {
  GeneralMapData data;
  std::string space;
  bool euclidean = true;
};

struct ModelSet {
  std::map<std::string, SpaceModel> spaces;
  std::map<std::string, std::pair<std::string, BundleData>> bundles;  // space name, bundle
  std::map<std::string, NamedImmersion> immersions;
  std::map<std::string, std::pair<std::string, MapData>> maps;
  std::map<std::string, MorinClass> morin;
  std::vector<Json> commands;

  const SpaceModel& space(const std::string& name) const;
  const BundleData& bundle(const std::string& name) const;
  const NamedImmersion& immersion(const std::string& name) const;
  const MapData& map(const std::string& name) const;
  const MorinClass& morin_class(const std::string& name) const;
};

// Builds and validates every object. `default_field` applies to spaces that
// do not state a field.
ModelSet load_model(const Json& doc, Field default_field = Field::Rat);
ModelSet load_model_file(const std::string& path, Field default_field = Field::Rat);

// Numbers object {"[1,1]": "18", ...} of the given dimension.
CobordismClass parse_numbers(const Json& numbers, Field field, int dim);
MorinClass parse_morin(const Json& spec);

}  // namespace thom
