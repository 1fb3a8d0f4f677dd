#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thom/model_io.hpp"

namespace thom {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  Json command;
  Json result;
  std::vector<Check> checks;
  std::optional<double> seconds;

  bool all_pass() const;
  Json to_json() const;
};

// {"[1,1]": "18", "[2]": "9"}; an empty object for a class of negative
// dimension.
Json render_numbers(const CobordismClass& c);
// Nonzero coefficients only: {"[]": "1", "[1]": "3*x^2"}.
Json render_series(const BetaSeries& s);
// {"n": 8, "k": 3, "strata": {"0": {...}, "2": {...}}}
Json render_morin(const MorinClass& m);

// Report JSON text: two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace thom
