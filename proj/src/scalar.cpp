#include "thom/scalar.hpp"

#include "thom/error.hpp"

namespace thom {

Scalar reduce(Field field, Scalar value) {
  value.canonicalize();
  if (field == Field::Rat) return value;
  if (mpz_even_p(value.get_den_mpz_t()))
    throw InvariantError("value " + to_string(value) + " has no image in F2");
  return Scalar(mpz_odd_p(value.get_num_mpz_t()) ? 1 : 0);
}

std::string to_string(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(Field field) { return field == Field::Rat ? "Q" : "F2"; }

Field parse_field(const std::string& text) {
  if (text == "Q" || text == "RAT") return Field::Rat;
  if (text == "F2") return Field::F2;
  throw ParseError("unknown field tag '" + text + "' (expected Q or F2)");
}

}  // namespace thom
