#pragma once

#include <gmpxx.h>

#include <string>

namespace thom {

enum class Field { Rat, F2 };

// Exact scalars. F2 values are kept reduced to 0 or 1.
using Scalar = mpq_class;

// Maps a rational into the field. For F2 the denominator must be odd.
Scalar reduce(Field field, Scalar value);

// "p" for integers, "p/q" otherwise (q > 0, lowest terms).
std::string to_string(const Scalar& value);

// "Q" or "F2".
std::string to_string(Field field);
Field parse_field(const std::string& text);

}  // namespace thom
