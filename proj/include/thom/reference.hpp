#pragma once

// Serial reference implementations of the parallel kernels. They follow the
// defining formulas literally and are kept for cross-checking and benchmarks.

#include "thom/charclass.hpp"

namespace thom::reference {

// Coefficient at each exponent vector a is the sum over all splittings
// a = b + c of s_{part(b)} t_{part(c)}, enumerated one entry at a time.
BetaSeries series_mul(const BetaSeries& s, const BetaSeries& t);

// Expands prod_{i <= l(lambda)} (1 + u_1 t_i + u_2 t_i^2 + ...) variable by
// variable and reads off the coefficient of t^lambda.
BetaSeries beta_of(const TotalClass& u);

}  // namespace thom::reference
