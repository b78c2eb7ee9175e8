#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace pentlab {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVec = std::vector<Integer>;
using Vec = std::vector<Rational>;

// Accepts "p/q" or "p" with an optional leading sign; the result is reduced.
Rational parse_rational(std::string_view text);

// Canonical text form: "p/q" with q > 1, or "p".
std::string to_string(const Rational& q);

Rational mean(const Vec& values);

}  // namespace pentlab
