#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace skel {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar used throughout the library. Values are always kept
// in canonical form: lowest terms with a positive denominator.
using Rat = boost::multiprecision::cpp_rational;

// Builds p/q in canonical form. q must be nonzero.
Rat make_rat(const Int& p, const Int& q);

// Canonical text form: "p" for integers, otherwise "p/q" with q > 1.
std::string rat_to_string(const Rat& value);

// Accepts "p" or "p/q" where p is an optionally signed decimal integer and q
// is an unsigned decimal integer. Normalizes, so "2/4" parses to 1/2. Throws
// Error(SyntaxError) on malformed input or a zero denominator.
Rat parse_rat(std::string_view text);

}  // namespace skel
