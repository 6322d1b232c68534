#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace nfl {

// Exact arithmetic everywhere: NFL identities hold with equality, so averages
// must be compared exactly. The only floating-point quantity in the library is
// fitness-distance correlation (square roots), computed in metrics.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Canonical text form: integers render bare ("3", "-2"), everything else as
// "p/q" in lowest terms. parse_rational accepts both forms.
std::string rational_to_string(const Rat& value);
Rat parse_rational(const std::string& text);

double rational_to_double(const Rat& value);

} // namespace nfl
