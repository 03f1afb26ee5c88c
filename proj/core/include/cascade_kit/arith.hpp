#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cascade_kit {

// All arithmetic in this library is exact: pairing values decide verdicts,
// so rounding anywhere would be unacceptable.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

// True exactly when q is an odd multiple of 1/2.
inline bool is_half_odd_integer(const Rat& q) { return denominator(q) == 2; }

} // namespace cascade_kit
