#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclemax {

/// Exact arithmetic scalar for drift-free reference computations.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_pow(Rational base, int exp) {
  Rational out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace cyclemax
