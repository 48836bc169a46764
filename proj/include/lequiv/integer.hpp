#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lequiv {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Floor-style remainder in [0, |m|).
inline Integer mod_floor(Integer const& a, Integer const& m) {
  Integer r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

}  // namespace lequiv
