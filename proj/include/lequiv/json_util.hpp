#pragma once

#include <limits>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "lequiv/integer.hpp"

namespace lequiv {

// Integers that fit in 64 bits are emitted as JSON numbers, larger ones as
// decimal strings.
inline nlohmann::json integer_to_json(Integer const& v) {
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(v);
  }
  return v.str();
}

inline Integer integer_from_json(nlohmann::json const& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

inline std::string rational_to_string(Rational const& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rational_from_string(std::string const& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

}  // namespace lequiv
