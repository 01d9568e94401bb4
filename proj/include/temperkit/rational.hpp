#pragma once

#include <boost/rational.hpp>

#include <string>

namespace temperkit {

/// Exact rational number; every ratio in the library is carried in this type.
using Rat = boost::rational<long long>;

/// Canonical "p/q" form (always with denominator), used by machine reports.
inline std::string rat_string(const Rat& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Human form: "p" when the denominator is 1, "p/q" otherwise.
inline std::string rat_pretty(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return rat_string(r);
}

}  // namespace temperkit
