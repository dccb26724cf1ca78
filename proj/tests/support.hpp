#pragma once

#include <string>

#include "doctest.h"
#include "hdet/bigreal.hpp"

namespace test {

inline hdet::BigReal value(const char* text, hdet::Precision p) { return hdet::BigReal::parse(text, p); }

/// |a - b| <= tol * max(1, |b|)
inline bool near(const hdet::BigReal& a, const hdet::BigReal& b, const hdet::BigReal& tol) {
  const hdet::BigReal one(1L, hdet::Precision(std::max(32, b.digits10())));
  return abs(a - b) <= tol * max(one, abs(b));
}

inline bool near(const hdet::BigReal& a, const hdet::BigReal& b, long exponent) {
  return near(a, b, hdet::pow10(exponent, hdet::Precision(std::max(32, b.digits10()))));
}

inline std::string show(const hdet::BigReal& a, const hdet::BigReal& b) {
  return a.to_string(30) + " vs " + b.to_string(30) + " (diff " + (a - b).to_string(4) + ")";
}

}  // namespace test
