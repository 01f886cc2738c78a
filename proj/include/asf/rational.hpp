#pragma once

#include <gmpxx.h>

#include <string>

#include "asf/common.hpp"

namespace asf {

// Exact rationals, always normalized (positive denominator, reduced).
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Canonical serialization: "num/den", denominator always present and > 0.
inline std::string rat_str(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "p" and "p/q".
inline Rational rat_parse(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw UsageError("bad rational: " + text);
  if (q.get_den() == 0) throw UsageError("zero denominator: " + text);
  q.canonicalize();
  return q;
}

}  // namespace asf
