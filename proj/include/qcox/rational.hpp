#pragma once

#include <gmpxx.h>

#include <string>

namespace qcox {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "3", "-2/5", "0".
Rational parse_rational(const std::string& s);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace qcox
