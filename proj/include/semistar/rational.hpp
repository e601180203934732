#pragma once

#include <gmpxx.h>

#include <string>

namespace semistar {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Report serialization: always "p/q", also for integers.
inline std::string rational_to_report(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Human rendering: "p" for integers, "p/q" otherwise.
inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace semistar
