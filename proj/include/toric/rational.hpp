#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace toric {

/// Exact rational number. Every coordinate, pairing and bound in the library
/// is one of these (or a plain integer); nothing is ever a float.
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Throws std::domain_error when `r` is not an integer that fits in 64 bits.
std::int64_t to_int64(const Rational& r);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

}  // namespace toric
