#pragma once

#include <gmpxx.h>

#include <string>

namespace tqftkit {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q" in base 10. Throws ParseError otherwise.
Rat rat_from_string(const std::string& s);

// Same grammar, but additionally rejects inputs that are not already in
// lowest terms with positive denominator ("2/8", "1/-2").
Rat rat_from_string_strict(const std::string& s);

std::string rat_str(const Rat& r);
std::string int_str(const Int& z);

bool rat_is_integer(const Rat& r);

// Largest integer <= r.
Int rat_floor(const Rat& r);

// Representative of r mod 1 in [0, 1).
Rat rat_mod1(const Rat& r);

// Checked narrowing; throws TooLarge when the value does not fit.
long long to_ll(const Int& z);

// gmpxx has no long long constructor; lossless on LP64.
inline Int int_of(long long v) { return Int(static_cast<long>(v)); }

double to_double(const Rat& r);

Int int_pow(const Int& base, unsigned long e);

// gcd/lcm on long long via mpz, always nonnegative.
long long lcm_ll(long long a, long long b);

}  // namespace tqftkit
