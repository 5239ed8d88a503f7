#pragma once

#include <gmpxx.h>

#include <string>

namespace fpg {

// Exact rational arithmetic. All analysis-side numbers are mpq_class values;
// nothing in the analyzer ever rounds.
using Rational = mpq_class;
using BigInt = mpz_class;

// 2^k as an exact rational, k may be negative.
Rational pow2(long k);

// floor(log2(r)) for r > 0, i.e. the unique E with 2^E <= r < 2^(E+1).
long floor_log2(const Rational& r);

Rational rational_abs(const Rational& r);

// Parses a decimal literal ("3", "-1.5", "6.48e-12") or a fraction "a/b"
// into an exact rational. Throws std::invalid_argument on malformed input.
Rational rational_from_literal(const std::string& text);

// "n" or "n/d", always exact.
std::string rational_to_string(const Rational& r);

}  // namespace fpg
