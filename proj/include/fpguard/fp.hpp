#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpguard/rational.hpp"

namespace fpg {

// A binary floating-point format: precision p and minimal exponent e_min,
// both positive. IEEE single is (24, 149), double is (53, 1074). Exponents
// are stored signed, with e_min the magnitude of the most negative one.
struct Format {
  int precision;
  long e_min;

  static Format binary32() { return Format{24, 149}; }
  static Format binary64() { return Format{53, 1074}; }

  // Largest stored exponent of a canonical float: e_min - 2p + 3.
  // (971 for binary64, 104 for binary32.)
  long e_top() const { return e_min - 2 * precision + 3; }

  bool operator==(const Format&) const = default;
};

// A canonical floating-point value (m, e): either normal
// (2^(p-1) <= |m| < 2^p) or subnormal (e = -e_min, |m| < 2^(p-1)).
// Zero is (0, -e_min). Significands of the supported formats fit in 64 bits.
struct Float {
  std::int64_t m = 0;
  long e = 0;

  bool is_zero() const { return m == 0; }
  bool operator==(const Float&) const = default;
};

Float float_zero(const Format& f);

// Exact value m * 2^e.
Rational to_real(const Float& v);

// |to_real(v) - r|, exact.
Rational roundoff_error(const Float& v, const Rational& r);

// Nearest canonical float of the format, ties to even significand.
// Throws OverflowError when |r| exceeds the largest finite value.
Float round_nearest(const Rational& r, const Format& f);

// Smallest float >= r (round toward +inf). Used to embed sound error bounds
// as representable literals.
Float round_up(const Rational& r, const Format& f);

// Successor in value order; throws OverflowError past the top.
Float next_up(const Float& v, const Format& f);

// Unit in the last place at magnitude |r|: 2^(E-p+1) for the binade E of
// max(|r|, smallest normal); 2^(-e_min) throughout the subnormal range.
Rational ulp(const Rational& r, const Format& f);

enum class ArithOp { add, sub, mul, neg };

// Correctly rounded arithmetic: round_nearest of the exact real result.
// neg is exact. add/sub/mul take two operands, neg takes one.
Float exec_op(ArithOp op, const std::vector<Float>& args, const Format& f);

// Sign of to_real(a) - to_real(b): -1, 0, or +1.
int compare(const Float& a, const Float& b);

// Exact conversions between canonical floats and native IEEE values.
// Only finite values are supported; from_* reject inf/NaN.
double to_double(const Float& v);           // format must be binary64
Float from_double(double d);                // canonical binary64
float to_binary32(const Float& v);          // format must be binary32
Float from_binary32(float x);               // canonical binary32

// Shortest decimal that parses back (via round_nearest in the same format)
// to exactly v. Only binary32/binary64 are supported.
std::string float_to_string(const Float& v, const Format& f);

}  // namespace fpg
