#include "fpguard/fp.hpp"

#include <charconv>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "fpguard/errors.hpp"

namespace fpg {

namespace {

long bit_length(const BigInt& m) {
  if (sgn(m) == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 2));
}

std::int64_t to_i64(const BigInt& m) {
  if (!m.fits_slong_p())
    throw std::logic_error("significand does not fit in 64 bits");
  return mpz_get_si(m.get_mpz_t());
}

// Nearest integer to num/den with ties to even, den > 0.
BigInt nearest_even_quotient(const BigInt& num, const BigInt& den) {
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  int c = cmp(r * 2, den);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
  return q;
}

// Rounds the exact dyadic value m * 2^e to the nearest canonical float.
Float round_dyadic(const BigInt& m, long e, const Format& f) {
  if (sgn(m) == 0) return float_zero(f);
  bool negative = sgn(m) < 0;
  BigInt mag = negative ? BigInt(-m) : m;
  long bits = bit_length(mag);
  long binade = e + bits - 1;
  if (binade - f.precision + 1 > f.e_top())
    throw OverflowError("value exceeds largest finite float");
  long e_out = std::max(binade - f.precision + 1, -f.e_min);
  long shift = e_out - e;
  BigInt q;
  if (shift <= 0) {
    q = mag << static_cast<unsigned long>(-shift);
  } else {
    BigInt half = BigInt(1) << static_cast<unsigned long>(shift - 1);
    BigInt rem;
    mpz_fdiv_r_2exp(rem.get_mpz_t(), mag.get_mpz_t(), static_cast<unsigned long>(shift));
    mpz_fdiv_q_2exp(q.get_mpz_t(), mag.get_mpz_t(), static_cast<unsigned long>(shift));
    int c = cmp(rem, half);
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
    if (bit_length(q) > f.precision) {  // carried into the next binade
      q >>= 1;
      ++e_out;
    }
  }
  if (e_out > f.e_top()) throw OverflowError("value exceeds largest finite float");
  std::int64_t sig = to_i64(q);
  return Float{negative ? -sig : sig, e_out};
}

}  // namespace

Float float_zero(const Format& f) { return Float{0, -f.e_min}; }

Rational to_real(const Float& v) {
  return Rational(BigInt(static_cast<long>(v.m))) * pow2(v.e);
}

Rational roundoff_error(const Float& v, const Rational& r) {
  return rational_abs(to_real(v) - r);
}

Float round_nearest(const Rational& r, const Format& f) {
  if (sgn(r) == 0) return float_zero(f);
  const BigInt& num = r.get_num();
  const BigInt& den = r.get_den();
  if (mpz_popcount(den.get_mpz_t()) == 1) {
    // Power-of-two denominator: the value is an exact dyadic.
    long k = static_cast<long>(mpz_scan1(den.get_mpz_t(), 0));
    return round_dyadic(num, -k, f);
  }
  bool negative = sgn(num) < 0;
  Rational mag = rational_abs(r);
  long binade = floor_log2(mag);
  if (binade - f.precision + 1 > f.e_top())
    throw OverflowError("value exceeds largest finite float");
  long e_out = std::max(binade - f.precision + 1, -f.e_min);
  BigInt n = negative ? BigInt(-num) : num;
  BigInt d = den;
  if (e_out < 0)
    n <<= static_cast<unsigned long>(-e_out);
  else
    d <<= static_cast<unsigned long>(e_out);
  BigInt q = nearest_even_quotient(n, d);
  if (bit_length(q) > f.precision) {
    q >>= 1;
    ++e_out;
  }
  if (e_out > f.e_top()) throw OverflowError("value exceeds largest finite float");
  std::int64_t sig = to_i64(q);
  return Float{negative ? -sig : sig, e_out};
}

Float round_up(const Rational& r, const Format& f) {
  Float v = round_nearest(r, f);
  if (to_real(v) < r) v = next_up(v, f);
  return v;
}

Float next_up(const Float& v, const Format& f) {
  std::int64_t top = std::int64_t(1) << f.precision;
  std::int64_t half = top >> 1;
  if (v.m == 0) return Float{1, -f.e_min};
  if (v.m > 0) {
    if (v.m + 1 == top) {
      if (v.e + 1 > f.e_top()) throw OverflowError("next_up past largest finite float");
      return Float{half, v.e + 1};
    }
    return Float{v.m + 1, v.e};
  }
  // Negative: step toward zero, i.e. decrement the magnitude.
  std::int64_t mag = -v.m;
  if (mag == half && v.e > -f.e_min) return Float{-(top - 1), v.e - 1};
  return Float{-(mag - 1), v.e};
}

Rational ulp(const Rational& r, const Format& f) {
  if (sgn(r) == 0) return pow2(-f.e_min);
  Rational mag = rational_abs(r);
  long smallest_normal_exp = -f.e_min + f.precision - 1;
  if (mag < pow2(smallest_normal_exp)) return pow2(-f.e_min);
  return pow2(floor_log2(mag) - f.precision + 1);
}

Float exec_op(ArithOp op, const std::vector<Float>& args, const Format& f) {
  switch (op) {
    case ArithOp::neg:
      return Float{-args.at(0).m, args.at(0).e};
    case ArithOp::add:
    case ArithOp::sub: {
      const Float& a = args.at(0);
      const Float& b = args.at(1);
      long e = std::min(a.e, b.e);
      BigInt ma = BigInt(static_cast<long>(a.m)) << static_cast<unsigned long>(a.e - e);
      BigInt mb = BigInt(static_cast<long>(b.m)) << static_cast<unsigned long>(b.e - e);
      return round_dyadic(op == ArithOp::add ? BigInt(ma + mb) : BigInt(ma - mb), e, f);
    }
    case ArithOp::mul: {
      const Float& a = args.at(0);
      const Float& b = args.at(1);
      BigInt m = BigInt(static_cast<long>(a.m)) * BigInt(static_cast<long>(b.m));
      return round_dyadic(m, a.e + b.e, f);
    }
  }
  throw std::logic_error("unknown arithmetic operator");
}

int compare(const Float& a, const Float& b) {
  int sa = (a.m > 0) - (a.m < 0);
  int sb = (b.m > 0) - (b.m < 0);
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  // Same nonzero sign: compare magnitudes by binade, then aligned.
  unsigned __int128 ma = static_cast<unsigned __int128>(a.m < 0 ? -a.m : a.m);
  unsigned __int128 mb = static_cast<unsigned __int128>(b.m < 0 ? -b.m : b.m);
  int la = 64 - __builtin_clzll(static_cast<unsigned long long>(ma));
  int lb = 64 - __builtin_clzll(static_cast<unsigned long long>(mb));
  long pa = a.e + la;
  long pb = b.e + lb;
  int mag_cmp;
  if (pa != pb) {
    mag_cmp = pa < pb ? -1 : 1;
  } else {
    // Binades match, so the exponent gap is at most ~64 and both shifted
    // magnitudes fit in 128 bits.
    long d = a.e - b.e;
    if (d >= 0)
      ma <<= d;
    else
      mb <<= -d;
    mag_cmp = ma < mb ? -1 : (ma > mb ? 1 : 0);
  }
  return sa > 0 ? mag_cmp : -mag_cmp;
}

namespace {

constexpr std::uint64_t kLow52 = (std::uint64_t(1) << 52) - 1;
constexpr std::uint32_t kLow23 = (std::uint32_t(1) << 23) - 1;

}  // namespace

double to_double(const Float& v) {
  return std::ldexp(static_cast<double>(v.m), static_cast<int>(v.e));
}

Float from_double(double d) {
  std::uint64_t bits;
  std::memcpy(&bits, &d, sizeof bits);
  bool negative = bits >> 63;
  std::uint64_t raw_exp = (bits >> 52) & 0x7FF;
  std::uint64_t mant = bits & kLow52;
  if (raw_exp == 0x7FF) throw OverflowError("infinity/NaN has no canonical form");
  std::int64_t m;
  long e;
  if (raw_exp == 0) {
    m = static_cast<std::int64_t>(mant);
    e = -1074;
  } else {
    m = static_cast<std::int64_t>(mant | (std::uint64_t(1) << 52));
    e = static_cast<long>(raw_exp) - 1075;
  }
  if (m == 0) e = -1074;
  return Float{negative ? -m : m, e};
}

float to_binary32(const Float& v) {
  return static_cast<float>(std::ldexp(static_cast<double>(v.m), static_cast<int>(v.e)));
}

Float from_binary32(float x) {
  std::uint32_t bits;
  std::memcpy(&bits, &x, sizeof bits);
  bool negative = bits >> 31;
  std::uint32_t raw_exp = (bits >> 23) & 0xFF;
  std::uint32_t mant = bits & kLow23;
  if (raw_exp == 0xFF) throw OverflowError("infinity/NaN has no canonical form");
  std::int64_t m;
  long e;
  if (raw_exp == 0) {
    m = static_cast<std::int64_t>(mant);
    e = -149;
  } else {
    m = static_cast<std::int64_t>(mant | (std::uint32_t(1) << 23));
    e = static_cast<long>(raw_exp) - 150;
  }
  if (m == 0) e = -149;
  return Float{negative ? -m : m, e};
}

std::string float_to_string(const Float& v, const Format& f) {
  char buf[64];
  std::to_chars_result res{};
  if (f == Format::binary64()) {
    res = std::to_chars(buf, buf + sizeof buf, to_double(v));
  } else if (f == Format::binary32()) {
    res = std::to_chars(buf, buf + sizeof buf, to_binary32(v));
  } else {
    throw std::invalid_argument("printing supports binary32/binary64 only");
  }
  return std::string(buf, res.ptr);
}

}  // namespace fpg
