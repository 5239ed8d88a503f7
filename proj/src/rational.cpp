#include "fpguard/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace fpg {

Rational pow2(long k) {
  BigInt one = 1;
  if (k >= 0) {
    BigInt n = one << static_cast<unsigned long>(k);
    return Rational(n);
  }
  BigInt d = one << static_cast<unsigned long>(-k);
  Rational r(one, d);
  r.canonicalize();
  return r;
}

long floor_log2(const Rational& r) {
  if (sgn(r) <= 0) throw std::invalid_argument("floor_log2 requires r > 0");
  // n >= 2^(ln-1) and d < 2^ld give r > 2^(ln-ld-1); the dual bound gives
  // r < 2^(ln-ld+1), so the answer is ln-ld or ln-ld-1.
  long ln = static_cast<long>(mpz_sizeinbase(r.get_num().get_mpz_t(), 2));
  long ld = static_cast<long>(mpz_sizeinbase(r.get_den().get_mpz_t(), 2));
  long e = ln - ld;
  return r >= pow2(e) ? e : e - 1;
}

Rational rational_abs(const Rational& r) { return sgn(r) < 0 ? Rational(-r) : r; }

namespace {

BigInt pow10(unsigned long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

}  // namespace

Rational rational_from_literal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty numeric literal");
  if (text.find('/') != std::string::npos) {
    Rational r;
    if (r.set_str(text, 10) != 0)
      throw std::invalid_argument("malformed fraction '" + text + "'");
    if (sgn(r.get_den()) == 0)
      throw std::invalid_argument("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
  }

  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.'); ++i) {
    if (text[i] == '.') {
      if (seen_dot) throw std::invalid_argument("malformed literal '" + text + "'");
      seen_dot = true;
    } else {
      digits.push_back(text[i]);
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed literal '" + text + "'");
  long exp10 = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_neg = text[i] == '-';
      ++i;
    }
    if (i >= text.size()) throw std::invalid_argument("malformed exponent in '" + text + "'");
    long v = 0;
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("malformed exponent in '" + text + "'");
      v = v * 10 + (text[i] - '0');
      if (v > 1000000) throw std::invalid_argument("exponent out of range in '" + text + "'");
    }
    exp10 = exp_neg ? -v : v;
  }
  if (i != text.size()) throw std::invalid_argument("malformed literal '" + text + "'");

  BigInt mantissa(digits.empty() ? "0" : digits);
  long net = exp10 - frac_digits;
  Rational r(mantissa);
  if (net > 0)
    r *= Rational(pow10(static_cast<unsigned long>(net)));
  else if (net < 0) {
    Rational scale(BigInt(1), pow10(static_cast<unsigned long>(-net)));
    scale.canonicalize();
    r *= scale;
  }
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace fpg
