#pragma once

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "aplat/errors.hpp"

namespace aplat {

// All membership decisions run on these two types; no floating point
// appears in any decision path.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const BigInt& x) { return x.sign(); }
inline int sign_of(const Rational& x) { return x.sign(); }

// floor(num / den), den > 0.
inline BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  if (num % den != 0 && ((num < 0) != (den < 0))) --q;
  return q;
}

// floor(sqrt(x)), x >= 0.
inline BigInt isqrt_floor(const BigInt& x) {
  if (x < 0) throw UsageError("isqrt_floor: negative argument");
  return boost::multiprecision::sqrt(x);
}

// Sign of e + f*sqrt(d) for square-free d >= 2 (so sqrt(d) is irrational
// and the expression vanishes only at e = f = 0).
inline int quad_surd_sign(const BigInt& e, const BigInt& f, long long d) {
  if (f == 0) return sign_of(e);
  if (e == 0) return f > 0 ? 1 : -1;
  if (e > 0 && f > 0) return 1;
  if (e < 0 && f < 0) return -1;
  // Mixed signs: |e| vs |f|*sqrt(d), decided by squaring. Equality of the
  // squares would force sqrt(d) rational, so it cannot occur here.
  BigInt lhs = e * e;
  BigInt rhs = f * f * d;
  if (e > 0) return lhs > rhs ? 1 : -1;
  return lhs > rhs ? -1 : 1;
}

// Sign of (e + f*sqrt(d)) - r for rational r.
inline int quad_surd_cmp(const BigInt& e, const BigInt& f, long long d,
                         const Rational& r) {
  const BigInt& rn = numerator(r);
  const BigInt& rd = denominator(r);
  return quad_surd_sign(e * rd - rn, f * rd, d);
}

// floor((p + f*sqrt(d)) / q), q > 0, d square-free >= 2.
inline BigInt floor_quad_surd(const BigInt& p, const BigInt& f,
                              const BigInt& q, long long d) {
  if (q <= 0) throw UsageError("floor_quad_surd: q must be positive");
  if (f == 0) return floor_div(p, q);
  BigInt s = isqrt_floor(f * f * d);
  // floor(f*sqrt(d)) = s for f > 0, and -s - 1 for f < 0 (never exact).
  BigInt t = (f > 0) ? s : BigInt(-s - 1);
  return floor_div(p + t, q);
}

inline BigInt ceil_quad_surd(const BigInt& p, const BigInt& f, const BigInt& q,
                             long long d) {
  return -floor_quad_surd(-p, -f, q, d);
}

// Certified rational bounds on e + f*sqrt(d), tight to 2^-bits and
// exact when the value is rational (f = 0).
inline Rational quad_surd_lower(const BigInt& e, const BigInt& f, long long d,
                                unsigned bits = 64) {
  if (f == 0) return Rational(e);
  BigInt scale = BigInt(1) << bits;
  BigInt fl = floor_quad_surd(e * scale, f * scale, 1, d);
  return Rational(fl, scale);
}

inline Rational quad_surd_upper(const BigInt& e, const BigInt& f, long long d,
                                unsigned bits = 64) {
  if (f == 0) return Rational(e);
  BigInt scale = BigInt(1) << bits;
  BigInt fl = floor_quad_surd(e * scale, f * scale, 1, d);
  return Rational(fl + 1, scale);
}

inline BigInt bigint_pow(const BigInt& base, unsigned exp) {
  BigInt r = 1, b = base;
  while (exp) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

// Decimal expansion of a rational to `digits` places, round half away
// from zero. Used for report output only.
inline std::string decimal_string(const Rational& r, int digits) {
  BigInt n = numerator(r), d = denominator(r);
  bool neg = n < 0;
  if (neg) n = -n;
  BigInt scale = bigint_pow(10, static_cast<unsigned>(digits));
  BigInt scaled = n * scale;
  BigInt q = scaled / d;
  BigInt rem = scaled % d;
  if (2 * rem >= d) ++q;
  BigInt ip = q / scale, fp = q % scale;
  std::string out = (neg && q != 0 ? "-" : "") + ip.str();
  if (digits > 0) {
    std::string frac = fp.str();
    frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');
    out += "." + frac;
  }
  return out;
}

// Parse "a", "-a", or "a/b" into a rational. Decimal points rejected:
// all inputs are exact.
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt n(s.substr(0, slash));
    BigInt d(s.substr(slash + 1));
    if (d <= 0) throw UsageError("rational denominator must be positive: " + s);
    return Rational(n, d);
  } catch (const std::runtime_error&) {
    throw UsageError("not a rational (use 'a' or 'a/b'): " + s);
  }
}

inline std::string rational_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// SplitMix64 finalizer; the mixing core of the counter-based generator
// used for seeded subset selection.
inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Stable digest of a BigInt: depends only on sign and magnitude bytes,
// never on limb layout, so verdicts keyed by coordinates are portable.
inline uint64_t digest_bigint(uint64_t h, const BigInt& x) {
  h = mix64(h ^ (x < 0 ? 0xa5a5a5a5a5a5a5a5ull : 0x5a5a5a5a5a5a5a5aull));
  if (x == 0) return mix64(h);
  std::vector<uint8_t> bytes;
  export_bits(BigInt(abs(x)), std::back_inserter(bytes), 8);
  for (uint8_t b : bytes) h = mix64(h ^ b);
  return h;
}

struct BigIntHash {
  size_t operator()(const BigInt& x) const { return boost::hash<BigInt>{}(x); }
};

}  // namespace aplat
