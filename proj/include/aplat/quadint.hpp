#pragma once

#include <ostream>
#include <utility>

#include "aplat/numeric.hpp"

namespace aplat {

/**
 * QuadInt: element m + n*sqrt(D) of Z[sqrt(D)], D square-free >= 2.
 *
 * The representation (m, n) is unique because sqrt(D) is irrational, so
 * equality is componentwise. D travels with the value; mixing elements
 * of different rings is a usage error.
 */
class QuadInt {
 public:
  QuadInt() : d_(0) {}
  QuadInt(BigInt m, BigInt n, long long d)
      : m_(std::move(m)), n_(std::move(n)), d_(d) {}

  const BigInt& m() const { return m_; }
  const BigInt& n() const { return n_; }
  long long d() const { return d_; }

  bool operator==(const QuadInt& o) const {
    return d_ == o.d_ && m_ == o.m_ && n_ == o.n_;
  }
  bool operator!=(const QuadInt& o) const { return !(*this == o); }

  QuadInt operator+(const QuadInt& o) const {
    check_ring(o);
    return QuadInt(m_ + o.m_, n_ + o.n_, d_);
  }
  QuadInt operator-(const QuadInt& o) const {
    check_ring(o);
    return QuadInt(m_ - o.m_, n_ - o.n_, d_);
  }
  QuadInt operator-() const { return QuadInt(-m_, -n_, d_); }
  QuadInt operator*(const QuadInt& o) const {
    check_ring(o);
    return QuadInt(m_ * o.m_ + BigInt(d_) * n_ * o.n_,
                   m_ * o.n_ + n_ * o.m_, d_);
  }
  QuadInt operator*(const BigInt& k) const {
    return QuadInt(m_ * k, n_ * k, d_);
  }

  // Galois conjugate m - n*sqrt(D); an involutive ring homomorphism and
  // the projection to internal space.
  QuadInt star() const { return QuadInt(m_, -n_, d_); }

  BigInt norm() const { return m_ * m_ - BigInt(d_) * n_ * n_; }

  bool is_zero() const { return m_ == 0 && n_ == 0; }

  // Sign of the real value m + n*sqrt(D), exact.
  int value_sign() const { return quad_surd_sign(m_, n_, d_); }

  // Sign of value - r, exact.
  int cmp_value(const Rational& r) const {
    return quad_surd_cmp(m_, n_, d_, r);
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadInt& x) {
    os << x.m_;
    if (x.n_ >= 0) os << "+" << x.n_;
    else os << x.n_;
    return os << "*sqrt(" << x.d_ << ")";
  }

 private:
  void check_ring(const QuadInt& o) const {
    if (d_ != o.d_)
      throw UsageError("QuadInt: mismatched D (" + std::to_string(d_) +
                       " vs " + std::to_string(o.d_) + ")");
  }

  BigInt m_, n_;
  long long d_;
};

// Exact value order on a common ring.
inline int cmp_value(const QuadInt& a, const QuadInt& b) {
  if (a.d() != b.d()) throw UsageError("cmp_value: mismatched D");
  return quad_surd_sign(a.m() - b.m(), a.n() - b.n(), a.d());
}

inline bool value_less(const QuadInt& a, const QuadInt& b) {
  return cmp_value(a, b) < 0;
}

// |m + n*sqrt(D)| <= r (and the strict variant for open windows), with
// r >= 0, decided purely in integer arithmetic.
inline bool quad_abs_leq(const QuadInt& x, const Rational& r) {
  if (r < 0) throw UsageError("quad_abs_leq: negative bound");
  return x.cmp_value(r) <= 0 && (-x).cmp_value(r) <= 0;
}

inline bool quad_abs_lt(const QuadInt& x, const Rational& r) {
  if (r < 0) throw UsageError("quad_abs_lt: negative bound");
  return x.cmp_value(r) < 0 && (-x).cmp_value(r) < 0;
}

// Sign of |a| - |b|, exact.
inline int cmp_abs_value(const QuadInt& a, const QuadInt& b) {
  QuadInt aa = a.value_sign() >= 0 ? a : -a;
  QuadInt bb = b.value_sign() >= 0 ? b : -b;
  return cmp_value(aa, bb);
}

// Lexicographic (m, n) order; the deterministic tie-breaker.
inline bool lex_less(const QuadInt& a, const QuadInt& b) {
  if (a.m() != b.m()) return a.m() < b.m();
  return a.n() < b.n();
}

// Certified rational bounds on |value|.
inline Rational abs_value_upper(const QuadInt& x, unsigned bits = 64) {
  QuadInt a = x.value_sign() >= 0 ? x : -x;
  return quad_surd_upper(a.m(), a.n(), a.d(), bits);
}

inline Rational abs_value_lower(const QuadInt& x, unsigned bits = 64) {
  QuadInt a = x.value_sign() >= 0 ? x : -x;
  return quad_surd_lower(a.m(), a.n(), a.d(), bits);
}

struct QuadIntHash {
  size_t operator()(const QuadInt& x) const {
    size_t h = boost::hash<BigInt>{}(x.m());
    boost::hash_combine(h, boost::hash<BigInt>{}(x.n()));
    return h;
  }
};

inline uint64_t stable_digest(uint64_t h, const QuadInt& x) {
  h = digest_bigint(h, x.m());
  return digest_bigint(h, x.n());
}

}  // namespace aplat
