#pragma once

#include <optional>
#include <ostream>
#include <utility>

#include "aplat/numeric.hpp"

namespace aplat {

/**
 * PadicRat: element a / p^k of Z[1/p].
 *
 * Canonical form: p does not divide a, or a = 0 and k = 0. Integers are
 * stored as (a, 0) without factoring out p; the valuation is computed
 * lazily by trial division when asked for.
 */
class PadicRat {
 public:
  PadicRat() : k_(0), p_(0) {}
  PadicRat(BigInt a, unsigned k, long long p) : a_(std::move(a)), k_(k), p_(p) {
    canonicalize();
  }

  const BigInt& a() const { return a_; }
  unsigned k() const { return k_; }
  long long p() const { return p_; }

  bool operator==(const PadicRat& o) const {
    return p_ == o.p_ && k_ == o.k_ && a_ == o.a_;
  }
  bool operator!=(const PadicRat& o) const { return !(*this == o); }

  PadicRat operator+(const PadicRat& o) const {
    check_ring(o);
    unsigned k = std::max(k_, o.k_);
    BigInt sum = a_ * bigint_pow(p_, k - k_) + o.a_ * bigint_pow(p_, k - o.k_);
    return PadicRat(std::move(sum), k, p_);
  }
  PadicRat operator-(const PadicRat& o) const { return *this + (-o); }
  PadicRat operator-() const {
    PadicRat r;
    r.a_ = -a_;
    r.k_ = k_;
    r.p_ = p_;
    return r;  // already canonical
  }
  PadicRat operator*(const PadicRat& o) const {
    check_ring(o);
    return PadicRat(a_ * o.a_, k_ + o.k_, p_);
  }
  PadicRat operator*(const BigInt& c) const { return PadicRat(a_ * c, k_, p_); }

  bool is_zero() const { return a_ == 0; }

  // v_p(a/p^k) = v_p(a) - k; nullopt encodes +infinity (the zero element).
  std::optional<long long> padic_val() const {
    if (a_ == 0) return std::nullopt;
    long long v = 0;
    BigInt t = a_;
    while (t % p_ == 0) {
      t /= p_;
      ++v;
    }
    return v - static_cast<long long>(k_);
  }

  // |a| / p^k as an exact rational.
  Rational arch_abs() const {
    return Rational(abs(a_), bigint_pow(p_, k_));
  }

  Rational value() const { return Rational(a_, bigint_pow(p_, k_)); }

  bool canonical() const { return (k_ == 0) || (a_ % p_ != 0); }

  friend std::ostream& operator<<(std::ostream& os, const PadicRat& x) {
    return os << x.a_ << "/" << x.p_ << "^" << x.k_;
  }

 private:
  void check_ring(const PadicRat& o) const {
    if (p_ != o.p_)
      throw UsageError("PadicRat: mismatched p (" + std::to_string(p_) +
                       " vs " + std::to_string(o.p_) + ")");
  }
  void canonicalize() {
    if (a_ == 0) {
      k_ = 0;
      return;
    }
    while (k_ > 0 && a_ % p_ == 0) {
      a_ /= p_;
      --k_;
    }
  }

  BigInt a_;
  unsigned k_;
  long long p_;
};

// Exact order on the rational values.
inline int cmp_value(const PadicRat& a, const PadicRat& b) {
  if (a.p() != b.p()) throw UsageError("cmp_value: mismatched p");
  unsigned k = std::max(a.k(), b.k());
  BigInt lhs = a.a() * bigint_pow(a.p(), k - a.k());
  BigInt rhs = b.a() * bigint_pow(b.p(), k - b.k());
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

inline bool value_less(const PadicRat& a, const PadicRat& b) {
  return cmp_value(a, b) < 0;
}

inline bool lex_less(const PadicRat& a, const PadicRat& b) {
  if (a.a() != b.a()) return a.a() < b.a();
  return a.k() < b.k();
}

struct PadicRatHash {
  size_t operator()(const PadicRat& x) const {
    size_t h = boost::hash<BigInt>{}(x.a());
    boost::hash_combine(h, x.k());
    return h;
  }
};

inline uint64_t stable_digest(uint64_t h, const PadicRat& x) {
  h = digest_bigint(h, x.a());
  return digest_bigint(h, BigInt(x.k()));
}

}  // namespace aplat
