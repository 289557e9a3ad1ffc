#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "aplat/padicrat.hpp"
#include "aplat/quadint.hpp"

using namespace aplat;

namespace {

// Independent oracle: 100-digit fixed-point arithmetic. sqrt(D) is
// represented as floor(sqrt(D) * 10^100); the absolute error of the
// fixed-point value of m + n*sqrt(D) is below (|n|+1) units, so any
// comparison decided with more slack than that is trustworthy.
struct FixedPointOracle {
  BigInt scale = bigint_pow(10, 100);
  BigInt sqrt_fix;
  long long d;

  explicit FixedPointOracle(long long d_) : d(d_) {
    sqrt_fix = isqrt_floor(BigInt(d) * scale * scale);
  }

  // -1 / 0 / +1 for |m + n sqrt(D)| vs r, or nullopt when too close to
  // call at this precision.
  std::optional<int> cmp_abs(const BigInt& m, const BigInt& n,
                             const Rational& r) const {
    BigInt v = m * scale + n * sqrt_fix;
    if (v < 0) v = -v;
    BigInt rhs = numerator(r) * scale / denominator(r);
    BigInt slack = (abs(n) + 2) * denominator(r);
    if (v > rhs + slack) return 1;
    if (v + slack < rhs) return -1;
    return std::nullopt;
  }
};

uint64_t stream(uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  return mix64(s);
}

QuadInt rand_quad(uint64_t& s, long long d, long long bound) {
  long long m = (long long)(stream(s) % (2 * bound + 1)) - bound;
  long long n = (long long)(stream(s) % (2 * bound + 1)) - bound;
  return QuadInt(m, n, d);
}

}  // namespace

TEST_CASE("quad_add basics") {
  QuadInt a(1, 1, 2), b(1, -1, 2);
  CHECK(a + b == QuadInt(2, 0, 2));
  CHECK(a + QuadInt(0, 0, 2) == a);
  QuadInt c(3, 2, 2);
  CHECK(c + c == QuadInt(6, 4, 2));
  CHECK_THROWS_AS(a + QuadInt(1, 0, 3), UsageError);
}

TEST_CASE("quad_mul basics") {
  QuadInt a(1, 1, 2), b(1, -1, 2);
  CHECK(a * b == QuadInt(-1, 0, 2));
  CHECK(a * QuadInt(1, 0, 2) == a);
  // norm of the Pell unit: 9 - 8 = 1
  QuadInt u(3, 2, 2);
  CHECK(u * u.star() == QuadInt(1, 0, 2));
  CHECK(u.norm() == 1);
  CHECK_THROWS_AS(a * QuadInt(1, 0, 5), UsageError);
}

TEST_CASE("quad_star involution and homomorphism") {
  QuadInt u(3, 2, 2);
  CHECK(u.star() == QuadInt(3, -2, 2));
  CHECK(u.star().star() == u);

  uint64_t s = 42;
  for (int i = 0; i < 10000; ++i) {
    QuadInt x = rand_quad(s, 2, 1000), y = rand_quad(s, 2, 1000);
    CHECK((x + y).star() == x.star() + y.star());
    CHECK((x * y).star() == x.star() * y.star());
  }
}

TEST_CASE("quad_abs_leq worked examples") {
  // |1 - sqrt(2)| <= 1
  CHECK(quad_abs_leq(QuadInt(1, -1, 2), Rational(1)));
  // |0| <= 0
  CHECK(quad_abs_leq(QuadInt(0, 0, 2), Rational(0)));
  // |3 - 2 sqrt(2)| <= 1, |2 - 2 sqrt(2)| > 1/2
  CHECK(quad_abs_leq(QuadInt(3, -2, 2), Rational(1)));
  CHECK_FALSE(quad_abs_leq(QuadInt(2, -2, 2), Rational(1, 2)));
  // boundary: |1| <= 1 closed, not < 1 strict
  CHECK(quad_abs_leq(QuadInt(1, 0, 2), Rational(1)));
  CHECK_FALSE(quad_abs_lt(QuadInt(1, 0, 2), Rational(1)));
  CHECK_THROWS_AS(quad_abs_leq(QuadInt(1, 0, 2), Rational(-1)), UsageError);
}

TEST_CASE("quad_abs_leq agrees with the 100-digit fixed-point oracle") {
  for (long long d : {2LL, 3LL, 5LL, 7LL}) {
    FixedPointOracle oracle(d);
    uint64_t s = 7 + (uint64_t)d;
    int undecided = 0;
    for (int i = 0; i < 10000; ++i) {
      QuadInt x = rand_quad(s, d, 1'000'000);
      Rational r(stream(s) % 3'000'000, 1 + stream(s) % 1000);
      auto verdict = oracle.cmp_abs(x.m(), x.n(), r);
      if (!verdict) {
        ++undecided;
        continue;
      }
      CHECK(quad_abs_leq(x, r) == (*verdict <= 0));
    }
    CHECK(undecided < 10);  // ties at 100 digits are vanishingly rare
  }
}

TEST_CASE("quad surd sign and floor helpers") {
  CHECK(quad_surd_sign(0, 0, 2) == 0);
  CHECK(quad_surd_sign(-1, 1, 2) == 1);   // sqrt(2) - 1 > 0
  CHECK(quad_surd_sign(3, -2, 2) == 1);   // 3 - 2 sqrt(2) > 0
  CHECK(quad_surd_sign(-3, 2, 2) == -1);
  CHECK(quad_surd_sign(1, -1, 2) == -1);  // 1 - sqrt(2) < 0

  // floor((1 + 2 sqrt(2)) / 3) = floor(3.828/3) = 1
  CHECK(floor_quad_surd(1, 2, 3, 2) == 1);
  // floor(-sqrt(2)) = -2
  CHECK(floor_quad_surd(0, -1, 1, 2) == -2);
  // floor(sqrt(2)) = 1
  CHECK(floor_quad_surd(0, 1, 1, 2) == 1);
  CHECK(ceil_quad_surd(0, 1, 1, 2) == 2);

  // bounds bracket the true value
  Rational lb = quad_surd_lower(0, 1, 2), ub = quad_surd_upper(0, 1, 2);
  CHECK(lb < ub);
  CHECK(quad_surd_cmp(0, 1, 2, lb) > 0);
  CHECK(quad_surd_cmp(0, 1, 2, ub) < 0);
}

TEST_CASE("padic add/mul canonical form") {
  // 1/2 + 1/2 = 1 with canonical k = 0
  PadicRat h(1, 1, 2);
  PadicRat one = h + h;
  CHECK(one == PadicRat(1, 0, 2));
  CHECK(one.k() == 0);
  // x * 1 = x
  PadicRat x(3, 2, 2);
  CHECK(x * PadicRat(1, 0, 2) == x);
  // 3/4 + 1/4 = 1
  CHECK(PadicRat(3, 2, 2) + PadicRat(1, 2, 2) == PadicRat(1, 0, 2));
  CHECK_THROWS_AS(x + PadicRat(1, 0, 3), UsageError);

  // canonical form is preserved by every operation
  uint64_t s = 99;
  for (int i = 0; i < 10000; ++i) {
    PadicRat a((long long)(stream(s) % 2001) - 1000, stream(s) % 8, 2);
    PadicRat b((long long)(stream(s) % 2001) - 1000, stream(s) % 8, 2);
    CHECK((a + b).canonical());
    CHECK((a * b).canonical());
    CHECK((a - b).canonical());
  }
}

TEST_CASE("padic_val and arch_abs") {
  CHECK_FALSE(PadicRat(0, 0, 2).padic_val().has_value());  // v_p(0) = +inf
  PadicRat x(3, 2, 2);  // 3/4
  CHECK(x.padic_val() == -2);
  CHECK(x.arch_abs() == Rational(3, 4));
  // integers keep a as-is; valuation computed by trial division
  PadicRat e(8, 0, 2);
  CHECK(e.a() == 8);
  CHECK(e.padic_val() == 3);
  CHECK(PadicRat(-12, 0, 2).padic_val() == 2);
}

TEST_CASE("value order comparisons") {
  CHECK(value_less(QuadInt(1, 0, 2), QuadInt(0, 1, 2)));   // 1 < sqrt(2)
  CHECK(value_less(QuadInt(-1, 1, 2), QuadInt(1, 0, 2)));  // 0.41 < 1
  CHECK(cmp_value(QuadInt(2, 0, 2), QuadInt(2, 0, 2)) == 0);

  CHECK(value_less(PadicRat(1, 1, 2), PadicRat(3, 2, 2)));  // 1/2 < 3/4
  CHECK(cmp_value(PadicRat(2, 1, 2), PadicRat(1, 0, 2)) == 0);
}

TEST_CASE("decimal and rational formatting") {
  CHECK(decimal_string(Rational(1, 3), 12) == "0.333333333333");
  CHECK(decimal_string(Rational(2, 3), 12) == "0.666666666667");
  CHECK(decimal_string(Rational(-1, 2), 12) == "-0.500000000000");
  CHECK(decimal_string(Rational(5), 0) == "5");
  CHECK(rational_string(Rational(3, 4)) == "3/4");
  CHECK(rational_string(Rational(7)) == "7");
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK_THROWS_AS(parse_rational("x"), UsageError);
}

TEST_CASE("stable digest is coordinate-keyed") {
  QuadInt a(5, -3, 2), b(5, -3, 2), c(5, 3, 2);
  CHECK(stable_digest(1, a) == stable_digest(1, b));
  CHECK(stable_digest(1, a) != stable_digest(1, c));
  CHECK(stable_digest(1, a) != stable_digest(2, a));
}
