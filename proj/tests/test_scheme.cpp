#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "aplat/reference.hpp"
#include "aplat/report.hpp"
#include "aplat/scheme.hpp"

using namespace aplat;

TEST_CASE("scheme validation") {
  CHECK_THROWS_AS(QuadScheme(4, 1), UsageError);   // 4 = 2^2
  CHECK_THROWS_AS(QuadScheme(12, 1), UsageError);  // 12 = 4*3
  CHECK_THROWS_AS(QuadScheme(1, 1), UsageError);
  CHECK_THROWS_AS(QuadScheme(2, 0), UsageError);
  CHECK_NOTHROW(QuadScheme(10, Rational(1, 2)));
  CHECK_THROWS_AS(PadicScheme(4, 1), UsageError);
  CHECK_THROWS_AS(PadicScheme(1, 1), UsageError);
  CHECK_NOTHROW(PadicScheme(7, 1));
}

TEST_CASE("in_lambda worked examples") {
  QuadScheme s(2, 1);
  CHECK(in_lambda(s, s.element(3, 2)));   // |3 - 2 sqrt 2| <= 1
  CHECK(in_lambda(s, s.zero()));
  CHECK_FALSE(in_lambda(s, s.element(1, 2)));  // |1 - 2 sqrt 2| > 1

  PadicScheme p2(2, 1);
  CHECK(in_lambda(p2, p2.element(1, 1)));       // |1/2| <= 1
  CHECK(in_lambda(p2, p2.element(-8, 3)));      // |-1| <= 1 (canonical -1)
  CHECK_FALSE(in_lambda(p2, p2.element(3, 1))); // 3/2 > 1
}

TEST_CASE("enumerate quadratic: T=0 gives the origin only") {
  QuadScheme s(2, 1);
  auto pts = enumerate(s, QuadRegion(Rational(0)));
  REQUIRE(pts.size() == 1);
  CHECK(pts.points()[0] == s.zero());
}

TEST_CASE("enumerate quadratic agrees with the brute-force double loop") {
  QuadScheme s(2, 1);
  auto fast = enumerate(s, QuadRegion(Rational(10)));
  auto brute = ref::enumerate_bruteforce(s, QuadRegion(Rational(10)), 25, 18);
  CHECK(fast.size() == 15);  // frozen from the independent oracle
  REQUIRE(fast.size() == brute.size());
  for (const auto& p : brute) CHECK(fast.contains(p));

  for (long long d : {2LL, 3LL, 5LL}) {
    QuadScheme sd(d, 1);
    auto f = enumerate(sd, QuadRegion(Rational(50)));
    auto b = ref::enumerate_bruteforce(sd, QuadRegion(Rational(50)), 60, 40);
    REQUIRE(f.size() == b.size());
    for (const auto& p : b) CHECK(f.contains(p));
  }
  CHECK(enumerate(QuadScheme(2, 1), QuadRegion(Rational(50))).size() == 71);
}

TEST_CASE("enumerate with translated region matches brute force") {
  QuadScheme s(2, 1);
  QuadInt g = s.element(7, 2);  // translate by 7 + 2 sqrt(2)
  QuadRegion r(Rational(12), g);
  auto fast = enumerate(s, r);
  auto brute = ref::enumerate_bruteforce(s, r, 40, 25);
  REQUIRE(fast.size() == brute.size());
  for (const auto& p : brute) CHECK(fast.contains(p));
  CHECK(fast.size() > 0);
}

TEST_CASE("enumerate p-adic: count law 2 w p^n + 1") {
  PadicScheme s(2, 1);
  auto pts = enumerate(s, PadicRegion(3));
  CHECK(pts.size() == 17);
  for (const auto& x : pts.points()) {
    CHECK(in_lambda(s, x));
    CHECK(x.k() <= 3);
  }
  for (long long p : {2LL, 3LL, 5LL}) {
    PadicScheme sp(p, 1);
    for (unsigned n = 0; n <= 5; ++n) {
      auto set = enumerate(sp, PadicRegion(n));
      BigInt expect = 2 * bigint_pow(p, n) + 1;
      CHECK(BigInt(set.size()) == expect);
    }
  }
}

TEST_CASE("enumerate p-adic translated ball") {
  PadicScheme s(2, 1);
  PadicRat t = s.element(1, 2);  // 1/4
  auto pts = enumerate(s, PadicRegion(2, t));
  // points 1/4 + a/4 with |1/4 + a/4| <= 1: a in [-5, 3], 9 points
  CHECK(pts.size() == 9);
  for (const auto& x : pts.points()) {
    CHECK(in_lambda(s, x));
    CHECK(in_region(s, PadicRegion(2, t), x));
  }
}

TEST_CASE("enumerate consistency: region membership and window") {
  QuadScheme s(3, Rational(1));
  QuadRegion r(Rational(30));
  auto pts = enumerate(s, r);
  CHECK(pts.size() > 0);
  for (const auto& p : pts.points()) {
    CHECK(in_region(s, r, p));
    CHECK(in_lambda(s, p));
  }
}

TEST_CASE("enumerate symmetry and monotonicity") {
  QuadScheme s(2, 1);
  auto small = enumerate(s, QuadRegion(Rational(40)));
  auto large = enumerate(s, QuadRegion(Rational(80)));
  for (const auto& p : small.points()) {
    CHECK(small.contains(-p));  // symmetric set in a symmetric region
    CHECK(large.contains(p));   // monotone in the region
  }
  PadicScheme sp(3, 1);
  auto ps = enumerate(sp, PadicRegion(2));
  auto pl = enumerate(sp, PadicRegion(4));
  for (const auto& p : ps.points()) {
    CHECK(ps.contains(-p));
    CHECK(pl.contains(p));
  }
}

TEST_CASE("open vs closed windows") {
  QuadScheme closed(2, 1, true), open(2, 1, false);
  CHECK(in_lambda(closed, closed.element(1, 0)));
  CHECK_FALSE(in_lambda(open, open.element(1, 0)));
  auto c = enumerate(closed, QuadRegion(Rational(20)));
  auto o = enumerate(open, QuadRegion(Rational(20)));
  CHECK(o.size() < c.size());
  for (const auto& p : o.points()) CHECK(c.contains(p));

  PadicScheme pc(2, 1, true), po(2, 1, false);
  CHECK(enumerate(pc, PadicRegion(2)).size() == 9);
  CHECK(enumerate(po, PadicRegion(2)).size() == 7);  // drops +-1
}

TEST_CASE("in_lambda_q is monotone and matches in_lambda at q=1") {
  QuadScheme s(2, 1);
  uint64_t st = 5;
  for (int i = 0; i < 10000; ++i) {
    st += 0x9e3779b97f4a7c15ull;
    long long m = (long long)(mix64(st) % 41) - 20;
    long long n = (long long)(mix64(st ^ 1) % 41) - 20;
    QuadInt x = s.element(m, n);
    CHECK(in_lambda_q(s, x, 1) == in_lambda(s, x));
    for (unsigned q = 1; q < 4; ++q) {
      if (in_lambda_q(s, x, q)) CHECK(in_lambda_q(s, x, q + 1));
    }
  }
  // D=2, w=1: 1 + 2 sqrt 2 enters at q = 2
  CHECK_FALSE(in_lambda_q(s, s.element(1, 2), 1));
  CHECK(in_lambda_q(s, s.element(1, 2), 2));

  PadicScheme sp(2, 1);
  PadicRat x = sp.element(3, 1);  // 3/2
  CHECK_FALSE(in_lambda_q(sp, x, 1));
  CHECK(in_lambda_q(sp, x, 2));
}

TEST_CASE("capacity guard trips before allocation") {
  QuadScheme s(2, 1);
  EnumerateOptions opt;
  opt.cap = 100;
  CHECK_THROWS_AS(enumerate(s, QuadRegion(Rational(100000)), opt),
                  CapacityError);
  PadicScheme sp(2, 1);
  CHECK_THROWS_AS(enumerate(sp, PadicRegion(30), opt), CapacityError);
}

TEST_CASE("hash index agrees with a linear scan") {
  QuadScheme s(2, 1);
  auto pts = enumerate(s, QuadRegion(Rational(60)));
  auto linear = [&](const QuadInt& x) {
    for (const auto& p : pts.points())
      if (p == x) return true;
    return false;
  };
  uint64_t st = 17;
  for (int i = 0; i < 2000; ++i) {
    st += 0x9e3779b97f4a7c15ull;
    long long m = (long long)(mix64(st) % 301) - 150;
    long long n = (long long)(mix64(st ^ 2) % 121) - 60;
    QuadInt x = s.element(m, n);
    CHECK(pts.contains(x) == linear(x));
  }
  for (const auto& p : pts.points()) CHECK(pts.contains(p));
}

TEST_CASE("point set CSV is canonical and deterministic") {
  QuadScheme s(2, 1);
  auto pts = enumerate(s, QuadRegion(Rational(10)));
  std::string csv = pointset_csv(pts);
  CHECK(csv.substr(0, 4) == "m,n\n");
  auto again = enumerate(s, QuadRegion(Rational(10)));
  CHECK(pointset_csv(again) == csv);

  PadicScheme sp(2, 1);
  auto pp = enumerate(sp, PadicRegion(3));
  std::string pcsv = pointset_csv(pp);
  // ascending rational value: first point is -1 = (-1, 0)
  CHECK(pcsv.find("a,k\n-1,0\n") == 0);
}
