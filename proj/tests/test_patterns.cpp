#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "aplat/density.hpp"
#include "aplat/patterns.hpp"
#include "aplat/reference.hpp"

using namespace aplat;

namespace {

struct QuadFixture {
  QuadScheme s{2, 1};
  QuadRegion region;
  QuadPointSet pts;
  Rational inner_T;

  explicit QuadFixture(long long T, Rational inner)
      : region(Rational(T)), pts(enumerate(s, region)), inner_T(inner) {}

  QuadScanContext ctx() const { return {s, region, pts, inner_T}; }
};

template <class Point>
void check_rows_equal(const std::vector<GapRow<Point>>& a,
                      const std::vector<GapRow<Point>>& b) {
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].lambda == b[i].lambda);
    REQUIRE(a[i].base_points.size() == b[i].base_points.size());
    for (size_t j = 0; j < a[i].base_points.size(); ++j)
      CHECK(a[i].base_points[j] == b[i].base_points[j]);
  }
}

}  // namespace

TEST_CASE("find_base_points: F = {0} returns the whole inner region") {
  QuadFixture fx(100, Rational(50));
  auto ctx = fx.ctx();
  QuadQuery q;
  q.F = {fx.s.zero()};
  auto base = find_base_points(ctx, fx.s.element(5, 2), q);
  long long inner_count = 0;
  for (const auto& p : fx.pts.points())
    if (ctx.in_inner(p)) ++inner_count;
  CHECK(static_cast<long long>(base.size()) == inner_count);
}

TEST_CASE("find_base_points: lambda = 0 keeps everything for F in Lambda") {
  QuadFixture fx(100, Rational(50));
  auto ctx = fx.ctx();
  QuadQuery q;
  q.F = {fx.s.element(1, 0), fx.s.element(1, 1)};
  auto base = find_base_points(ctx, fx.s.zero(), q);
  long long inner_count = 0;
  for (const auto& p : fx.pts.points())
    if (ctx.in_inner(p)) ++inner_count;
  CHECK(static_cast<long long>(base.size()) == inner_count);
}

TEST_CASE("find_base_points matches the naive double-membership loop") {
  QuadFixture fx(1000, Rational(900));
  auto ctx = fx.ctx();
  QuadQuery q;
  q.F = {fx.s.element(1, 0)};
  QuadInt lambda = fx.s.element(1, 1);  // 1 + sqrt 2
  auto fast = find_base_points(ctx, lambda, q);

  ref::LexSet<QuadInt> members(fx.pts.points());
  long long naive = 0;
  for (const auto& x : fx.pts.points()) {
    if (!ctx.in_inner(x)) continue;
    if (members.contains(x + lambda)) ++naive;
  }
  CHECK(static_cast<long long>(fast.size()) == naive);
  CHECK(fast.size() > 0);
}

TEST_CASE("margin violation raises a usage error") {
  QuadFixture fx(100, Rational(99));
  auto ctx = fx.ctx();
  QuadQuery q;
  q.F = {fx.s.element(5, 0)};
  CHECK_THROWS_AS(find_base_points(ctx, fx.s.element(1, 1), q), UsageError);
}

TEST_CASE("gap_set: empty P_o gives an empty gap set") {
  QuadScheme s(2, 1);
  QuadRegion region(Rational(100));
  auto empty = QuadPointSet::from_points({});
  QuadScanContext ctx{s, region, empty, Rational(50)};
  QuadQuery q;
  q.F = {s.element(1, 0)};
  auto rep = gap_set(ctx, {s.element(1, 1), s.element(2, 1)}, q);
  CHECK(rep.empty_set);
  for (const auto& row : rep.rows) CHECK(row.base_count() == 0);
  CHECK_FALSE(rep.empirical_c.has_value());
}

TEST_CASE("gap_set rows agree with the naive reference, row for row") {
  QuadFixture fx(400, Rational(200));
  auto ctx = fx.ctx();
  QuadQuery q;
  q.F = {fx.s.element(1, 0), fx.s.element(1, 1)};

  std::vector<QuadInt> lambdas;
  for (const auto& l : fx.pts.points())
    if (quad_abs_leq(l, Rational(40))) lambdas.push_back(l);
  REQUIRE(lambdas.size() > 10);

  auto rep = gap_set(ctx, lambdas, q);
  auto naive = ref::gap_set_naive<QuadInt>(
      fx.pts.points(), [&](const QuadInt& p) { return ctx.in_inner(p); },
      lambdas, [&](const QuadInt& l) { return q.displacements(l); });
  check_rows_equal(rep.rows, naive);
  CHECK_FALSE(rep.empty_set);
  REQUIRE(rep.empirical_c.has_value());
  CHECK(*rep.empirical_c > 0);

  // every witness re-verifies by direct membership
  CHECK(ref::recheck_witnesses<QuadInt>(
            fx.pts.points(), rep.rows,
            [&](const QuadInt& l) { return q.displacements(l); }) == 0);
}

TEST_CASE("gap set of a half-window subset is nonempty at T = 1000") {
  // the positive-density P_o of the syndeticity theorems: a subwindow
  // subset with F = {1, 1 + sqrt 2} still realizes patterns
  QuadScheme s(2, 1);
  QuadRegion region(Rational(1000));
  auto full = enumerate(s, region);
  SubsetSpec sub;
  sub.kind = SubsetSpec::Kind::Subwindow;
  sub.w_prime = Rational(1, 2);
  auto p_o = subset_generate(s, full, sub);
  QuadScanContext ctx{s, region, p_o, Rational(500)};
  QuadQuery q;
  q.F = {s.element(1, 0), s.element(1, 1)};
  std::vector<QuadInt> lambdas;
  for (const auto& l : full.points())
    if (quad_abs_leq(l, Rational(80))) lambdas.push_back(l);
  auto rep = gap_set(ctx, lambdas, q);
  CHECK_FALSE(rep.empty_set);
  // re-verify every witness independently
  CHECK(ref::recheck_witnesses<QuadInt>(
            p_o.points(), rep.rows,
            [&](const QuadInt& l) { return q.displacements(l); }) == 0);
}

TEST_CASE("ap_scan r=1: every lambda has the zero witness on full Lambda") {
  QuadFixture fx(300, Rational(150));
  auto ctx = fx.ctx();
  std::vector<QuadInt> lambdas;
  for (const auto& l : fx.pts.points())
    if (quad_abs_leq(l, Rational(100))) lambdas.push_back(l);
  auto rep = ap_scan(ctx, lambdas, 1);
  // 0 in P_o and 0 + lambda in Lambda: base counts always positive
  for (const auto& row : rep.rows) CHECK(row.base_count() > 0);
}

TEST_CASE("ap_scan matches naive on the p-adic scheme") {
  PadicScheme s(2, 1);
  PadicRegion region(10);
  auto pts = enumerate(s, region);
  PadicScanContext ctx{s, region, pts};

  PadicRat lambda = s.element(1, 2);  // 1/4
  std::vector<PadicRat> lambdas{lambda};
  auto rep = ap_scan(ctx, lambdas, 3);

  ref::LexSet<PadicRat> members(pts.points());
  long long naive = 0;
  for (const auto& x : pts.points()) {
    bool ok = true;
    for (unsigned k = 1; k <= 3 && ok; ++k)
      ok = members.contains(x + lambda * BigInt(k));
    if (ok) ++naive;
  }
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].base_count() == naive);
  CHECK(naive > 0);
}

TEST_CASE("endo_check worked examples") {
  QuadFixture fx(200, Rational(190));
  auto ctx = fx.ctx();

  Endo<QuadInt> scale2{Endo<QuadInt>::Kind::IntScale, fx.s.zero(), 2};
  auto r1 = endo_check(ctx, scale2, 2);
  CHECK(r1.ok);  // star scales by k, so k*w <= q*w at q = k

  // mult by c in Lambda keeps Lambda inside Lambda at w <= 1
  Endo<QuadInt> by_unit{Endo<QuadInt>::Kind::MultBy, fx.s.element(1, 1), 0};
  auto r2 = endo_check(ctx, by_unit, 1);
  CHECK(r2.ok);

  // mult by 1 + 2 sqrt 2 (|star| > 1) fails at q = 1 with a witness
  Endo<QuadInt> bad{Endo<QuadInt>::Kind::MultBy, fx.s.element(1, 2), 0};
  auto r3 = endo_check(ctx, bad, 1);
  CHECK_FALSE(r3.ok);
  REQUIRE(r3.witness.has_value());
  CHECK_FALSE(in_lambda_q(fx.s, bad.apply(*r3.witness), 1));
}

TEST_CASE("multi_recurrence with int_scale(1) reduces to ap_scan r=1") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    QuadScheme s(2, 1);
    QuadRegion region(Rational(150));
    auto full = enumerate(s, region);
    SubsetSpec spec;
    spec.kind = SubsetSpec::Kind::Bernoulli;
    spec.theta = Rational(3, 4);
    spec.seed = seed;
    auto sub = subset_generate(s, full, spec);
    QuadScanContext ctx{s, region, sub, Rational(100)};

    std::vector<QuadInt> lambdas;
    for (const auto& l : full.points())
      if (quad_abs_leq(l, Rational(30))) lambdas.push_back(l);

    auto ap = ap_scan(ctx, lambdas, 1);
    std::vector<Endo<QuadInt>> endos{{Endo<QuadInt>::Kind::IntScale, s.zero(), 1}};
    auto mr = multi_recurrence_scan(ctx, lambdas, endos, 1);
    check_rows_equal(ap.rows, mr.rows);
  }
}

TEST_CASE("multi_recurrence dilation consistency with gap_set") {
  QuadScheme s(2, 1);
  QuadRegion region(Rational(300));
  auto full = enumerate(s, region);
  SubsetSpec spec;
  spec.kind = SubsetSpec::Kind::Bernoulli;
  spec.theta = Rational(1, 2);
  spec.seed = 7;
  auto sub = subset_generate(s, full, spec);
  QuadScanContext ctx{s, region, sub, Rational(150)};

  std::vector<QuadInt> F{s.element(1, 0), s.element(1, 1)};
  std::vector<QuadInt> lambdas;
  for (const auto& l : full.points())
    if (quad_abs_leq(l, Rational(30))) lambdas.push_back(l);

  QuadQuery q;
  q.F = F;
  auto gs = gap_set(ctx, lambdas, q);
  std::vector<Endo<QuadInt>> endos;
  for (const auto& f : F)
    endos.push_back({Endo<QuadInt>::Kind::MultBy, f, 0});
  auto mr = multi_recurrence_scan(ctx, lambdas, endos, 2);
  check_rows_equal(gs.rows, mr.rows);

  // lambda = 0: base points are all of P_o inner
  auto zero_rows = multi_recurrence_scan(ctx, {s.zero()}, endos, 2);
  long long inner = 0;
  for (const auto& p : sub.points())
    if (ctx.in_inner(p)) ++inner;
  CHECK(zero_rows.rows[0].base_count() == inner);
}

TEST_CASE("multi_recurrence rejects endos that leave the window superset") {
  QuadFixture fx(100, Rational(50));
  auto ctx = fx.ctx();
  std::vector<Endo<QuadInt>> endos{
      {Endo<QuadInt>::Kind::MultBy, fx.s.element(1, 2), 0}};
  CHECK_THROWS_AS(multi_recurrence_scan(ctx, {fx.s.element(1, 0)}, endos, 1),
                  UsageError);
}

TEST_CASE("sumset basics and window containment") {
  QuadScheme s(2, 1);
  auto pts = enumerate(s, QuadRegion(Rational(200)));
  auto s1 = sumset(pts, 1);
  CHECK(s1.size() == pts.size());

  // |sumset({0, 1}, 2)| = 3
  auto tiny = QuadPointSet::from_points({s.zero(), s.element(1, 0)});
  CHECK(sumset(tiny, 2).size() == 3);

  auto s2 = sumset(pts, 2);
  for (const auto& x : s2.points()) CHECK(in_lambda_q(s, x, 2));
  // matches the naive nested-loop sumset
  auto naive = ref::sumset_naive(pts, 2);
  REQUIRE(s2.size() == naive.size());
  for (const auto& x : naive.points()) CHECK(s2.contains(x));

  // symmetric input gives symmetric sumset; 0 in P embeds P into P+P
  for (const auto& x : s2.points()) CHECK(s2.contains(-x));
  for (const auto& x : pts.points()) CHECK(s2.contains(x));

  CHECK_THROWS_AS(sumset(pts, 3, 1000), CapacityError);
}

TEST_CASE("syndeticity: S = Lambda has radius 0 and K = {0}") {
  QuadFixture fx(100, Rational(80));
  auto ctx = fx.ctx();
  auto rep = syndeticity(ctx, fx.pts);
  CHECK_FALSE(rep.infinite);
  CHECK(rep.worst_diff == fx.s.zero());
  CHECK(rep.K.size() == 1);
  CHECK(rep.K[0] == fx.s.zero());

  auto empty_rep = syndeticity(ctx, QuadPointSet::from_points({}));
  CHECK(empty_rep.infinite);
}

TEST_CASE("syndeticity: even-m congruence subset has a finite K") {
  QuadFixture fx(500, Rational(400));
  auto ctx = fx.ctx();
  SubsetSpec spec;
  spec.kind = SubsetSpec::Kind::Congruence;
  spec.modulus = 2;
  spec.residues = {0};
  auto evens = subset_generate(fx.s, fx.pts, spec);
  auto rep = syndeticity(ctx, evens);
  CHECK_FALSE(rep.infinite);
  CHECK(rep.K.size() > 1);
  CHECK(rep.K.size() < 40);  // finite local complexity keeps K small
  CHECK(rep.covering_radius_ub > 0);
  // every inner lambda is within the radius of some S point: recheck
  ref::LexSet<QuadInt> sset(evens.points());
  for (const auto& k : rep.K) {
    CHECK(quad_abs_leq(k, rep.covering_radius_ub));
  }
}

TEST_CASE("syndeticity: p-adic covering levels") {
  PadicScheme s(2, 1);
  PadicRegion region(6);
  auto pts = enumerate(s, region);
  PadicScanContext ctx{s, region, pts};
  auto rep = syndeticity(ctx, pts);
  CHECK_FALSE(rep.infinite);
  // S = Lambda region: every point matches itself exactly
  CHECK(rep.covering_level == std::numeric_limits<long long>::max());
  CHECK(rep.K.size() == 1);

  // halve the set: keep points with even numerator at level 6
  std::vector<PadicRat> half;
  for (const auto& p : pts.points()) {
    BigInt A = p.a() * bigint_pow(2, region.level - p.k());
    if (A % 2 == 0) half.push_back(p);
  }
  auto sub = PadicPointSet::from_points(std::move(half));
  auto rep2 = syndeticity(ctx, sub);
  CHECK_FALSE(rep2.infinite);
  CHECK(rep2.covering_level == -static_cast<long long>(region.level));
}

TEST_CASE("margin safety: enlarging the ambient region changes no row") {
  QuadScheme s(2, 1);
  QuadQuery q;
  q.F = {s.element(1, 0), s.element(0, 1)};
  std::vector<QuadInt> lambdas{s.element(1, 0), s.element(1, 1),
                               s.element(2, 1)};

  QuadRegion r1(Rational(200)), r2(Rational(400));
  auto p1 = enumerate(s, r1);
  auto p2 = enumerate(s, r2);
  QuadScanContext c1{s, r1, p1, Rational(100)};
  QuadScanContext c2{s, r2, p2, Rational(100)};
  auto rep1 = gap_set(c1, lambdas, q);
  auto rep2 = gap_set(c2, lambdas, q);
  check_rows_equal(rep1.rows, rep2.rows);
}
