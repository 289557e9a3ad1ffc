#include "aplat/scheme.hpp"

#include <omp.h>

namespace aplat {

namespace {

// Trial division up to 10^6 certifies square-freeness for D <= 10^12;
// larger D cannot be certified here and is rejected.
void validate_square_free(long long D) {
  if (D < 2) throw UsageError("D must be >= 2");
  if (D > 1'000'000'000'000LL)
    throw UsageError("D too large to certify square-free (max 10^12)");
  for (long long q = 2; q * q <= D && q <= 1'000'000; ++q) {
    if (D % (q * q) == 0)
      throw UsageError("D must be square-free, divisible by " +
                       std::to_string(q) + "^2");
  }
}

void validate_prime(long long p) {
  if (p < 2) throw UsageError("p must be a prime >= 2");
  for (long long q = 2; q * q <= p; ++q) {
    if (p % q == 0)
      throw UsageError("p must be prime, divisible by " + std::to_string(q));
  }
}

void validate_window(const Rational& w) {
  if (w <= 0) throw UsageError("window half-width w must be positive");
}

bool window_abs_ok(const QuadInt& star_image, const Rational& bound,
                   bool closed) {
  return closed ? quad_abs_leq(star_image, bound)
                : quad_abs_lt(star_image, bound);
}

}  // namespace

QuadScheme::QuadScheme(long long D_, Rational w_, bool closed)
    : D(D_), w(std::move(w_)), window_closed(closed) {
  validate_square_free(D);
  validate_window(w);
}

PadicScheme::PadicScheme(long long p_, Rational w_, bool closed)
    : p(p_), w(std::move(w_)), window_closed(closed) {
  validate_prime(p);
  validate_window(w);
}

bool in_region(const QuadScheme& s, const QuadRegion& r, const QuadInt& x) {
  QuadInt g = r.translate.d() == 0 ? s.zero() : r.translate;
  return quad_abs_leq(x - g, r.T);
}

bool in_region(const PadicScheme& s, const PadicRegion& r, const PadicRat& x) {
  PadicRat g = r.translate ? *r.translate : s.zero();
  PadicRat diff = x - g;
  // diff in p^{-level} Z_p  <=>  v_p(diff) >= -level
  auto v = diff.padic_val();
  if (!v) return true;
  return *v >= -static_cast<long long>(r.level);
}

bool in_lambda(const QuadScheme& s, const QuadInt& x) {
  if (x.d() != s.D) throw UsageError("in_lambda: point from a different ring");
  return window_abs_ok(x.star(), s.w, s.window_closed);
}

bool in_lambda(const PadicScheme& s, const PadicRat& x) {
  if (x.p() != s.p) throw UsageError("in_lambda: point from a different ring");
  Rational a = x.arch_abs();
  return s.window_closed ? a <= s.w : a < s.w;
}

bool in_lambda_q(const QuadScheme& s, const QuadInt& x, unsigned q) {
  if (q < 1) throw UsageError("in_lambda_q: q must be >= 1");
  if (x.d() != s.D) throw UsageError("in_lambda_q: point from a different ring");
  return window_abs_ok(x.star(), Rational(q) * s.w, s.window_closed);
}

bool in_lambda_q(const PadicScheme& s, const PadicRat& x, unsigned q) {
  if (q < 1) throw UsageError("in_lambda_q: q must be >= 1");
  if (x.p() != s.p) throw UsageError("in_lambda_q: point from a different ring");
  Rational a = x.arch_abs();
  Rational bound = Rational(q) * s.w;
  return s.window_closed ? a <= bound : a < bound;
}

Rational enumerate_estimate(const QuadScheme& s, const QuadRegion& r) {
  // Covolume of the lattice is 2*sqrt(D); estimated count is
  // area / covolume = 4*T*w / (2*sqrt(D)), padded by a constant.
  Rational sqrt_lb = quad_surd_lower(0, 1, s.D, 32);
  if (sqrt_lb <= 0) sqrt_lb = 1;
  return Rational(2) * r.T * s.w / sqrt_lb + 16;
}

Rational enumerate_estimate(const PadicScheme& s, const PadicRegion& r) {
  return Rational(2) * s.w * bigint_pow(s.p, r.level) + 2;
}

namespace {

void check_cap(const Rational& estimate, long long cap, const char* what) {
  if (estimate > cap)
    throw CapacityError(std::string(what) + ": estimated point count " +
                        decimal_string(estimate, 0) + " exceeds cap " +
                        std::to_string(cap));
}

}  // namespace

QuadPointSet enumerate(const QuadScheme& s, const QuadRegion& region,
                       const EnumerateOptions& opt) {
  if (region.T < 0) throw UsageError("enumerate: region extent must be >= 0");
  check_cap(enumerate_estimate(s, region), opt.cap, "enumerate(quad)");

  const long long D = s.D;
  const QuadInt g = region.translate.d() == 0 ? s.zero() : region.translate;
  const BigInt &gm = g.m(), &gn = g.n();

  // Substituting x = g + y, the region constraint is |value(y)| <= T and
  // the window constraint is star(y) in [-w, w] - star(g). Coefficient
  // ranges follow from the sum/difference of the two constraints; each
  // candidate is then filtered by the exact predicates, so the range
  // bounds only need to be correct to within the +-1 slack added here.
  const BigInt tn = numerator(region.T), td = denominator(region.T);
  const BigInt wn = numerator(s.w), wd = denominator(s.w);

  // c = T + w + gm as cn/cd; upper n bound is (-cd*gn*D + cn*sqrt(D)) / (2*cd*D)
  BigInt cn_hi = tn * wd + wn * td + gm * td * wd;
  BigInt cd = td * wd;
  BigInt n_hi = floor_quad_surd(-cd * gn * D, cn_hi, 2 * cd * D, D) + 1;
  // lower bound: c2 = -T - w + gm
  BigInt cn_lo = -tn * wd - wn * td + gm * td * wd;
  BigInt n_lo = ceil_quad_surd(-cd * gn * D, cn_lo, 2 * cd * D, D) - 1;

  if (n_hi < n_lo) return QuadPointSet::from_points({});
  BigInt span_big = n_hi - n_lo + 1;
  if (span_big > opt.cap)
    throw CapacityError("enumerate(quad): internal coefficient range too large");
  const long long span = span_big.convert_to<long long>();

  std::vector<std::vector<QuadInt>> buckets(static_cast<size_t>(span));

#pragma omp parallel for schedule(dynamic, 64)
  for (long long i = 0; i < span; ++i) {
    const BigInt np = n_lo + i;  // coefficient of sqrt(D) in y
    // m' bounds: max(-T - n'sqrt(D), lo_w + n'sqrt(D)) <= m' <=
    //            min(T - n'sqrt(D), hi_w + n'sqrt(D))
    // with lo_w = -w - gm + gn*sqrt(D), hi_w = w - gm + gn*sqrt(D) from
    // star(y) = m' - n'sqrt(D) in [-w - star(g), w - star(g)].
    BigInt m_lo1 = ceil_quad_surd(-tn, -np * td, td, D);
    BigInt m_lo2 = ceil_quad_surd(-wn - gm * wd, (gn + np) * wd, wd, D);
    BigInt m_hi1 = floor_quad_surd(tn, -np * td, td, D);
    BigInt m_hi2 = floor_quad_surd(wn - gm * wd, (gn + np) * wd, wd, D);
    BigInt m_lo = std::max(m_lo1, m_lo2) - 1;
    BigInt m_hi = std::min(m_hi1, m_hi2) + 1;
    auto& out = buckets[static_cast<size_t>(i)];
    for (BigInt mp = m_lo; mp <= m_hi; ++mp) {
      QuadInt y(mp, np, D);
      if (!quad_abs_leq(y, region.T)) continue;
      QuadInt x = y + g;
      if (!in_lambda(s, x)) continue;
      out.push_back(std::move(x));
    }
  }

  std::vector<QuadInt> all;
  size_t total = 0;
  for (const auto& b : buckets) total += b.size();
  if (static_cast<long long>(total) > opt.cap)
    throw CapacityError("enumerate(quad): point count exceeds cap");
  all.reserve(total);
  for (auto& b : buckets)
    for (auto& p : b) all.push_back(std::move(p));
  return QuadPointSet::from_points(std::move(all));
}

PadicPointSet enumerate(const PadicScheme& s, const PadicRegion& region,
                        const EnumerateOptions& opt) {
  check_cap(enumerate_estimate(s, region), opt.cap, "enumerate(padic)");

  const PadicRat t = region.translate ? *region.translate : s.zero();
  if (region.translate && t.k() > region.level)
    throw UsageError("enumerate(padic): translate lies outside the ball level");
  const BigInt pk = bigint_pow(s.p, region.level);

  // Points are t + a/p^level with a in Z and |t + a/p^level| <= w, i.e.
  // a in [p^level(-w - t), p^level(w - t)]. Increasing a increases the
  // value, so the output comes out already sorted.
  Rational tval = t.value();
  Rational lo = Rational(pk) * (-s.w - tval);
  Rational hi = Rational(pk) * (s.w - tval);
  BigInt a_lo = floor_div(numerator(lo), denominator(lo));
  BigInt a_hi = floor_div(numerator(hi), denominator(hi)) + 1;

  std::vector<PadicRat> pts;
  for (BigInt a = a_lo; a <= a_hi; ++a) {
    PadicRat x = t + PadicRat(a, region.level, s.p);
    if (in_lambda(s, x)) pts.push_back(std::move(x));
  }
  return PadicPointSet::from_points(std::move(pts));
}

}  // namespace aplat
