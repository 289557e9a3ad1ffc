#include "aplat/density.hpp"

#include <omp.h>

#include <unordered_map>

namespace aplat {

void QuadFolner::validate() const {
  if (scales.empty()) throw UsageError("folner: no scales");
  for (size_t i = 0; i + 1 < scales.size(); ++i)
    if (!(scales[i] < scales[i + 1]))
      throw UsageError("folner: scales must be strictly increasing");
  if (scales.front() <= 0) throw UsageError("folner: scales must be positive");
  if (!translates.empty() && translates.size() != scales.size())
    throw UsageError("folner: translates must match scales");
  if (thickening < 0) throw UsageError("folner: thickening must be >= 0");
}

QuadRegion QuadFolner::region(size_t j) const {
  QuadRegion r(scales.at(j) + thickening);
  if (!translates.empty()) r.translate = translates[j];
  return r;
}

Rational QuadFolner::measure(size_t j) const {
  return Rational(2) * (scales.at(j) + thickening);
}

void PadicFolner::validate() const {
  if (levels.empty()) throw UsageError("folner: no levels");
  for (size_t i = 0; i + 1 < levels.size(); ++i)
    if (levels[i] >= levels[i + 1])
      throw UsageError("folner: levels must be strictly increasing");
  if (!translates.empty() && translates.size() != levels.size())
    throw UsageError("folner: translates must match levels");
}

PadicRegion PadicFolner::region(size_t j) const {
  PadicRegion r(levels.at(j));
  if (!translates.empty()) r.translate = translates[j];
  return r;
}

Rational PadicFolner::measure(size_t j) const {
  return Rational(bigint_pow(p, levels.at(j)));
}

namespace {

template <class Folner, class Gen>
DensityTrace trace_impl(const Folner& f, const Gen& generate) {
  f.validate();
  DensityTrace t;
  t.rows.resize(f.size());
  for (size_t j = 0; j < f.size(); ++j) {
    auto region = f.region(j);
    auto pts = generate(region);
    DensityRow row;
    row.count = static_cast<long long>(pts.size());
    row.measure = f.measure(j);
    row.ratio = Rational(row.count) / row.measure;
    t.rows[j] = std::move(row);
  }
  size_t tail = (f.size() + 1) / 2;
  t.limsup_estimate = 0;
  for (size_t j = f.size() - tail; j < f.size(); ++j)
    t.limsup_estimate = std::max(t.limsup_estimate, t.rows[j].ratio);
  return t;
}

}  // namespace

DensityTrace upper_density(
    const QuadFolner& folner,
    const std::function<QuadPointSet(const QuadRegion&)>& generate) {
  DensityTrace t = trace_impl(folner, generate);
  for (size_t j = 0; j < folner.size(); ++j)
    t.rows[j].scale_label = "T=" + rational_string(folner.scales[j]);
  return t;
}

DensityTrace upper_density(
    const PadicFolner& folner,
    const std::function<PadicPointSet(const PadicRegion&)>& generate) {
  DensityTrace t = trace_impl(folner, generate);
  for (size_t j = 0; j < folner.size(); ++j)
    t.rows[j].scale_label = "n=" + std::to_string(folner.levels[j]);
  return t;
}

void SubsetSpec::validate(const Rational& scheme_w) const {
  switch (kind) {
    case Kind::Full:
      break;
    case Kind::Bernoulli:
      if (theta <= 0 || theta > 1)
        throw UsageError("subset: theta must lie in (0, 1]");
      break;
    case Kind::Subwindow:
      if (w_prime <= 0 || w_prime >= scheme_w)
        throw UsageError("subset: w' must lie in (0, w)");
      break;
    case Kind::Congruence:
      if (modulus < 1) throw UsageError("subset: modulus must be >= 1");
      if (residues.empty()) throw UsageError("subset: residues empty");
      break;
  }
}

bool bernoulli_keep(uint64_t seed, const Rational& theta, uint64_t digest) {
  // keep iff digest/2^64 < theta, decided in integers
  BigInt lhs = BigInt(digest) * denominator(theta);
  BigInt rhs = numerator(theta) << 64;
  return lhs < rhs;
}

namespace {

template <class Scheme, class PS, class Keep>
PS filter_points(const PS& pts, const Keep& keep) {
  std::vector<typename PS::point_type> out;
  out.reserve(pts.size());
  for (const auto& p : pts.points())
    if (keep(p)) out.push_back(p);
  return PS::from_points(std::move(out));
}

}  // namespace

QuadPointSet subset_generate(const QuadScheme& s, const QuadPointSet& pts,
                             const SubsetSpec& spec) {
  spec.validate(s.w);
  switch (spec.kind) {
    case SubsetSpec::Kind::Full:
      return pts;
    case SubsetSpec::Kind::Bernoulli:
      return filter_points<QuadScheme>(pts, [&](const QuadInt& x) {
        return bernoulli_keep(spec.seed, spec.theta,
                              stable_digest(mix64(spec.seed), x));
      });
    case SubsetSpec::Kind::Subwindow:
      return filter_points<QuadScheme>(pts, [&](const QuadInt& x) {
        return spec.subwindow_strict ? quad_abs_lt(x.star(), spec.w_prime)
                                     : quad_abs_leq(x.star(), spec.w_prime);
      });
    case SubsetSpec::Kind::Congruence: {
      BigInt mod(spec.modulus);
      return filter_points<QuadScheme>(pts, [&](const QuadInt& x) {
        BigInt r = x.m() % mod;
        if (r < 0) r += mod;
        for (long long res : spec.residues) {
          BigInt rr = BigInt(res) % mod;
          if (rr < 0) rr += mod;
          if (r == rr) return true;
        }
        return false;
      });
    }
  }
  throw UsageError("subset: unknown kind");
}

PadicPointSet subset_generate(const PadicScheme& s, const PadicPointSet& pts,
                              const SubsetSpec& spec) {
  spec.validate(s.w);
  switch (spec.kind) {
    case SubsetSpec::Kind::Full:
      return pts;
    case SubsetSpec::Kind::Bernoulli:
      return filter_points<PadicScheme>(pts, [&](const PadicRat& x) {
        return bernoulli_keep(spec.seed, spec.theta,
                              stable_digest(mix64(spec.seed), x));
      });
    case SubsetSpec::Kind::Subwindow:
      return filter_points<PadicScheme>(pts, [&](const PadicRat& x) {
        Rational a = x.arch_abs();
        return spec.subwindow_strict ? a < spec.w_prime : a <= spec.w_prime;
      });
    case SubsetSpec::Kind::Congruence:
      throw UsageError("subset: congruence is quadratic-only");
  }
  throw UsageError("subset: unknown kind");
}

BanachResult banach_density_emp(const QuadScheme& s, const QuadRegion& region,
                                const QuadPointSet& pts,
                                const Rational& extent) {
  if (extent <= 0 || extent > Rational(2) * region.T)
    throw UsageError("banach: window extent must lie in (0, 2T]");
  BanachResult res;
  res.measure = extent;
  res.ratio = 0;
  const auto& v = pts.points();
  const long long N = static_cast<long long>(v.size());
  if (N == 0) {
    res.window_desc = "empty";
    return res;
  }
  const QuadInt g = region.translate.d() == 0 ? s.zero() : region.translate;

  // Any maximizing window slides right until its left edge touches a
  // point or its right edge touches the region boundary, so those are
  // the only candidates.
  long long best_count = 0, best_anchor = -1;
#pragma omp parallel
  {
    long long lbest = 0, lanchor = -1;
#pragma omp for schedule(static) nowait
    for (long long i = 0; i < N; ++i) {
      const auto& p = v[static_cast<size_t>(i)];
      // window [p, p + extent] must fit: value(p - g) <= T - extent
      if ((p - g).cmp_value(region.T - extent) > 0) continue;
      long long j = i;
      while (j + 1 < N &&
             (v[static_cast<size_t>(j + 1)] - p).cmp_value(extent) <= 0)
        ++j;
      long long count = j - i + 1;
      if (count > lbest || (count == lbest && lanchor > i)) {
        lbest = count;
        lanchor = i;
      }
    }
#pragma omp critical
    {
      if (lbest > best_count ||
          (lbest == best_count && lanchor >= 0 &&
           (best_anchor < 0 || lanchor < best_anchor))) {
        best_count = lbest;
        best_anchor = lanchor;
      }
    }
  }

  // Right-edge window [g + T - extent, g + T].
  long long edge_count = 0;
  for (long long i = N - 1; i >= 0; --i) {
    if ((v[static_cast<size_t>(i)] - g).cmp_value(region.T - extent) >= 0)
      ++edge_count;
    else
      break;
  }

  if (edge_count > best_count || best_anchor < 0) {
    res.best_count = edge_count;
    res.window_desc = "right-edge window";
  } else {
    res.best_count = best_count;
    res.window_desc = "anchor index " + std::to_string(best_anchor);
  }
  res.ratio = Rational(res.best_count) / extent;
  return res;
}

BanachResult banach_density_emp(const PadicScheme& s, const PadicRegion& region,
                                const PadicPointSet& pts,
                                long long ball_level) {
  if (ball_level < -static_cast<long long>(region.level))
    throw UsageError("banach: ball level must be >= -region level");
  BanachResult res;
  res.measure = ball_level >= 0
                    ? Rational(1, bigint_pow(s.p, static_cast<unsigned>(ball_level)))
                    : Rational(bigint_pow(s.p, static_cast<unsigned>(-ball_level)));
  res.ratio = 0;
  if (pts.empty()) {
    res.window_desc = "empty";
    return res;
  }
  // Points in the same level-l ball share their numerator residue mod
  // p^{n+l} at the common denominator p^n.
  const long long n = region.level;
  BigInt mod = bigint_pow(s.p, static_cast<unsigned>(n + ball_level));
  std::unordered_map<BigInt, long long, BigIntHash> buckets;
  BigInt best_key;
  long long best = 0;
  for (const auto& x : pts.points()) {
    if (x.k() > region.level)
      throw UsageError("banach: point finer than the region level");
    BigInt A = x.a() * bigint_pow(s.p, region.level - x.k());
    BigInt r = A % mod;
    if (r < 0) r += mod;
    long long c = ++buckets[r];
    if (c > best || (c == best && r < best_key)) {
      best = c;
      best_key = r;
    }
  }
  res.best_count = best;
  res.ratio = Rational(best) / res.measure;
  res.window_desc = "ball level " + std::to_string(ball_level) +
                    ", residue " + best_key.str();
  return res;
}

std::optional<QuadInt> min_gap(const QuadPointSet& pts) {
  const auto& v = pts.points();
  if (v.size() < 2) return std::nullopt;
  size_t amin = 1;
  for (size_t i = 2; i < v.size(); ++i)
    if (cmp_value(v[i] - v[i - 1], v[amin] - v[amin - 1]) < 0) amin = i;
  return v[amin] - v[amin - 1];
}

std::optional<long long> max_diff_valuation(const PadicScheme& s,
                                            const PadicRegion& region,
                                            const PadicPointSet& pts) {
  const auto& v = pts.points();
  if (v.size() < 2) return std::nullopt;
  std::vector<BigInt> A(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].k() > region.level)
      throw UsageError("max_diff_valuation: point finer than the region level");
    A[i] = v[i].a() * bigint_pow(s.p, region.level - v[i].k());
  }
  long long j = 0;
  BigInt mod = 1;
  while (true) {
    mod *= s.p;
    std::unordered_set<BigInt, BigIntHash> seen;
    bool collision = false;
    for (const auto& a : A) {
      BigInt r = a % mod;
      if (r < 0) r += mod;
      if (!seen.insert(r).second) {
        collision = true;
        break;
      }
    }
    if (!collision) break;
    ++j;
  }
  return j - static_cast<long long>(region.level);
}

namespace {

uint64_t stream_next(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  return mix64(state);
}

}  // namespace

CountingBoundResult counting_bound_check(const QuadScheme& s,
                                         const QuadRegion& region,
                                         const QuadPointSet& pts,
                                         const Rational& v_gap,
                                         const Rational& max_len, int samples,
                                         uint64_t seed) {
  if (v_gap <= 0) throw UsageError("counting_bound: V gap must be positive");
  auto gap = min_gap(pts);
  if (gap && (*gap).cmp_value(Rational(2) * v_gap) < 0)
    throw UsageError("counting_bound: 2*V exceeds the minimum gap");
  if (max_len <= 0 || max_len > Rational(2) * region.T)
    throw UsageError("counting_bound: bad window length bound");

  const auto& v = pts.points();
  const QuadInt g = region.translate.d() == 0 ? s.zero() : region.translate;
  CountingBoundResult res;
  res.samples = samples;
  uint64_t state = mix64(seed ^ 0x51a7e901ull);

  for (int i = 0; i < samples; ++i) {
    // window [c, c + len] with grid-rational c and len
    constexpr long long kGrid = 64;
    uint64_t r1 = stream_next(state), r2 = stream_next(state);
    Rational len = max_len * Rational(1 + (long long)(r1 % (16 * kGrid)),
                                      16 * kGrid);
    Rational span = Rational(2) * region.T - len;
    Rational c = -region.T + span * Rational((long long)(r2 % (64 * kGrid)),
                                             64 * kGrid);
    // count points with value(p - g) in [c, c + len]
    long long count = 0;
    for (const auto& p : v) {
      QuadInt y = p - g;
      if (y.cmp_value(c) >= 0 && y.cmp_value(c + len) <= 0) ++count;
    }
    // |P cap Q| <= m(Q + V)/m(V) = (len + 2V)/(2V)
    if (Rational(count) * 2 * v_gap > len + 2 * v_gap) ++res.violations;
  }
  return res;
}

CountingBoundResult counting_bound_check(const PadicScheme& s,
                                         const PadicRegion& region,
                                         const PadicPointSet& pts,
                                         long long v_level, int samples,
                                         uint64_t seed) {
  auto maxv = max_diff_valuation(s, region, pts);
  if (maxv && v_level <= *maxv)
    throw UsageError("counting_bound: V level must exceed max difference "
                     "valuation " + std::to_string(*maxv));
  CountingBoundResult res;
  res.samples = samples;
  const long long n = region.level;
  uint64_t state = mix64(seed ^ 0x51a7e902ull);
  const auto& v = pts.points();
  for (int i = 0; i < samples; ++i) {
    uint64_t r1 = stream_next(state), r2 = stream_next(state);
    long long l = -n + (long long)(r1 % (2 * n + 1));  // ball level in [-n, n]
    // center at a random enumerated point (or 0 if empty)
    PadicRat center = v.empty() ? s.zero() : v[r2 % v.size()];
    long long count = 0;
    for (const auto& p : pts.points()) {
      auto val = (p - center).padic_val();
      if (!val || *val >= l) ++count;
    }
    // m(Q+V)/m(V) = p^{v - min(l, v)}
    long long e = v_level - std::min(l, v_level);
    BigInt bound = bigint_pow(s.p, static_cast<unsigned>(e));
    if (BigInt(count) > bound) ++res.violations;
  }
  return res;
}

}  // namespace aplat
