#include "aplat/transversal.hpp"

#include <omp.h>

#include <map>
#include <unordered_map>

#include "aplat/density.hpp"

namespace aplat {

namespace {

// Near pairs of a value-sorted vector within the given radius, as
// symmetric differences including 0.
std::vector<QuadInt> near_differences(const std::vector<QuadInt>& v,
                                      const Rational& radius, long long cap) {
  std::vector<QuadInt> out;
  if (v.empty()) return out;
  out.push_back(QuadInt(0, 0, v.front().d()));
  const long long N = static_cast<long long>(v.size());
  long long formed = 0;
#pragma omp parallel
  {
    std::vector<QuadInt> local;
    long long lformed = 0;
#pragma omp for schedule(dynamic, 64) nowait
    for (long long i = 0; i < N; ++i) {
      for (long long j = i + 1; j < N; ++j) {
        QuadInt d = v[static_cast<size_t>(j)] - v[static_cast<size_t>(i)];
        if (d.cmp_value(radius) > 0) break;  // sorted: later j only grow
        local.push_back(d);
        local.push_back(-d);
        ++lformed;
      }
    }
#pragma omp critical
    {
      formed += lformed;
      out.insert(out.end(), std::make_move_iterator(local.begin()),
                 std::make_move_iterator(local.end()));
    }
  }
  if (formed > cap) throw CapacityError("difference_set: too many near pairs");
  return out;
}

}  // namespace

QuadDiffSet difference_set(const QuadPointSet& P, const Rational& radius,
                           unsigned order, long long cap) {
  if (radius < 0) throw UsageError("difference_set: radius must be >= 0");
  if (order < 1 || order > 2)
    throw UsageError("difference_set: order must be 1 or 2");
  QuadDiffSet res;
  res.radius = radius;
  res.order = order;
  auto d1 = near_differences(P.points(), radius, cap);
  if (order == 2) {
    QuadPointSet s1 = QuadPointSet::from_points(std::move(d1));
    d1 = near_differences(s1.points(), radius, cap);
  }
  res.diffs = QuadPointSet::from_points(std::move(d1));
  return res;
}

PadicDiffSet difference_set(const PadicScheme& s, const PadicRegion& region,
                            const PadicPointSet& P, long long min_level,
                            unsigned order, long long cap) {
  if (order < 1 || order > 2)
    throw UsageError("difference_set: order must be 1 or 2");
  PadicDiffSet res;
  res.min_level = min_level;
  res.order = order;

  auto one_round = [&](const std::vector<PadicRat>& v) {
    // Differences with v_p >= min_level lie inside a common coset of
    // p^{min_level} Z_p, so group by that residue first.
    std::vector<PadicRat> out;
    if (v.empty()) return out;
    out.push_back(s.zero());
    long long shift = min_level + static_cast<long long>(region.level);
    std::unordered_map<BigInt, std::vector<size_t>, BigIntHash> groups;
    if (shift <= 0) {
      // every pair qualifies
      groups[0].resize(v.size());
      for (size_t i = 0; i < v.size(); ++i) groups[0][i] = i;
    } else {
      BigInt mod = bigint_pow(s.p, static_cast<unsigned>(shift));
      for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].k() > region.level)
          throw UsageError("difference_set: point finer than region level");
        BigInt A = v[i].a() * bigint_pow(s.p, region.level - v[i].k());
        BigInt r = A % mod;
        if (r < 0) r += mod;
        groups[r].push_back(i);
      }
    }
    long long formed = 0;
    for (const auto& [key, idx] : groups) {
      formed += static_cast<long long>(idx.size() * (idx.size() - 1) / 2);
      if (formed > cap)
        throw CapacityError("difference_set: too many near pairs");
      for (size_t a = 0; a < idx.size(); ++a) {
        for (size_t b = a + 1; b < idx.size(); ++b) {
          PadicRat d = v[idx[b]] - v[idx[a]];
          auto val = d.padic_val();
          if (val && *val < min_level) continue;
          out.push_back(d);
          out.push_back(-d);
        }
      }
    }
    return out;
  };

  auto d1 = one_round(P.points());
  if (order == 2) {
    PadicPointSet s1 = PadicPointSet::from_points(std::move(d1));
    d1 = one_round(s1.points());
  }
  res.diffs = PadicPointSet::from_points(std::move(d1));
  return res;
}

QuadSeparationResult separation_check(const QuadScheme& s, unsigned q,
                                      const Rational& v_radius, long long cap) {
  if (v_radius < 0) throw UsageError("separation_check: negative radius");
  QuadSeparationResult res;
  res.v_radius = v_radius;
  res.norm_lower_bound = Rational(1) / (Rational(2 + q) * s.w);

  // Exhaustive near-zero scan of the window-(2+q)w superset, growing the
  // scan radius until a nonzero element appears; relative denseness
  // guarantees termination.
  QuadScheme superset(s.D, Rational(2 + q) * s.w, true);
  std::optional<QuadInt> mu;
  for (Rational R = 1;; R *= 2) {
    QuadPointSet set = enumerate(superset, QuadRegion(R), EnumerateOptions{cap});
    for (const auto& x : set.points()) {
      if (x.is_zero()) continue;
      if (!mu || cmp_abs_value(x, *mu) < 0 ||
          (cmp_abs_value(x, *mu) == 0 && lex_less(x, *mu)))
        mu = x;
    }
    if (mu) break;
    if (R > 1024)
      throw CapacityError("separation_check: no nonzero element found");
  }
  res.mu_min_witness = *mu;
  res.mu_min_lb = abs_value_lower(*mu);
  res.mu_min_ub = abs_value_upper(*mu);
  // ok iff V_radius < mu_min, exact; vacuous at radius 0
  res.ok = !quad_abs_leq(*mu, v_radius);
  return res;
}

PadicSeparationResult separation_check(const PadicScheme& s, unsigned q,
                                       long long v_level) {
  PadicSeparationResult res;
  res.v_level = v_level;
  // Elements of the superset p-adically near 0 have v_p >= 0, so they
  // are integers, bounded by (2+q) w.
  Rational bound = Rational(2 + q) * s.w;
  BigInt fmax = floor_div(numerator(bound), denominator(bound));
  long long best_v = 0;
  BigInt witness = 1;
  for (BigInt f = 1; f <= fmax; ++f) {
    long long v = 0;
    BigInt t = f;
    while (t % s.p == 0) {
      t /= s.p;
      ++v;
    }
    if (v > best_v) {
      best_v = v;
      witness = f;
    }
  }
  res.max_valuation = best_v;
  res.min_admissible_level = best_v + 1;
  res.witness = witness;
  res.ok = v_level >= res.min_admissible_level;
  return res;
}

PatchStats<QuadInt> patch_census(const QuadScheme& s, const QuadRegion& region,
                                 const QuadPointSet& P, const Rational& rho,
                                 const Rational& margin) {
  if (rho < 0) throw UsageError("patch_census: radius must be >= 0");
  if (rho > margin)
    throw UsageError("patch_census: radius must not exceed the margin");
  const QuadInt g = region.translate.d() == 0 ? s.zero() : region.translate;
  const Rational inner_T = region.T - margin;

  const auto& v = P.points();
  const long long N = static_cast<long long>(v.size());

  using Key = std::vector<QuadInt>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      if (a.size() != b.size()) return a.size() < b.size();
      for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        return lex_less(a[i], b[i]);
      }
      return false;
    }
  };
  std::map<Key, long long, KeyLess> tally;
  long long centers = 0;

#pragma omp parallel
  {
    std::map<Key, long long, KeyLess> local;
    long long lcenters = 0;
#pragma omp for schedule(dynamic, 64) nowait
    for (long long i = 0; i < N; ++i) {
      const QuadInt& c = v[static_cast<size_t>(i)];
      if (!quad_abs_leq(c - g, inner_T)) continue;
      ++lcenters;
      Key key;
      for (long long j = i; j >= 0; --j) {
        QuadInt d = v[static_cast<size_t>(j)] - c;
        if ((-d).cmp_value(rho) > 0) break;
        key.push_back(d);
      }
      std::reverse(key.begin(), key.end());
      for (long long j = i + 1; j < N; ++j) {
        QuadInt d = v[static_cast<size_t>(j)] - c;
        if (d.cmp_value(rho) > 0) break;
        key.push_back(d);
      }
      ++local[std::move(key)];
    }
#pragma omp critical
    {
      centers += lcenters;
      for (auto& [k, cnt] : local) tally[k] += cnt;
    }
  }

  PatchStats<QuadInt> stats;
  stats.total_centers = centers;
  stats.patches.reserve(tally.size());
  for (auto& [k, cnt] : tally) stats.patches.push_back({k, cnt});
  return stats;
}

PatchStats<PadicRat> patch_census(const PadicScheme& s,
                                  const PadicRegion& region,
                                  const PadicPointSet& P,
                                  long long rho_level) {
  // Patch of lambda at level rho: the differences with v_p >= rho, i.e.
  // the points in lambda's coset of p^rho Z_p. The ball region is a
  // group, so every point is an interior centre.
  long long shift = rho_level + static_cast<long long>(region.level);
  if (shift < 0)
    throw UsageError("patch_census: level coarser than the region ball");

  std::unordered_map<BigInt, std::vector<size_t>, BigIntHash> groups;
  const auto& v = P.points();
  BigInt mod = bigint_pow(s.p, static_cast<unsigned>(shift));
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].k() > region.level)
      throw UsageError("patch_census: point finer than region level");
    BigInt A = v[i].a() * bigint_pow(s.p, region.level - v[i].k());
    BigInt r = A % mod;
    if (r < 0) r += mod;
    groups[r].push_back(i);
  }

  using Key = std::vector<PadicRat>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      if (a.size() != b.size()) return a.size() < b.size();
      for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        return lex_less(a[i], b[i]);
      }
      return false;
    }
  };
  std::map<Key, long long, KeyLess> tally;
  long long centers = 0;
  for (const auto& [res_key, idx] : groups) {
    for (size_t i : idx) {
      ++centers;
      Key key;
      key.reserve(idx.size());
      for (size_t j : idx) key.push_back(v[j] - v[i]);
      std::sort(key.begin(), key.end(),
                [](const PadicRat& a, const PadicRat& b) {
                  int c = cmp_value(a, b);
                  if (c != 0) return c < 0;
                  return lex_less(a, b);
                });
      ++tally[std::move(key)];
    }
  }

  PatchStats<PadicRat> stats;
  stats.total_centers = centers;
  stats.patches.reserve(tally.size());
  for (auto& [k, cnt] : tally) stats.patches.push_back({k, cnt});
  return stats;
}

MassCheckResult transverse_mass_check(const QuadScheme& s,
                                      const QuadRegion& region,
                                      const QuadPointSet& P,
                                      const Rational& v_radius) {
  if (v_radius <= 0) throw UsageError("mass_check: V radius must be positive");
  auto gap = min_gap(P);
  if (gap && !(Rational(2) * v_radius < abs_value_lower(*gap)))
    throw UsageError("mass_check: thickenings overlap (2V >= min gap)");

  const QuadInt g = region.translate.d() == 0 ? s.zero() : region.translate;
  MassCheckResult res;
  res.count = static_cast<long long>(P.size());
  for (const auto& x : P.points()) {
    QuadInt y = x - g;
    if (y.cmp_value(region.T - v_radius) > 0 ||
        (-y).cmp_value(region.T - v_radius) > 0)
      ++res.straddle;
  }
  Rational m_region = Rational(2) * region.T;
  res.interior_ratio = Rational(2) * v_radius * res.count / m_region;
  res.rel_discrepancy_ub =
      res.count > 0 ? Rational(res.straddle, 2 * res.count) : Rational(0);
  res.abs_discrepancy_ub = v_radius * res.straddle / m_region;
  return res;
}

}  // namespace aplat
