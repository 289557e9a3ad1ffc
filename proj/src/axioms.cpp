#include "aplat/axioms.hpp"

#include <omp.h>

#include <unordered_map>

namespace aplat {

namespace {

// Greedy minimal hitting set over the pair-weighted sums: pick the
// candidate correcting the most (x, y) pairs, ties broken by smaller
// |f| then lexicographic (m, n) (or (a, k)). Deterministic by
// construction. The weights matter: the pair mass of star(x+y) peaks at
// 0, which is what singles out the canonical small corrections.
template <class Point, class Covers, class AbsLess>
std::vector<Point> greedy_cover(const std::vector<Point>& sums,
                                const std::vector<long long>& weights,
                                const std::vector<Point>& candidates,
                                const Covers& covers, const AbsLess& abs_less,
                                long long& uncovered_out) {
  std::vector<char> covered(sums.size(), 0);
  size_t remaining = sums.size();
  std::vector<Point> chosen;
  while (remaining > 0) {
    long long best_weight = 0;
    size_t best_idx = candidates.size();
    std::vector<long long> totals(candidates.size(), 0);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long c = 0; c < static_cast<long long>(candidates.size()); ++c) {
      long long cnt = 0;
      for (size_t i = 0; i < sums.size(); ++i) {
        if (!covered[i] && covers(sums[i], candidates[c])) cnt += weights[i];
      }
      totals[static_cast<size_t>(c)] = cnt;
    }
    for (size_t c = 0; c < candidates.size(); ++c) {
      if (totals[c] == 0) continue;
      if (best_idx == candidates.size() || totals[c] > best_weight ||
          (totals[c] == best_weight &&
           abs_less(candidates[c], candidates[best_idx]))) {
        best_weight = totals[c];
        best_idx = c;
      }
    }
    if (best_idx == candidates.size()) break;  // nothing corrects anything
    const Point& f = candidates[best_idx];
    for (size_t i = 0; i < sums.size(); ++i) {
      if (!covered[i] && covers(sums[i], f)) {
        covered[i] = 1;
        --remaining;
      }
    }
    chosen.push_back(f);
  }
  uncovered_out = static_cast<long long>(remaining);
  return chosen;
}

bool quad_abs_lex_less(const QuadInt& a, const QuadInt& b) {
  int c = cmp_abs_value(a, b);
  if (c != 0) return c < 0;
  return lex_less(a, b);
}

bool padic_abs_lex_less(const PadicRat& a, const PadicRat& b) {
  Rational aa = a.arch_abs(), bb = b.arch_abs();
  if (aa != bb) return aa < bb;
  return lex_less(a, b);
}

}  // namespace

Rational axioms_auto_margin(const QuadScheme& s, const QuadPointSet& pts) {
  const auto& v = pts.points();
  if (v.size() < 2) return Rational(1);
  size_t arg = 1;
  for (size_t i = 2; i < v.size(); ++i) {
    if (cmp_value(v[i] - v[i - 1], v[arg] - v[arg - 1]) > 0) arg = i;
  }
  Rational ub = abs_value_upper(v[arg] - v[arg - 1]);
  BigInt up = floor_div(numerator(ub) * 2, denominator(ub)) + 1;
  return Rational(up);
}

QuadAxiomReport verify_axioms(const QuadScheme& s, const QuadRegion& region,
                              const QuadPointSet& pts, const Rational& margin,
                              long long cap) {
  if (!region.translate.is_zero() && region.translate.d() != 0)
    throw UsageError("verify_axioms: region must be centred at 0");
  if (margin < 0 || margin >= region.T)
    throw UsageError("verify_axioms: margin must lie in [0, T)");

  QuadAxiomReport rep;
  const auto& v = pts.points();
  const long long N = static_cast<long long>(v.size());

  rep.contains_zero = pts.contains(s.zero());

  // (a) symmetry; first witness in canonical order
  {
    long long bad = N;
#pragma omp parallel for reduction(min : bad)
    for (long long i = 0; i < N; ++i) {
      if (!pts.contains(-v[static_cast<size_t>(i)])) bad = std::min(bad, i);
    }
    if (bad < N) {
      rep.symmetric = false;
      rep.asym_witness = v[static_cast<size_t>(bad)];
    }
  }

  // (c)/(d) gap statistics over consecutive points; points are sorted by
  // value, and gaps inside the scanned window are genuine gaps of Lambda.
  if (N >= 2) {
    rep.gap_stats_valid = true;
    size_t amin = 1, amax = 1;
    for (size_t i = 2; i < v.size(); ++i) {
      QuadInt g = v[i] - v[i - 1];
      if (cmp_value(g, v[amin] - v[amin - 1]) < 0) amin = i;
      if (cmp_value(g, v[amax] - v[amax - 1]) > 0) amax = i;
    }
    rep.min_gap_diff = v[amin] - v[amin - 1];
    rep.min_gap_lb = abs_value_lower(rep.min_gap_diff);
    rep.max_gap_diff = v[amax] - v[amax - 1];
    rep.covering_radius_ub = abs_value_upper(rep.max_gap_diff);
  }

  // Correction-set search radius: 2x covering radius. The margin must
  // dominate it so every sum in the inner window has its nearest Lambda
  // point inside the enumerated region.
  Rational search_radius =
      rep.gap_stats_valid ? Rational(2) * rep.covering_radius_ub : Rational(1);
  if (margin < search_radius)
    throw UsageError("verify_axioms: margin " + rational_string(margin) +
                     " must dominate the correction search radius " +
                     rational_string(search_radius));

  Rational inner_T = region.T - margin;
  std::vector<QuadInt> inner;
  inner.reserve(v.size());
  for (const auto& x : v)
    if (quad_abs_leq(x, inner_T)) inner.push_back(x);
  const long long M = static_cast<long long>(inner.size());
  if (M * M > cap) throw CapacityError("verify_axioms: too many pairs");

  // (e) sums of inner pairs with pair multiplicities, then greedy cover
  // with corrections drawn from the window-3w cut-and-project set near 0.
  std::vector<QuadInt> sums;
  std::vector<long long> weights;
  {
    std::unordered_map<QuadInt, long long, QuadIntHash> sum_map;
#pragma omp parallel
    {
      std::unordered_map<QuadInt, long long, QuadIntHash> local;
#pragma omp for schedule(dynamic, 16) nowait
      for (long long i = 0; i < M; ++i) {
        for (long long j = i; j < M; ++j) {
          ++local[inner[static_cast<size_t>(i)] +
                  inner[static_cast<size_t>(j)]];
        }
      }
#pragma omp critical
      for (const auto& [k, v] : local) sum_map[k] += v;
    }
    sums.reserve(sum_map.size());
    for (const auto& [k, v] : sum_map) sums.push_back(k);
    std::sort(sums.begin(), sums.end(), [](const QuadInt& a, const QuadInt& b) {
      int c = cmp_value(a, b);
      if (c != 0) return c < 0;
      return lex_less(a, b);
    });
    weights.reserve(sums.size());
    for (const auto& k : sums) weights.push_back(sum_map.at(k));
  }
  rep.sum_count = static_cast<long long>(sums.size());

  if (!sums.empty()) {
    QuadScheme corr_scheme(s.D, Rational(3) * s.w, true);
    QuadPointSet cands =
        enumerate(corr_scheme, QuadRegion(search_radius), EnumerateOptions{cap});
    auto covers = [&](const QuadInt& sum, const QuadInt& f) {
      return in_lambda(s, sum - f);
    };
    rep.correction_set = greedy_cover(sums, weights, cands.points(), covers,
                                      quad_abs_lex_less, rep.uncovered_sums);
  }

  // (f) multiplicative closedness for products landing in the inner window
  {
    long long violations = 0, checked = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : violations, checked)
    for (long long i = 0; i < M; ++i) {
      for (long long j = i; j < M; ++j) {
        QuadInt prod =
            inner[static_cast<size_t>(i)] * inner[static_cast<size_t>(j)];
        if (!quad_abs_leq(prod, inner_T)) continue;
        ++checked;
        if (!in_lambda(s, prod)) ++violations;
      }
    }
    rep.mult_closed_violations = violations;
    rep.mult_pairs_checked = checked;
  }

  return rep;
}

PadicAxiomReport verify_axioms(const PadicScheme& s, const PadicRegion& region,
                               const PadicPointSet& pts, long long cap) {
  if (region.translate)
    throw UsageError("verify_axioms: region must be the untranslated ball");

  PadicAxiomReport rep;
  const auto& v = pts.points();
  const long long N = static_cast<long long>(v.size());
  if (N * N > cap) throw CapacityError("verify_axioms: too many pairs");

  rep.contains_zero = pts.contains(s.zero());

  {
    long long bad = N;
#pragma omp parallel for reduction(min : bad)
    for (long long i = 0; i < N; ++i) {
      if (!pts.contains(-v[static_cast<size_t>(i)])) bad = std::min(bad, i);
    }
    if (bad < N) {
      rep.symmetric = false;
      rep.asym_witness = v[static_cast<size_t>(bad)];
    }
  }

  // Differences at the region's common denominator p^n: numerators
  // A_i = a_i p^{n-k_i}; v_p(x_i - x_j) = v_p(A_i - A_j) - n. The max
  // valuation is the largest j at which two numerators collide mod p^j.
  const long long n = region.level;
  if (N >= 2) {
    rep.gap_stats_valid = true;
    std::vector<BigInt> A(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i].k() > region.level)
        throw UsageError("verify_axioms: point finer than the region level");
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
    rep.max_diff_valuation = j - n;
    rep.separation_level = rep.max_diff_valuation + 1;

    // covering_level: largest L (>= -n) such that every coset of
    // p^L Z_p inside the region ball meets the set.
    long long L = -n;
    while (true) {
      long long next = L + 1;
      if (next > 62) break;
      BigInt want = bigint_pow(s.p, static_cast<unsigned>(next + n));
      if (want > N) break;  // cannot cover more cosets than points
      std::unordered_set<BigInt, BigIntHash> res;
      for (const auto& a : A) {
        BigInt r = a % want;
        if (r < 0) r += want;
        res.insert(r);
      }
      if (static_cast<BigInt>(res.size()) != want) break;
      L = next;
    }
    rep.covering_level = L;
  }

  // Corrections: the ball is a group, so sums never truncate; candidate
  // corrections are the integers with |f| <= 3w.
  std::vector<PadicRat> sums;
  std::vector<long long> weights;
  {
    std::unordered_map<PadicRat, long long, PadicRatHash> sum_map;
#pragma omp parallel
    {
      std::unordered_map<PadicRat, long long, PadicRatHash> local;
#pragma omp for schedule(dynamic, 16) nowait
      for (long long i = 0; i < N; ++i) {
        for (long long j = i; j < N; ++j) {
          ++local[v[static_cast<size_t>(i)] + v[static_cast<size_t>(j)]];
        }
      }
#pragma omp critical
      for (const auto& [k, val] : local) sum_map[k] += val;
    }
    sums.reserve(sum_map.size());
    for (const auto& [k, val] : sum_map) sums.push_back(k);
    std::sort(sums.begin(), sums.end(),
              [](const PadicRat& a, const PadicRat& b) {
                int c = cmp_value(a, b);
                if (c != 0) return c < 0;
                return lex_less(a, b);
              });
    weights.reserve(sums.size());
    for (const auto& k : sums) weights.push_back(sum_map.at(k));
  }
  rep.sum_count = static_cast<long long>(sums.size());

  if (!sums.empty()) {
    PadicScheme corr_scheme(s.p, Rational(3) * s.w, true);
    PadicPointSet cands = enumerate(corr_scheme, PadicRegion(0));
    auto covers = [&](const PadicRat& sum, const PadicRat& f) {
      return in_lambda(s, sum - f);
    };
    rep.correction_set = greedy_cover(sums, weights, cands.points(), covers,
                                      padic_abs_lex_less, rep.uncovered_sums);
  }

  {
    long long violations = 0, checked = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : violations, checked)
    for (long long i = 0; i < N; ++i) {
      for (long long j = i; j < N; ++j) {
        PadicRat prod =
            v[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
        if (!in_region(s, region, prod)) continue;
        ++checked;
        if (!in_lambda(s, prod)) ++violations;
      }
    }
    rep.mult_closed_violations = violations;
    rep.mult_pairs_checked = checked;
  }

  return rep;
}

}  // namespace aplat
