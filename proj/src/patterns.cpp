#include "aplat/patterns.hpp"

#include <limits>

namespace aplat {

QuadSyndeticity syndeticity(const QuadScanContext& lambda_ctx,
                            const QuadPointSet& S) {
  QuadSyndeticity res;
  if (S.empty()) {
    res.infinite = true;
    return res;
  }
  const auto& sv = S.points();
  std::vector<QuadInt> inner;
  for (const auto& l : lambda_ctx.pts.points())
    if (lambda_ctx.in_inner(l)) inner.push_back(l);
  if (inner.empty()) {
    res.covering_radius_ub = 0;
    res.worst_diff = lambda_ctx.scheme.zero();
    res.K = {lambda_ctx.scheme.zero()};
    return res;
  }

  // Nearest S point in value order; candidates are the two neighbours.
  // Ties break to the smaller |difference| then lexicographic coords.
  const long long N = static_cast<long long>(inner.size());
  std::vector<QuadInt> best(inner.size(), lambda_ctx.scheme.zero());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < N; ++i) {
    const QuadInt& l = inner[static_cast<size_t>(i)];
    auto it = std::partition_point(
        sv.begin(), sv.end(),
        [&](const QuadInt& s) { return cmp_value(s, l) < 0; });
    std::optional<QuadInt> pick;
    auto consider = [&](const QuadInt& s) {
      QuadInt d = l - s;
      if (!pick) {
        pick = d;
        return;
      }
      int c = cmp_abs_value(d, *pick);
      if (c < 0 || (c == 0 && lex_less(d, *pick))) pick = d;
    };
    if (it != sv.end()) consider(*it);
    if (it != sv.begin()) consider(*std::prev(it));
    best[static_cast<size_t>(i)] = *pick;
  }

  size_t worst = 0;
  for (size_t i = 1; i < best.size(); ++i)
    if (cmp_abs_value(best[i], best[worst]) > 0) worst = i;
  res.worst_diff = best[worst];
  res.covering_radius_ub = abs_value_upper(res.worst_diff);
  res.K = QuadPointSet::from_points(best).points();
  return res;
}

PadicSyndeticity syndeticity(const PadicScanContext& lambda_ctx,
                             const PadicPointSet& S) {
  PadicSyndeticity res;
  if (S.empty()) {
    res.infinite = true;
    return res;
  }
  std::vector<PadicRat> inner;
  for (const auto& l : lambda_ctx.pts.points())
    if (lambda_ctx.in_inner(l)) inner.push_back(l);
  if (inner.empty()) {
    res.covering_level = std::numeric_limits<long long>::max();
    res.K = {lambda_ctx.scheme.zero()};
    return res;
  }

  // Direct exact scan: per lambda, the nearest S point maximizes
  // v_p(lambda - s). Exact hits count as valuation +infinity. Ties
  // break to the canonical-order s.
  constexpr long long kInf = std::numeric_limits<long long>::max();
  const long long N = static_cast<long long>(inner.size());
  std::vector<PadicRat> diffs(inner.size());
  std::vector<long long> levels(inner.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < N; ++i) {
    const PadicRat& l = inner[static_cast<size_t>(i)];
    long long best_v = std::numeric_limits<long long>::min();
    PadicRat best_diff;
    for (const auto& s : S.points()) {
      PadicRat d = l - s;
      auto v = d.padic_val();
      long long vv = v ? *v : kInf;
      if (vv > best_v) {
        best_v = vv;
        best_diff = d;
      }
    }
    levels[static_cast<size_t>(i)] = best_v;
    diffs[static_cast<size_t>(i)] = best_diff;
  }
  res.covering_level = *std::min_element(levels.begin(), levels.end());
  res.K = PadicPointSet::from_points(std::move(diffs)).points();
  return res;
}

}  // namespace aplat
