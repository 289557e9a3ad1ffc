#include "aplat/reference.hpp"

namespace aplat {
namespace ref {

std::vector<QuadInt> enumerate_bruteforce(const QuadScheme& s,
                                          const QuadRegion& region,
                                          long long m_bound,
                                          long long n_bound) {
  std::vector<QuadInt> out;
  for (long long m = -m_bound; m <= m_bound; ++m) {
    for (long long n = -n_bound; n <= n_bound; ++n) {
      QuadInt x = s.element(m, n);
      if (!in_region(s, region, x)) continue;
      if (!in_lambda(s, x)) continue;
      out.push_back(x);
    }
  }
  return out;
}

long long banach_naive_best_count(const QuadScheme& s, const QuadRegion& region,
                                  const std::vector<QuadInt>& pts,
                                  const Rational& extent) {
  const QuadInt g = region.translate.d() == 0 ? s.zero() : region.translate;
  long long best = 0;
  for (const auto& anchor : pts) {
    if ((anchor - g).cmp_value(region.T - extent) > 0) continue;
    long long count = 0;
    for (const auto& p : pts) {
      QuadInt d = p - anchor;
      if (d.value_sign() >= 0 && d.cmp_value(extent) <= 0) ++count;
    }
    best = std::max(best, count);
  }
  // right-edge window [g + T - extent, g + T]
  long long edge = 0;
  for (const auto& p : pts) {
    if ((p - g).cmp_value(region.T - extent) >= 0) ++edge;
  }
  return std::max(best, edge);
}

}  // namespace ref
}  // namespace aplat
