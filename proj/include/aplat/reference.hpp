#pragma once

#include <functional>

#include "aplat/patterns.hpp"

namespace aplat {
namespace ref {

/**
 * Serial reference implementations. These stay deliberately naive
 * (nested loops, no hash index, no OpenMP) and are the oracles the
 * parallel kernels are tested and benchmarked against. Membership goes
 * through a lexicographically sorted vector, independent of the value
 * order and hash index used by the main path.
 */
template <class Point>
class LexSet {
 public:
  explicit LexSet(std::vector<Point> pts) : pts_(std::move(pts)) {
    std::sort(pts_.begin(), pts_.end(),
              [](const Point& a, const Point& b) { return lex_less(a, b); });
  }
  bool contains(const Point& p) const {
    return std::binary_search(
        pts_.begin(), pts_.end(), p,
        [](const Point& a, const Point& b) { return lex_less(a, b); });
  }

 private:
  std::vector<Point> pts_;
};

// Brute-force double loop over a coefficient box with exact predicates.
std::vector<QuadInt> enumerate_bruteforce(const QuadScheme&,
                                          const QuadRegion&,
                                          long long m_bound,
                                          long long n_bound);

template <class Point>
std::vector<GapRow<Point>> gap_set_naive(
    const std::vector<Point>& base_points,
    const std::function<bool(const Point&)>& in_inner,
    const std::vector<Point>& lambdas,
    const std::function<std::vector<Point>(const Point&)>& displacements) {
  LexSet<Point> members(base_points);
  std::vector<GapRow<Point>> rows;
  rows.reserve(lambdas.size());
  for (const auto& lambda : lambdas) {
    GapRow<Point> row;
    row.lambda = lambda;
    auto disps = displacements(lambda);
    for (const auto& p : base_points) {
      if (!in_inner(p)) continue;
      bool ok = true;
      for (const auto& d : disps) {
        if (!members.contains(p + d)) {
          ok = false;
          break;
        }
      }
      if (ok) row.base_points.push_back(p);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class PS>
PS sumset_naive(const PS& P, unsigned q) {
  using Point = typename PS::point_type;
  std::vector<Point> cur = P.points();
  for (unsigned step = 2; step <= q; ++step) {
    std::vector<Point> next;
    for (const auto& a : cur)
      for (const auto& b : P.points()) next.push_back(a + b);
    cur = PS::from_points(std::move(next)).points();
  }
  return PS::from_points(std::move(cur));
}

// Full recount per anchor, no two-pointer reuse.
long long banach_naive_best_count(const QuadScheme&, const QuadRegion&,
                                  const std::vector<QuadInt>& pts,
                                  const Rational& extent);

// Re-verify every reported (lambda, lambda_o) pair by direct membership
// only; returns the number of failures.
template <class Point>
long long recheck_witnesses(
    const std::vector<Point>& base_points,
    const std::vector<GapRow<Point>>& rows,
    const std::function<std::vector<Point>(const Point&)>& displacements) {
  LexSet<Point> members(base_points);
  long long failures = 0;
  for (const auto& row : rows) {
    auto disps = displacements(row.lambda);
    for (const auto& p : row.base_points) {
      if (!members.contains(p)) {
        ++failures;
        continue;
      }
      for (const auto& d : disps) {
        if (!members.contains(p + d)) {
          ++failures;
          break;
        }
      }
    }
  }
  return failures;
}

}  // namespace ref
}  // namespace aplat
