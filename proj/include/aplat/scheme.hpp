#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "aplat/padicrat.hpp"
#include "aplat/quadint.hpp"

namespace aplat {

inline constexpr long long kDefaultPointCap = 100'000'000;

/**
 * The quadratic cut-and-project scheme: G = H = R, lattice
 * {(m + n*sqrt(D), m - n*sqrt(D))}, window [-w, w] (closed) or
 * (-w, w) (open).
 */
struct QuadScheme {
  long long D;
  Rational w;
  bool window_closed = true;

  QuadScheme(long long D_, Rational w_, bool closed = true);

  QuadInt element(BigInt m, BigInt n) const {
    return QuadInt(std::move(m), std::move(n), D);
  }
  QuadInt zero() const { return QuadInt(0, 0, D); }
  QuadInt one() const { return QuadInt(1, 0, D); }
};

/**
 * The p-adic scheme: G = Q_p, H = R, lattice {(g, g) : g in Z[1/p]},
 * window [-w, w] in R.
 */
struct PadicScheme {
  long long p;
  Rational w;
  bool window_closed = true;

  PadicScheme(long long p_, Rational w_, bool closed = true);

  PadicRat element(BigInt a, unsigned k) const {
    return PadicRat(std::move(a), k, p);
  }
  PadicRat zero() const { return PadicRat(0, 0, p); }
  PadicRat one() const { return PadicRat(1, 0, p); }
};

// Interval |x - translate| <= T in R.
struct QuadRegion {
  Rational T;
  QuadInt translate;  // default-constructed means 0 in the scheme's ring

  explicit QuadRegion(Rational T_) : T(std::move(T_)) {}
  QuadRegion(Rational T_, QuadInt g) : T(std::move(T_)), translate(std::move(g)) {}
};

// Ball translate + p^{-level} Z_p in Q_p.
struct PadicRegion {
  unsigned level;
  std::optional<PadicRat> translate;

  explicit PadicRegion(unsigned level_) : level(level_) {}
  PadicRegion(unsigned level_, PadicRat t)
      : level(level_), translate(std::move(t)) {}
};

bool in_region(const QuadScheme&, const QuadRegion&, const QuadInt&);
bool in_region(const PadicScheme&, const PadicRegion&, const PadicRat&);

// Window test on the internal-space image: the defining predicate of
// the cut-and-project set.
bool in_lambda(const QuadScheme&, const QuadInt&);
bool in_lambda(const PadicScheme&, const PadicRat&);

// Window test against q*W, a superset test for the q-iterated sumset
// (exact as a superset since the window is convex and symmetric; exact
// sumset membership at small q is patterns::sumset).
bool in_lambda_q(const QuadScheme&, const QuadInt&, unsigned q);
bool in_lambda_q(const PadicScheme&, const PadicRat&, unsigned q);

/**
 * Finite, deduplicated point set with a hash index for O(1) exact
 * membership. Points are held in canonical order (ascending value) so
 * every downstream report is deterministic. Immutable after build.
 */
template <class Point, class Hash>
class PointSetT {
 public:
  using point_type = Point;

  PointSetT() = default;

  // Sorts, dedups, indexes. Every constructor funnels through here.
  static PointSetT from_points(std::vector<Point> pts) {
    PointSetT s;
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
      int c = cmp_value(a, b);
      if (c != 0) return c < 0;
      return lex_less(a, b);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    s.pts_ = std::move(pts);
    s.index_.reserve(s.pts_.size() * 2);
    for (const auto& p : s.pts_) s.index_.insert(p);
    return s;
  }

  const std::vector<Point>& points() const { return pts_; }
  size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  bool contains(const Point& p) const { return index_.count(p) != 0; }

 private:
  std::vector<Point> pts_;
  std::unordered_set<Point, Hash> index_;
};

using QuadPointSet = PointSetT<QuadInt, QuadIntHash>;
using PadicPointSet = PointSetT<PadicRat, PadicRatHash>;

struct EnumerateOptions {
  long long cap = kDefaultPointCap;
};

// Exact enumeration of Lambda intersected with the region: no point
// missed, none duplicated. The quadratic kernel parallelizes over the
// internal coefficient range; output is canonical regardless of the
// worker count.
QuadPointSet enumerate(const QuadScheme&, const QuadRegion&,
                       const EnumerateOptions& = {});
PadicPointSet enumerate(const PadicScheme&, const PadicRegion&,
                        const EnumerateOptions& = {});

// Capacity estimate used by the guard above (rational, certified upper
// bound on the true count).
Rational enumerate_estimate(const QuadScheme&, const QuadRegion&);
Rational enumerate_estimate(const PadicScheme&, const PadicRegion&);

}  // namespace aplat
