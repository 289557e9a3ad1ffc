#pragma once

#include <omp.h>

#include <optional>
#include <sstream>
#include <string>

#include "aplat/scheme.hpp"

namespace aplat {

/**
 * Scan contexts bundle a fully enumerated point set with its scheme,
 * region and inner bound. Base points are drawn from the inner part;
 * displacements must keep probes inside the enumerated region, which
 * check_displacement enforces so boundary truncation can never produce
 * a false negative.
 */
struct QuadScanContext {
  const QuadScheme& scheme;
  const QuadRegion& region;
  const QuadPointSet& pts;
  Rational inner_T;

  QuadInt origin() const {
    return region.translate.d() == 0 ? scheme.zero() : region.translate;
  }
  bool in_inner(const QuadInt& x) const {
    return quad_abs_leq(x - origin(), inner_T);
  }
  void check_displacement(const QuadInt& disp) const {
    if (!quad_abs_leq(disp, region.T - inner_T))
      throw UsageError(
          "scan: displacement exceeds the region margin (inner bound " +
          rational_string(inner_T) + ", region " + rational_string(region.T) +
          ")");
  }
  Rational inner_measure() const { return Rational(2) * inner_T; }
};

struct PadicScanContext {
  const PadicScheme& scheme;
  const PadicRegion& region;
  const PadicPointSet& pts;

  bool in_inner(const PadicRat& x) const {
    return in_region(scheme, region, x);
  }
  // The ball p^{-level} Z_p is a group: displacements of level <= region
  // level keep probes inside it, with no archimedean truncation because
  // Lambda_p cap F_n is finite and fully enumerated.
  void check_displacement(const PadicRat& disp) const {
    auto v = disp.padic_val();
    if (v && *v < -static_cast<long long>(region.level))
      throw UsageError("scan: displacement finer than the region ball");
  }
  Rational inner_measure() const {
    return Rational(bigint_pow(scheme.p, region.level));
  }
};

/**
 * A pattern query: dilation mode tries lambda*f for f in F (F from the
 * group generated by Lambda, not necessarily Lambda itself); integer-
 * multiples mode tries k*lambda for k = 1..r.
 */
template <class Point>
struct PatternQuery {
  std::vector<Point> F;  // dilation mode when non-empty
  unsigned r = 0;        // integer_multiples mode when r >= 1

  bool dilation() const { return !F.empty(); }
  void validate() const {
    if (F.empty() == (r == 0))
      throw UsageError("query: exactly one of F / r must be given");
    for (size_t i = 0; i < F.size(); ++i)
      for (size_t j = i + 1; j < F.size(); ++j)
        if (F[i] == F[j]) throw UsageError("query: F elements must be distinct");
  }
  std::vector<Point> displacements(const Point& lambda) const {
    std::vector<Point> d;
    if (dilation()) {
      d.reserve(F.size());
      for (const auto& f : F) d.push_back(lambda * f);
    } else {
      d.reserve(r);
      for (unsigned k = 1; k <= r; ++k) d.push_back(lambda * BigInt(k));
    }
    return d;
  }
};

using QuadQuery = PatternQuery<QuadInt>;
using PadicQuery = PatternQuery<PadicRat>;

template <class Point>
struct GapRow {
  Point lambda;
  std::vector<Point> base_points;  // canonical order
  long long base_count() const {
    return static_cast<long long>(base_points.size());
  }
};

template <class Point>
struct GapSetReport {
  std::vector<GapRow<Point>> rows;  // one per scanned lambda, canonical order
  Rational inner_measure;
  bool empty_set = true;  // no lambda with a witness
  std::optional<Rational> empirical_c;  // min positive base density

  std::vector<Point> gap_points() const {
    std::vector<Point> s;
    for (const auto& r : rows)
      if (r.base_count() > 0) s.push_back(r.lambda);
    return s;
  }
};

// All base points for one lambda: the lambda_o in the inner region with
// lambda_o + d in P_o for every displacement d. O(|P_o| * |F|) probes.
template <class Ctx, class Point>
std::vector<Point> base_points_serial(const Ctx& P_o,
                                      const std::vector<Point>& disps) {
  std::vector<Point> out;
  for (const auto& p : P_o.pts.points()) {
    if (!P_o.in_inner(p)) continue;
    bool ok = true;
    for (const auto& d : disps) {
      if (!P_o.pts.contains(p + d)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(p);
  }
  return out;
}

template <class Ctx, class Point>
std::vector<Point> find_base_points(const Ctx& P_o, const Point& lambda,
                                    const PatternQuery<Point>& query) {
  query.validate();
  auto disps = query.displacements(lambda);
  for (const auto& d : disps) P_o.check_displacement(d);

  const auto& v = P_o.pts.points();
  const long long N = static_cast<long long>(v.size());
  std::vector<char> hit(v.size(), 0);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < N; ++i) {
    const auto& p = v[static_cast<size_t>(i)];
    if (!P_o.in_inner(p)) continue;
    bool ok = true;
    for (const auto& d : disps) {
      if (!P_o.pts.contains(p + d)) {
        ok = false;
        break;
      }
    }
    if (ok) hit[static_cast<size_t>(i)] = 1;
  }
  std::vector<Point> out;
  for (size_t i = 0; i < v.size(); ++i)
    if (hit[i]) out.push_back(v[i]);
  return out;
}

template <class Ctx, class Point>
GapSetReport<Point> gap_set(const Ctx& P_o, const std::vector<Point>& lambdas,
                            const PatternQuery<Point>& query) {
  query.validate();
  for (const auto& l : lambdas)
    for (const auto& d : query.displacements(l)) P_o.check_displacement(d);

  GapSetReport<Point> rep;
  rep.inner_measure = P_o.inner_measure();
  rep.rows.resize(lambdas.size());
  const long long L = static_cast<long long>(lambdas.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < L; ++i) {
    auto& row = rep.rows[static_cast<size_t>(i)];
    row.lambda = lambdas[static_cast<size_t>(i)];
    row.base_points =
        base_points_serial(P_o, query.displacements(row.lambda));
  }
  for (const auto& row : rep.rows) {
    if (row.base_count() == 0) continue;
    rep.empty_set = false;
    Rational dens = Rational(row.base_count()) / rep.inner_measure;
    if (!rep.empirical_c || dens < *rep.empirical_c) rep.empirical_c = dens;
  }
  return rep;
}

// Arithmetic-progression scan: base points are the lambda_o with
// lambda_o + k*lambda in P_o for all k = 1..r, i.e. the start of an
// (r+1)-term progression of gap lambda inside P_o.
template <class Ctx, class Point>
GapSetReport<Point> ap_scan(const Ctx& P_o, const std::vector<Point>& lambdas,
                            unsigned r) {
  if (r < 1) throw UsageError("ap_scan: r must be >= 1");
  PatternQuery<Point> q;
  q.r = r;
  return gap_set(P_o, lambdas, q);
}

/**
 * Additive endomorphisms of the ambient group that map Lambda into the
 * q-iterated sumset: multiplication by a fixed ring element, or integer
 * scaling.
 */
template <class Point>
struct Endo {
  enum class Kind { MultBy, IntScale };
  Kind kind = Kind::IntScale;
  Point c;
  long long k = 1;

  Point apply(const Point& x) const {
    return kind == Kind::MultBy ? c * x : x * BigInt(k);
  }
  std::string describe() const {
    if (kind == Kind::IntScale) return "scale(" + std::to_string(k) + ")";
    return "mult";
  }
};

inline Rational internal_abs_upper(const QuadInt& x) {
  return abs_value_upper(x.star());
}
inline Rational internal_abs_upper(const PadicRat& x) { return x.arch_abs(); }

template <class Point>
struct EndoCheckResult {
  bool ok = true;
  std::optional<Point> witness;   // violating x, if any
  Rational max_image_bound;       // certified bound on the internal image
};

// True iff alpha(x) stays in the q*W window superset for every x in the
// scanned set; also reports the largest internal-space magnitude seen,
// for diagnosing the minimal admissible q.
template <class Ctx, class Point>
EndoCheckResult<Point> endo_check(const Ctx& P_o, const Endo<Point>& endo,
                                  unsigned q) {
  EndoCheckResult<Point> res;
  res.max_image_bound = 0;
  for (const auto& x : P_o.pts.points()) {
    if (!P_o.in_inner(x)) continue;
    Point img = endo.apply(x);
    Rational bound = internal_abs_upper(img);
    if (bound > res.max_image_bound) res.max_image_bound = bound;
    if (!in_lambda_q(P_o.scheme, img, q)) {
      res.ok = false;
      if (!res.witness) res.witness = x;
    }
  }
  return res;
}

// Multiple-recurrence scan with verified endomorphisms. The empirical
// "c" is reported, never asserted against a fixed constant.
template <class Ctx, class Point>
GapSetReport<Point> multi_recurrence_scan(const Ctx& P_o,
                                          const std::vector<Point>& lambdas,
                                          const std::vector<Endo<Point>>& endos,
                                          unsigned q) {
  if (endos.empty()) throw UsageError("multi_recurrence: no endomorphisms");
  for (const auto& e : endos) {
    auto chk = endo_check(P_o, e, q);
    if (!chk.ok) {
      std::ostringstream os;
      os << "multi_recurrence: endo " << e.describe()
         << " leaves the Lambda^" << q << " window at x = " << *chk.witness;
      throw UsageError(os.str());
    }
  }
  for (const auto& l : lambdas)
    for (const auto& e : endos) P_o.check_displacement(e.apply(l));

  GapSetReport<Point> rep;
  rep.inner_measure = P_o.inner_measure();
  rep.rows.resize(lambdas.size());
  const long long L = static_cast<long long>(lambdas.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < L; ++i) {
    auto& row = rep.rows[static_cast<size_t>(i)];
    row.lambda = lambdas[static_cast<size_t>(i)];
    std::vector<Point> disps;
    disps.reserve(endos.size());
    for (const auto& e : endos) disps.push_back(e.apply(row.lambda));
    row.base_points = base_points_serial(P_o, disps);
  }
  for (const auto& row : rep.rows) {
    if (row.base_count() == 0) continue;
    rep.empty_set = false;
    Rational dens = Rational(row.base_count()) / rep.inner_measure;
    if (!rep.empirical_c || dens < *rep.empirical_c) rep.empirical_c = dens;
  }
  return rep;
}

// Exact q-fold iterated sumset with dedup; the brute-force oracle for
// the q*W window superset test.
template <class PS>
PS sumset(const PS& P, unsigned q, long long cap = kDefaultPointCap) {
  if (q < 1) throw UsageError("sumset: q must be >= 1");
  using Point = typename PS::point_type;
  std::vector<Point> cur = P.points();
  for (unsigned step = 2; step <= q; ++step) {
    if (static_cast<long long>(cur.size()) *
            static_cast<long long>(P.size()) >
        cap)
      throw CapacityError("sumset: pair count exceeds cap");
    std::vector<Point> next;
    next.reserve(cur.size() * 2);
    const long long N = static_cast<long long>(cur.size());
#pragma omp parallel
    {
      std::vector<Point> local;
#pragma omp for schedule(static) nowait
      for (long long i = 0; i < N; ++i) {
        for (const auto& p : P.points())
          local.push_back(cur[static_cast<size_t>(i)] + p);
      }
#pragma omp critical
      {
        next.insert(next.end(), std::make_move_iterator(local.begin()),
                    std::make_move_iterator(local.end()));
      }
    }
    PS dedup = PS::from_points(std::move(next));
    cur = dedup.points();
    if (static_cast<long long>(cur.size()) > cap)
      throw CapacityError("sumset: result exceeds cap");
  }
  return PS::from_points(std::move(cur));
}

/**
 * Covering-radius statistic for S inside the scanned Lambda window: the
 * worst distance from an inner Lambda point to S, with the realized
 * nearest differences as the finite K candidate.
 */
struct QuadSyndeticity {
  bool infinite = false;  // S empty
  QuadInt worst_diff;     // exact difference realizing the radius
  Rational covering_radius_ub;
  std::vector<QuadInt> K;
};

struct PadicSyndeticity {
  bool infinite = false;
  long long covering_level = 0;  // min over lambda of best match valuation
  std::vector<PadicRat> K;
};

QuadSyndeticity syndeticity(const QuadScanContext& lambda_ctx,
                            const QuadPointSet& S);
PadicSyndeticity syndeticity(const PadicScanContext& lambda_ctx,
                             const PadicPointSet& S);

}  // namespace aplat
