#pragma once

#include "aplat/scheme.hpp"

namespace aplat {

/**
 * Difference sets near 0: the computable superset of the hull's return
 * times. Order 2 forms differences of differences, for the higher-order
 * exploratory checks.
 */
struct QuadDiffSet {
  QuadPointSet diffs;   // symmetric, contains 0 when the base is nonempty
  Rational radius;
  unsigned order = 1;
};

struct PadicDiffSet {
  PadicPointSet diffs;
  long long min_level = 0;  // differences with v_p >= min_level
  unsigned order = 1;
};

QuadDiffSet difference_set(const QuadPointSet& P, const Rational& radius,
                           unsigned order = 1,
                           long long cap = kDefaultPointCap);
PadicDiffSet difference_set(const PadicScheme&, const PadicRegion&,
                            const PadicPointSet& P, long long min_level,
                            unsigned order = 1,
                            long long cap = kDefaultPointCap);

/**
 * Separation check for the return-time hypothesis: the minimal nonzero
 * magnitude among elements of the window-(2+q)w cut-and-project superset
 * of Xi - Lambda^q near 0. Separation holds for any V strictly inside
 * that minimum; the norm bound 1/((2+q) w) is the a-priori guarantee.
 */
struct QuadSeparationResult {
  bool ok = false;
  Rational v_radius;
  QuadInt mu_min_witness;   // exact element realizing the minimum
  Rational mu_min_lb, mu_min_ub;
  Rational norm_lower_bound;
};

struct PadicSeparationResult {
  bool ok = false;
  long long v_level = 0;
  long long max_valuation = 0;        // over nonzero integers |f| <= (2+q)w
  long long min_admissible_level = 0; // max_valuation + 1
  BigInt witness;
};

QuadSeparationResult separation_check(const QuadScheme&, unsigned q,
                                      const Rational& v_radius,
                                      long long cap = kDefaultPointCap);
PadicSeparationResult separation_check(const PadicScheme&, unsigned q,
                                       long long v_level);

/**
 * Patch census: the finite-resolution census of the canonical
 * cross-section. Every inner point contributes its centred patch
 * (P - lambda) within the given radius; patches compare by exact
 * equality of coordinates.
 */
template <class Point>
struct Patch {
  std::vector<Point> key;  // canonical ascending order; contains 0
  long long count = 0;
};

template <class Point>
struct PatchStats {
  long long total_centers = 0;
  std::vector<Patch<Point>> patches;  // canonical key order
  size_t distinct_patch_count() const { return patches.size(); }
};

PatchStats<QuadInt> patch_census(const QuadScheme&, const QuadRegion&,
                                 const QuadPointSet&, const Rational& rho,
                                 const Rational& margin);
PatchStats<PadicRat> patch_census(const PadicScheme&, const PadicRegion&,
                                  const PadicPointSet&, long long rho_level);

/**
 * Transverse-mass identity at finite scale: the V-thickening of P fills
 * measure 2V per point, exactly, except for the at most two points whose
 * interval straddles a region endpoint. Returns certified bounds.
 */
struct MassCheckResult {
  long long count = 0;
  long long straddle = 0;
  Rational interior_ratio;       // 2V*count / m(region)
  Rational rel_discrepancy_ub;   // straddle / (2*count)
  Rational abs_discrepancy_ub;   // V*straddle / m(region)
};

MassCheckResult transverse_mass_check(const QuadScheme&, const QuadRegion&,
                                      const QuadPointSet&,
                                      const Rational& v_radius);

}  // namespace aplat
