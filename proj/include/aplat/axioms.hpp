#pragma once

#include <optional>

#include "aplat/scheme.hpp"

namespace aplat {

/**
 * Finite-scale verification of the approximate-lattice axioms inside a
 * symmetric region: symmetry, 0-membership, uniform discreteness
 * (minimum gap), relative denseness (covering radius), the correction
 * set F with sums(inner) subset of Lambda + F, and multiplicative
 * closedness.
 *
 * Gap statistics are exact: the witness differences carry the exact
 * coordinates, and the rational fields are certified directional bounds
 * (min_gap rounded down, covering radius rounded up).
 */
struct QuadAxiomReport {
  bool symmetric = true;
  std::optional<QuadInt> asym_witness;
  bool contains_zero = false;

  bool gap_stats_valid = false;  // needs >= 2 points
  QuadInt min_gap_diff;          // exact, value > 0
  Rational min_gap_lb;
  QuadInt max_gap_diff;
  Rational covering_radius_ub;

  std::vector<QuadInt> correction_set;  // greedy minimal hitting set
  long long sum_count = 0;
  long long uncovered_sums = 0;  // must be 0

  long long mult_closed_violations = 0;
  long long mult_pairs_checked = 0;
};

struct PadicAxiomReport {
  bool symmetric = true;
  std::optional<PadicRat> asym_witness;
  bool contains_zero = false;

  bool gap_stats_valid = false;
  long long max_diff_valuation = 0;   // max v_p over nonzero differences
  long long separation_level = 0;     // (P-P) cap p^level Z_p = {0}
  long long covering_level = 0;       // largest L with all level-L cosets hit

  std::vector<PadicRat> correction_set;
  long long sum_count = 0;
  long long uncovered_sums = 0;

  long long mult_closed_violations = 0;
  long long mult_pairs_checked = 0;
};

// Margin that dominates the correction-set search radius, derived from
// the enumerated covering radius (2x, rounded up to an integer).
Rational axioms_auto_margin(const QuadScheme&, const QuadPointSet&);

QuadAxiomReport verify_axioms(const QuadScheme&, const QuadRegion&,
                              const QuadPointSet&, const Rational& margin,
                              long long cap = kDefaultPointCap);
PadicAxiomReport verify_axioms(const PadicScheme&, const PadicRegion&,
                               const PadicPointSet&,
                               long long cap = kDefaultPointCap);

}  // namespace aplat
