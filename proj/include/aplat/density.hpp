#pragma once

#include <functional>
#include <string>

#include "aplat/scheme.hpp"

namespace aplat {

/**
 * Strong Folner families at finite scale: nested intervals [-T_j, T_j]
 * (optionally translated and thickened) for the quadratic scheme, and
 * the balls p^{-n_j} Z_p (optionally translated) for the p-adic one.
 */
struct QuadFolner {
  std::vector<Rational> scales;       // strictly increasing T_j
  std::vector<QuadInt> translates;    // empty, or one per scale
  Rational thickening = 0;            // interval extension radius

  void validate() const;
  size_t size() const { return scales.size(); }
  QuadRegion region(size_t j) const;
  Rational measure(size_t j) const;   // 2*(T_j + thickening)
};

struct PadicFolner {
  long long p = 0;
  std::vector<unsigned> levels;           // strictly increasing n_j
  std::vector<PadicRat> translates;       // empty, or one per scale

  void validate() const;
  size_t size() const { return levels.size(); }
  PadicRegion region(size_t j) const;
  Rational measure(size_t j) const;       // p^{n_j}, Haar-invariant
};

struct DensityRow {
  std::string scale_label;
  long long count = 0;
  Rational measure;
  Rational ratio;  // count / measure, exact
};

struct DensityTrace {
  std::vector<DensityRow> rows;
  // limsup estimated as the max ratio over the tail half of the scales
  Rational limsup_estimate;
};

// P is a rule, not a fixed finite set: the generator must produce the
// subset consistently at every requested scale.
DensityTrace upper_density(
    const QuadFolner& folner,
    const std::function<QuadPointSet(const QuadRegion&)>& generate);
DensityTrace upper_density(
    const PadicFolner& folner,
    const std::function<PadicPointSet(const PadicRegion&)>& generate);

/**
 * Positive-density subset generators. Bernoulli verdicts come from a
 * counter-based generator keyed by (seed, exact coordinates), so the
 * same point receives the same verdict at every scale.
 */
struct SubsetSpec {
  enum class Kind { Full, Bernoulli, Subwindow, Congruence };
  Kind kind = Kind::Full;
  Rational theta;              // Bernoulli retention, in (0, 1]
  uint64_t seed = 0;           // Bernoulli (mandatory)
  Rational w_prime;            // subwindow bound, 0 < w' < w
  bool subwindow_strict = false;
  long long modulus = 0;       // congruence on m (quadratic only)
  std::vector<long long> residues;

  void validate(const Rational& scheme_w) const;
};

QuadPointSet subset_generate(const QuadScheme&, const QuadPointSet&,
                             const SubsetSpec&);
PadicPointSet subset_generate(const PadicScheme&, const PadicPointSet&,
                              const SubsetSpec&);

bool bernoulli_keep(uint64_t seed, const Rational& theta, uint64_t digest);

/**
 * Empirical upper Banach density: the maximum window density over all
 * fixed-extent windows that fit inside the ambient region, windows
 * anchored at points of P (plus the right region edge). A finite
 * surrogate: it lower-bounds d* restricted to the tested translates.
 */
struct BanachResult {
  long long best_count = 0;
  Rational measure;
  Rational ratio;  // best_count / measure
  std::string window_desc;
};

BanachResult banach_density_emp(const QuadScheme&, const QuadRegion&,
                                const QuadPointSet&, const Rational& extent);
BanachResult banach_density_emp(const PadicScheme&, const PadicRegion&,
                                const PadicPointSet&, long long ball_level);

// Counting bound |P cap Q| <= m(Q + V)/m(V) over seeded random windows.
struct CountingBoundResult {
  long long samples = 0;
  long long violations = 0;
};

CountingBoundResult counting_bound_check(const QuadScheme&, const QuadRegion&,
                                         const QuadPointSet&,
                                         const Rational& v_gap,
                                         const Rational& max_len, int samples,
                                         uint64_t seed);
CountingBoundResult counting_bound_check(const PadicScheme&, const PadicRegion&,
                                         const PadicPointSet&,
                                         long long v_level, int samples,
                                         uint64_t seed);

// Exact minimum consecutive gap (quadratic); needs >= 2 points.
std::optional<QuadInt> min_gap(const QuadPointSet&);
// Largest valuation among nonzero differences (p-adic); separation level
// is this + 1.
std::optional<long long> max_diff_valuation(const PadicScheme&,
                                            const PadicRegion&,
                                            const PadicPointSet&);

}  // namespace aplat
