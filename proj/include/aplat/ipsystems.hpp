#pragma once

#include <optional>

#include "aplat/patterns.hpp"

namespace aplat {

/**
 * IP_n-system over the quadratic ring: phi(alpha) = sum_{k in alpha} h_k
 * with positive generators. Finite additivity over disjoint unions holds
 * by construction.
 */
struct IPSystem {
  std::vector<QuadInt> generators;  // h_1 .. h_n, each of positive value

  IPSystem(std::vector<QuadInt> h);
  unsigned n() const { return static_cast<unsigned>(generators.size()); }
};

// phi(alpha) for alpha given as a bitmask over {1..n}; phi(empty) = 0.
QuadInt ip_eval(const IPSystem&, uint64_t alpha_mask);

// Delta_n: the base scheme with window shrunk to (1/n) W, taken open.
QuadScheme shrunk_scheme(const QuadScheme& base, unsigned n);

// Count of elements of the n-fold sumset of Delta_n cap [-T, T] that
// leave the base window; 0 realizes the containment chain at this scale.
long long verify_power_containment(const QuadScheme& base, unsigned n,
                                   const Rational& T,
                                   long long cap = kDefaultPointCap);

struct IpSearchHit {
  unsigned j = 0;
  QuadInt p0;
  bool verified = false;
};

/**
 * The pattern search p_o + j*delta*F subset of P_o for j = 1..n, with
 * delta drawn from Delta_n (negative delta searched as |delta|, Delta_n
 * being symmetric). Smallest j wins; ties break to the canonical-order
 * p_o. Absence is a finite-scale verdict only.
 */
std::optional<IpSearchHit> ip_pattern_search(const QuadScanContext& P_o,
                                             const QuadScheme& base,
                                             QuadInt delta,
                                             const std::vector<QuadInt>& F,
                                             unsigned n);

}  // namespace aplat
