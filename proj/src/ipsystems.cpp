#include "aplat/ipsystems.hpp"

#include "aplat/reference.hpp"

namespace aplat {

IPSystem::IPSystem(std::vector<QuadInt> h) : generators(std::move(h)) {
  if (generators.empty()) throw UsageError("IPSystem: no generators");
  if (generators.size() > 63) throw UsageError("IPSystem: n must be <= 63");
  for (const auto& g : generators)
    if (g.value_sign() <= 0)
      throw UsageError("IPSystem: generators must have positive value");
}

QuadInt ip_eval(const IPSystem& sys, uint64_t alpha_mask) {
  if (sys.n() < 64 && (alpha_mask >> sys.n()) != 0)
    throw UsageError("ip_eval: index out of range");
  QuadInt acc(0, 0, sys.generators.front().d());
  for (unsigned k = 0; k < sys.n(); ++k) {
    if (alpha_mask & (uint64_t(1) << k)) acc = acc + sys.generators[k];
  }
  return acc;
}

QuadScheme shrunk_scheme(const QuadScheme& base, unsigned n) {
  if (n < 1) throw UsageError("shrunk_scheme: n must be >= 1");
  return QuadScheme(base.D, base.w / n, /*closed=*/false);
}

long long verify_power_containment(const QuadScheme& base, unsigned n,
                                   const Rational& T, long long cap) {
  QuadScheme delta_n = shrunk_scheme(base, n);
  QuadPointSet pts = enumerate(delta_n, QuadRegion(T), EnumerateOptions{cap});
  QuadPointSet power = sumset(pts, n, cap);
  long long violations = 0;
  for (const auto& x : power.points())
    if (!in_lambda(base, x)) ++violations;
  return violations;
}

std::optional<IpSearchHit> ip_pattern_search(const QuadScanContext& P_o,
                                             const QuadScheme& base,
                                             QuadInt delta,
                                             const std::vector<QuadInt>& F,
                                             unsigned n) {
  if (n < 1) throw UsageError("ip_pattern_search: n must be >= 1");
  if (F.empty()) throw UsageError("ip_pattern_search: F is empty");
  if (delta.is_zero()) throw UsageError("ip_pattern_search: delta is zero");
  if (delta.value_sign() < 0) delta = -delta;  // Delta_n is symmetric

  QuadScheme delta_scheme = shrunk_scheme(base, n);
  if (!in_lambda(delta_scheme, delta))
    throw UsageError("ip_pattern_search: delta is not in Delta_n");

  // The largest displacement occurs at j = n; checking it covers all j.
  for (const auto& f : F) P_o.check_displacement(delta * f * BigInt(n));

  for (unsigned j = 1; j <= n; ++j) {
    QuadQuery q;
    q.F = F;
    auto base_pts = find_base_points(P_o, delta * BigInt(j), q);
    if (base_pts.empty()) continue;
    IpSearchHit hit;
    hit.j = j;
    hit.p0 = base_pts.front();  // canonical order
    // independent recheck through a lexicographic membership structure
    ref::LexSet<QuadInt> members(P_o.pts.points());
    hit.verified = true;
    for (const auto& f : F) {
      if (!members.contains(hit.p0 + delta * f * BigInt(j))) {
        hit.verified = false;
        break;
      }
    }
    return hit;
  }
  return std::nullopt;
}

}  // namespace aplat
