#pragma once

#include <string>

#include "aplat/axioms.hpp"
#include "aplat/density.hpp"
#include "aplat/ipsystems.hpp"
#include "aplat/patterns.hpp"
#include "aplat/transversal.hpp"

#include "json.hpp"  // vendored nlohmann

namespace aplat {

using Json = nlohmann::ordered_json;

std::string sha256_hex(const std::string& bytes);

// Write-to-temp then atomic rename: no partial output files on error.
void atomic_write_file(const std::string& path, const std::string& content);

// ---- CSV formats (bit-specified; see README) ----

// header "m,n" / "a,k"; rows in canonical ascending-value order
std::string pointset_csv(const QuadPointSet&);
std::string pointset_csv(const PadicPointSet&);

// scale_label,count,measure_num,measure_den,ratio_decimal (12 digits)
std::string density_csv(const DensityTrace&);

// lambda_coords,base_count,inner_measure_num,inner_measure_den
std::string gap_csv(const GapSetReport<QuadInt>&);
std::string gap_csv(const GapSetReport<PadicRat>&);

// scale,covering_radius,K_size
struct SyndRow {
  std::string scale_label;
  std::string covering_radius;  // "num/den", "level:v", or "inf"
  size_t K_size = 0;
};
std::string synd_csv(const std::vector<SyndRow>&);

// ---- JSON reports ----

Json axioms_json(const QuadScheme&, const QuadAxiomReport&);
Json axioms_json(const PadicScheme&, const PadicAxiomReport&);
Json banach_json(const BanachResult&);
Json patches_json(const PatchStats<QuadInt>&, const Rational& rho);
Json patches_json(const PatchStats<PadicRat>&, long long rho_level);
Json separation_json(const QuadSeparationResult&);
Json separation_json(const PadicSeparationResult&);
Json ip_json(const std::optional<IpSearchHit>&, const QuadInt& delta,
             unsigned n);

Json coords_json(const QuadInt&);
Json coords_json(const PadicRat&);

}  // namespace aplat
