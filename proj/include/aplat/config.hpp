#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aplat/density.hpp"
#include "aplat/patterns.hpp"

namespace aplat {

/**
 * Flat sectioned key=value config. Exact ring elements are entered as
 * integer tuples ("m,n" quadratic, "a,k" p-adic), never as decimals.
 * Unknown sections or keys are rejected with line numbers, as are
 * malformed values.
 */
struct RunConfig {
  // [scheme]
  std::string scheme_kind;  // "quad" | "padic"
  long long D = 0;
  long long p = 0;
  Rational w = 1;
  bool window_closed = true;

  // [region]
  std::optional<Rational> T;
  std::optional<unsigned> level;
  std::optional<std::pair<BigInt, BigInt>> translate;  // m,n or a,k
  std::optional<Rational> margin;                      // absent = auto
  std::optional<Rational> lambda_T;                    // absent = auto
  std::optional<unsigned> lambda_level;

  // [subset]
  SubsetSpec subset;
  std::optional<uint64_t> subset_seed;  // mandatory for bernoulli

  // [query]
  std::string query_mode;  // "dilation" | "integer_multiples"
  std::vector<std::pair<BigInt, BigInt>> F;  // exact coordinate tuples
  unsigned r = 0;
  unsigned q = 0;
  std::vector<std::string> endo_specs;  // "mult:m,n" / "scale:k"
  std::optional<std::pair<BigInt, BigInt>> delta;
  unsigned ip_n = 0;

  // [folner]
  std::vector<Rational> scales;
  std::vector<unsigned> levels;
  std::vector<std::pair<BigInt, BigInt>> folner_translates;
  Rational thickening = 0;

  // [density]
  std::optional<Rational> window_extent;
  std::optional<long long> ball_level;
  std::optional<Rational> v_gap;
  std::optional<long long> v_level;
  int samples = 100;

  // [transversal]
  std::optional<Rational> rho;
  std::optional<long long> rho_level;
  std::optional<Rational> sep_radius;
  std::optional<long long> sep_level;
  unsigned diff_order = 1;

  uint64_t seed = 0;  // [seed] seed=
  std::string raw;    // exact file bytes, for the manifest hash

  bool is_quad() const { return scheme_kind == "quad"; }

  QuadScheme quad_scheme() const;
  PadicScheme padic_scheme() const;
  QuadRegion quad_region() const;
  PadicRegion padic_region() const;
};

RunConfig parse_config(std::istream& in);
RunConfig parse_config_file(const std::string& path);

}  // namespace aplat
