#include "aplat/report.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace aplat {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  EVP_DigestUpdate(ctx, bytes.data(), bytes.size());
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

void atomic_write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot open for writing: " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw UsageError("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string pointset_csv(const QuadPointSet& pts) {
  std::ostringstream os;
  os << "m,n\n";
  for (const auto& p : pts.points()) os << p.m() << "," << p.n() << "\n";
  return os.str();
}

std::string pointset_csv(const PadicPointSet& pts) {
  std::ostringstream os;
  os << "a,k\n";
  for (const auto& p : pts.points()) os << p.a() << "," << p.k() << "\n";
  return os.str();
}

std::string density_csv(const DensityTrace& t) {
  std::ostringstream os;
  os << "scale_label,count,measure_num,measure_den,ratio_decimal\n";
  for (const auto& r : t.rows) {
    os << r.scale_label << "," << r.count << "," << numerator(r.measure)
       << "," << denominator(r.measure) << "," << decimal_string(r.ratio, 12)
       << "\n";
  }
  return os.str();
}

namespace {

std::string coord_label(const QuadInt& x) {
  return x.m().str() + ":" + x.n().str();
}
std::string coord_label(const PadicRat& x) {
  return x.a().str() + ":" + std::to_string(x.k());
}

template <class Point>
std::string gap_csv_impl(const GapSetReport<Point>& rep) {
  std::ostringstream os;
  os << "lambda_coords,base_count,inner_measure_num,inner_measure_den\n";
  for (const auto& row : rep.rows) {
    os << coord_label(row.lambda) << "," << row.base_count() << ","
       << numerator(rep.inner_measure) << "," << denominator(rep.inner_measure)
       << "\n";
  }
  return os.str();
}

}  // namespace

std::string gap_csv(const GapSetReport<QuadInt>& rep) {
  return gap_csv_impl(rep);
}
std::string gap_csv(const GapSetReport<PadicRat>& rep) {
  return gap_csv_impl(rep);
}

std::string synd_csv(const std::vector<SyndRow>& rows) {
  std::ostringstream os;
  os << "scale,covering_radius,K_size\n";
  for (const auto& r : rows)
    os << r.scale_label << "," << r.covering_radius << "," << r.K_size << "\n";
  return os.str();
}

namespace {

long long to_int64(const BigInt& x, const char* what) {
  if (x > std::numeric_limits<long long>::max() ||
      x < std::numeric_limits<long long>::min())
    throw CapacityError(std::string(what) + ": coordinate exceeds int64 range");
  return x.convert_to<long long>();
}

Json rational_json(const Rational& r) {
  return Json{{"num", numerator(r).str()},
              {"den", denominator(r).str()},
              {"decimal", decimal_string(r, 12)}};
}

}  // namespace

Json coords_json(const QuadInt& x) {
  return Json::array({to_int64(x.m(), "coords"), to_int64(x.n(), "coords")});
}

Json coords_json(const PadicRat& x) {
  return Json::array(
      {to_int64(x.a(), "coords"), static_cast<long long>(x.k())});
}

Json axioms_json(const QuadScheme& s, const QuadAxiomReport& r) {
  Json j;
  j["scheme"] = {{"kind", "quad"},
                 {"D", s.D},
                 {"w", rational_string(s.w)},
                 {"window", s.window_closed ? "closed" : "open"}};
  j["symmetric"] = r.symmetric;
  if (r.asym_witness) j["asym_witness"] = coords_json(*r.asym_witness);
  j["contains_zero"] = r.contains_zero;
  if (r.gap_stats_valid) {
    j["min_gap"] = {{"diff", coords_json(r.min_gap_diff)},
                    {"lower_bound", rational_json(r.min_gap_lb)}};
    j["covering_radius"] = {{"diff", coords_json(r.max_gap_diff)},
                            {"upper_bound", rational_json(r.covering_radius_ub)}};
  }
  Json corr = Json::array();
  for (const auto& f : r.correction_set) corr.push_back(coords_json(f));
  j["correction_set"] = corr;
  j["sum_count"] = r.sum_count;
  j["uncovered_sums"] = r.uncovered_sums;
  j["mult_closed_violations"] = r.mult_closed_violations;
  j["mult_pairs_checked"] = r.mult_pairs_checked;
  return j;
}

Json axioms_json(const PadicScheme& s, const PadicAxiomReport& r) {
  Json j;
  j["scheme"] = {{"kind", "padic"},
                 {"p", s.p},
                 {"w", rational_string(s.w)},
                 {"window", s.window_closed ? "closed" : "open"}};
  j["symmetric"] = r.symmetric;
  if (r.asym_witness) j["asym_witness"] = coords_json(*r.asym_witness);
  j["contains_zero"] = r.contains_zero;
  if (r.gap_stats_valid) {
    j["max_diff_valuation"] = r.max_diff_valuation;
    j["separation_level"] = r.separation_level;
    j["covering_level"] = r.covering_level;
  }
  Json corr = Json::array();
  for (const auto& f : r.correction_set) corr.push_back(coords_json(f));
  j["correction_set"] = corr;
  j["sum_count"] = r.sum_count;
  j["uncovered_sums"] = r.uncovered_sums;
  j["mult_closed_violations"] = r.mult_closed_violations;
  j["mult_pairs_checked"] = r.mult_pairs_checked;
  return j;
}

Json banach_json(const BanachResult& r) {
  Json j;
  j["best_count"] = r.best_count;
  j["measure"] = rational_json(r.measure);
  j["empirical_dstar"] = rational_json(r.ratio);
  j["window"] = r.window_desc;
  j["note"] = "finite surrogate: maximum over tested translates only";
  return j;
}

namespace {

template <class Point, class Radius>
Json patches_json_impl(const PatchStats<Point>& st, const Radius& radius) {
  Json j;
  j["radius"] = radius;
  j["total_centers"] = st.total_centers;
  j["distinct_patch_count"] = st.patches.size();
  Json arr = Json::array();
  for (const auto& p : st.patches) {
    Json key = Json::array();
    for (const auto& x : p.key) key.push_back(coords_json(x));
    arr.push_back(Json{{"key", key}, {"count", p.count}});
  }
  j["patches"] = arr;
  return j;
}

}  // namespace

Json patches_json(const PatchStats<QuadInt>& st, const Rational& rho) {
  return patches_json_impl(st, rational_string(rho));
}

Json patches_json(const PatchStats<PadicRat>& st, long long rho_level) {
  return patches_json_impl(st, rho_level);
}

Json separation_json(const QuadSeparationResult& r) {
  Json j;
  j["ok"] = r.ok;
  j["v_radius"] = rational_string(r.v_radius);
  j["mu_min_witness"] = coords_json(r.mu_min_witness);
  j["max_admissible_radius_lb"] = rational_json(r.mu_min_lb);
  j["max_admissible_radius_ub"] = rational_json(r.mu_min_ub);
  j["norm_lower_bound"] = rational_json(r.norm_lower_bound);
  return j;
}

Json separation_json(const PadicSeparationResult& r) {
  Json j;
  j["ok"] = r.ok;
  j["v_level"] = r.v_level;
  j["max_valuation"] = r.max_valuation;
  j["min_admissible_level"] = r.min_admissible_level;
  j["witness"] = r.witness.str();
  return j;
}

Json ip_json(const std::optional<IpSearchHit>& hit, const QuadInt& delta,
             unsigned n) {
  Json j;
  j["delta"] = coords_json(delta);
  j["n"] = n;
  if (hit) {
    j["found"] = true;
    j["j"] = hit->j;
    j["p0"] = coords_json(hit->p0);
    j["verified"] = hit->verified;
  } else {
    j["found"] = false;
    j["scale_note"] =
        "no hit at this finite scale; not a refutation of the asymptotic "
        "statement";
  }
  return j;
}

}  // namespace aplat
