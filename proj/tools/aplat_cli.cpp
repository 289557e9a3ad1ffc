// aplat: exact cut-and-project approximate-lattice toolkit.
//
// Subcommands map one-to-one onto library operations; every run writes
// deterministic report files plus a manifest with SHA-256 checksums.
// Exit codes: 0 success, 2 precondition/usage error, 3 capacity error.

#include <omp.h>

#include <chrono>
#include <iostream>
#include <limits>

#include "CLI11.hpp"
#include "aplat/config.hpp"
#include "aplat/reference.hpp"
#include "aplat/report.hpp"

using namespace aplat;

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_dir = "out";
  int workers = 0;  // 0 = available parallelism
  bool recheck = false;
  long long cap = kDefaultPointCap;
};

struct Emitter {
  std::string out_dir;
  Json outputs = Json::array();

  void write(const std::string& name, const std::string& content) {
    atomic_write_file(out_dir + "/" + name, content);
    outputs.push_back(Json{{"file", name}, {"sha256", sha256_hex(content)}});
  }
};

struct QuadBundle {
  QuadScheme scheme;
  QuadRegion region;
  QuadPointSet lambda_full;  // Lambda cap region
  QuadPointSet p_o;          // subset of interest
};

struct PadicBundle {
  PadicScheme scheme;
  PadicRegion region;
  PadicPointSet lambda_full;
  PadicPointSet p_o;
};

SubsetSpec subset_spec(const RunConfig& cfg) {
  SubsetSpec spec = cfg.subset;
  if (spec.kind == SubsetSpec::Kind::Bernoulli && !cfg.subset_seed)
    throw UsageError("config: [subset] seed is mandatory for bernoulli");
  return spec;
}

QuadBundle make_quad(const RunConfig& cfg, long long cap) {
  QuadScheme s = cfg.quad_scheme();
  QuadRegion r = cfg.quad_region();
  EnumerateOptions opt{cap};
  QuadPointSet full = enumerate(s, r, opt);
  QuadPointSet p_o = subset_generate(s, full, subset_spec(cfg));
  return {s, r, std::move(full), std::move(p_o)};
}

PadicBundle make_padic(const RunConfig& cfg, long long cap) {
  PadicScheme s = cfg.padic_scheme();
  PadicRegion r = cfg.padic_region();
  EnumerateOptions opt{cap};
  PadicPointSet full = enumerate(s, r, opt);
  PadicPointSet p_o = subset_generate(s, full, subset_spec(cfg));
  return {s, r, std::move(full), std::move(p_o)};
}

// Certified upper bound on the largest |f| of a dilation query, or r /
// the endo scale for the other modes; drives the auto lambda bound.
Rational query_growth_bound(const RunConfig& cfg, const QuadScheme& s) {
  Rational g = 1;
  if (cfg.query_mode == "dilation" || cfg.query_mode.empty()) {
    for (const auto& [m, n] : cfg.F) {
      Rational b = abs_value_upper(QuadInt(m, n, s.D));
      if (b > g) g = b;
    }
  }
  if (cfg.r > 0 && Rational(cfg.r) > g) g = Rational(cfg.r);
  for (const auto& e : cfg.endo_specs) {
    if (e.rfind("scale:", 0) == 0) {
      long long k = std::stoll(e.substr(6));
      if (Rational(std::abs(k)) > g) g = Rational(std::abs(k));
    } else if (e.rfind("mult:", 0) == 0) {
      auto comma = e.find(',', 5);
      QuadInt c(BigInt(e.substr(5, comma - 5)), BigInt(e.substr(comma + 1)),
                s.D);
      Rational b = abs_value_upper(c);
      if (b > g) g = b;
    }
  }
  return g;
}

Rational auto_lambda_T(const RunConfig& cfg, const QuadScheme& s,
                       const Rational& T) {
  if (cfg.lambda_T) return *cfg.lambda_T;
  return T / (Rational(4) * query_growth_bound(cfg, s));
}

Rational auto_inner_T(const RunConfig& cfg, const Rational& T) {
  if (cfg.margin) {
    if (*cfg.margin <= 0 || *cfg.margin >= T)
      throw UsageError("config: margin must lie in (0, T)");
    return T - *cfg.margin;
  }
  return T / 2;
}

std::vector<QuadInt> lambda_window(const QuadPointSet& full,
                                   const Rational& bound) {
  std::vector<QuadInt> out;
  for (const auto& l : full.points())
    if (quad_abs_leq(l, bound)) out.push_back(l);
  return out;
}

std::vector<PadicRat> lambda_window(const PadicPointSet& full,
                                    const PadicScheme& s, unsigned level) {
  std::vector<PadicRat> out;
  PadicRegion r(level);
  for (const auto& l : full.points())
    if (in_region(s, r, l)) out.push_back(l);
  return out;
}

QuadQuery build_quad_query(const RunConfig& cfg, const QuadScheme& s) {
  QuadQuery q;
  if (cfg.query_mode == "integer_multiples") {
    q.r = cfg.r;
  } else {
    for (const auto& [m, n] : cfg.F) q.F.push_back(QuadInt(m, n, s.D));
  }
  q.validate();
  return q;
}

PadicQuery build_padic_query(const RunConfig& cfg, const PadicScheme& s) {
  PadicQuery q;
  if (cfg.query_mode == "integer_multiples") {
    q.r = cfg.r;
  } else {
    for (const auto& [a, k] : cfg.F) {
      if (k < 0 || k > 64) throw UsageError("config: F tuple k out of range");
      q.F.push_back(PadicRat(a, k.convert_to<unsigned>(), s.p));
    }
  }
  q.validate();
  return q;
}

std::vector<Endo<QuadInt>> build_quad_endos(const RunConfig& cfg,
                                            const QuadScheme& s) {
  std::vector<Endo<QuadInt>> endos;
  for (const auto& e : cfg.endo_specs) {
    if (e.rfind("scale:", 0) == 0) {
      endos.push_back({Endo<QuadInt>::Kind::IntScale, s.zero(),
                       std::stoll(e.substr(6))});
    } else if (e.rfind("mult:", 0) == 0) {
      auto comma = e.find(',', 5);
      if (comma == std::string::npos)
        throw UsageError("config: endo mult needs 'mult:m,n'");
      endos.push_back({Endo<QuadInt>::Kind::MultBy,
                       QuadInt(BigInt(e.substr(5, comma - 5)),
                               BigInt(e.substr(comma + 1)), s.D),
                       0});
    } else {
      throw UsageError("config: endo must be 'scale:k' or 'mult:m,n'");
    }
  }
  if (endos.empty()) throw UsageError("config: [query] endos required");
  return endos;
}

std::vector<Endo<PadicRat>> build_padic_endos(const RunConfig& cfg,
                                              const PadicScheme& s) {
  std::vector<Endo<PadicRat>> endos;
  for (const auto& e : cfg.endo_specs) {
    if (e.rfind("scale:", 0) == 0) {
      endos.push_back({Endo<PadicRat>::Kind::IntScale, s.zero(),
                       std::stoll(e.substr(6))});
    } else if (e.rfind("mult:", 0) == 0) {
      auto comma = e.find(',', 5);
      if (comma == std::string::npos)
        throw UsageError("config: endo mult needs 'mult:a,k'");
      BigInt a(e.substr(5, comma - 5));
      long long k = std::stoll(e.substr(comma + 1));
      if (k < 0) throw UsageError("config: endo k must be >= 0");
      endos.push_back({Endo<PadicRat>::Kind::MultBy,
                       PadicRat(a, static_cast<unsigned>(k), s.p), 0});
    } else {
      throw UsageError("config: endo must be 'scale:k' or 'mult:a,k'");
    }
  }
  if (endos.empty()) throw UsageError("config: [query] endos required");
  return endos;
}

template <class Point, class Query>
void maybe_recheck(bool enabled, const std::vector<Point>& base_points,
                   const GapSetReport<Point>& rep, const Query& query,
                   Json& manifest) {
  if (!enabled) return;
  long long failures = ref::recheck_witnesses<Point>(
      base_points, rep.rows,
      [&](const Point& l) { return query.displacements(l); });
  manifest["recheck"] = Json{{"failures", failures}};
  if (failures != 0)
    throw std::runtime_error("recheck: " + std::to_string(failures) +
                             " witnesses failed direct membership");
}

// scan kind: 0 gapset, 1 apscan, 2 multirec
template <class Bundle, class Scheme>
void run_scan_quad(const RunConfig& cfg, const Bundle& b, int kind,
                   bool recheck, Emitter& em, Json& manifest) {
  Rational inner_T = auto_inner_T(cfg, b.region.T);
  Rational lam_T = auto_lambda_T(cfg, b.scheme, b.region.T);
  QuadScanContext ctx{b.scheme, b.region, b.p_o, inner_T};
  auto lambdas = lambda_window(b.lambda_full, lam_T);
  GapSetReport<QuadInt> rep;
  if (kind == 2) {
    auto endos = build_quad_endos(cfg, b.scheme);
    if (cfg.q < 1) throw UsageError("config: [query] q required for multirec");
    rep = multi_recurrence_scan(ctx, lambdas, endos, cfg.q);
    if (recheck) {
      long long failures = ref::recheck_witnesses<QuadInt>(
          b.p_o.points(), rep.rows, [&](const QuadInt& l) {
            std::vector<QuadInt> d;
            for (const auto& e : endos) d.push_back(e.apply(l));
            return d;
          });
      manifest["recheck"] = Json{{"failures", failures}};
      if (failures != 0) throw std::runtime_error("recheck failed");
    }
  } else {
    QuadQuery q = kind == 1 ? QuadQuery{{}, cfg.r} : build_quad_query(cfg, b.scheme);
    if (kind == 1 && cfg.r < 1)
      throw UsageError("config: [query] r required for apscan");
    rep = gap_set(ctx, lambdas, q);
    maybe_recheck(recheck, b.p_o.points(), rep, q, manifest);
  }
  em.write(kind == 0 ? "gapset.csv" : (kind == 1 ? "apscan.csv" : "multirec.csv"),
           gap_csv(rep));
  manifest["lambda_count"] = rep.rows.size();
  manifest["nonempty"] = !rep.empty_set;
  if (rep.empirical_c)
    manifest["empirical_c"] = rational_string(*rep.empirical_c);
}

// Displacements lambda*f sink v_p(f) levels below lambda, so the default
// lambda ball shrinks by the deepest query element.
unsigned padic_auto_lambda_level(const RunConfig& cfg, const PadicScheme& s,
                                 unsigned region_level) {
  long long depth = 0;
  if (cfg.query_mode != "integer_multiples") {
    for (const auto& [a, k] : cfg.F) {
      PadicRat f(a, k.convert_to<unsigned>(), s.p);
      auto v = f.padic_val();
      if (v && *v < depth) depth = *v;
    }
  }
  for (const auto& e : cfg.endo_specs) {
    if (e.rfind("mult:", 0) == 0) {
      auto comma = e.find(',', 5);
      PadicRat c(BigInt(e.substr(5, comma - 5)),
                 static_cast<unsigned>(std::stoll(e.substr(comma + 1))), s.p);
      auto v = c.padic_val();
      if (v && *v < depth) depth = *v;
    }
  }
  long long lvl = static_cast<long long>(region_level) + depth;
  if (lvl < 0)
    throw UsageError("scan: query displacements deeper than the region ball");
  return static_cast<unsigned>(lvl);
}

template <class Bundle>
void run_scan_padic(const RunConfig& cfg, const Bundle& b, int kind,
                    bool recheck, Emitter& em, Json& manifest) {
  PadicScanContext ctx{b.scheme, b.region, b.p_o};
  unsigned lam_level =
      cfg.lambda_level ? *cfg.lambda_level
                       : padic_auto_lambda_level(cfg, b.scheme, b.region.level);
  auto lambdas = lambda_window(b.lambda_full, b.scheme, lam_level);
  GapSetReport<PadicRat> rep;
  if (kind == 2) {
    auto endos = build_padic_endos(cfg, b.scheme);
    if (cfg.q < 1) throw UsageError("config: [query] q required for multirec");
    rep = multi_recurrence_scan(ctx, lambdas, endos, cfg.q);
    if (recheck) {
      long long failures = ref::recheck_witnesses<PadicRat>(
          b.p_o.points(), rep.rows, [&](const PadicRat& l) {
            std::vector<PadicRat> d;
            for (const auto& e : endos) d.push_back(e.apply(l));
            return d;
          });
      manifest["recheck"] = Json{{"failures", failures}};
      if (failures != 0) throw std::runtime_error("recheck failed");
    }
  } else {
    PadicQuery q =
        kind == 1 ? PadicQuery{{}, cfg.r} : build_padic_query(cfg, b.scheme);
    if (kind == 1 && cfg.r < 1)
      throw UsageError("config: [query] r required for apscan");
    rep = gap_set(ctx, lambdas, q);
    maybe_recheck(recheck, b.p_o.points(), rep, q, manifest);
  }
  em.write(kind == 0 ? "gapset.csv" : (kind == 1 ? "apscan.csv" : "multirec.csv"),
           gap_csv(rep));
  manifest["lambda_count"] = rep.rows.size();
  manifest["nonempty"] = !rep.empty_set;
  if (rep.empirical_c)
    manifest["empirical_c"] = rational_string(*rep.empirical_c);
}

int run_command(const std::string& cmd, const CommonOpts& opts) {
  RunConfig cfg = parse_config_file(opts.config_path);
  if (opts.workers > 0) omp_set_num_threads(opts.workers);

  Emitter em{opts.out_dir};
  Json manifest;
  manifest["version"] = "0.1.0";
  manifest["command"] = cmd;
  manifest["config_sha256"] = sha256_hex(cfg.raw);
  manifest["seed"] = cfg.seed;
  if (cfg.subset_seed) manifest["subset_seed"] = *cfg.subset_seed;
  manifest["workers"] = opts.workers > 0 ? opts.workers : omp_get_max_threads();

  auto t0 = std::chrono::steady_clock::now();

  if (cmd == "generate") {
    if (cfg.is_quad()) {
      auto b = make_quad(cfg, opts.cap);
      em.write("points.csv", pointset_csv(b.p_o));
      manifest["point_count"] = b.p_o.size();
    } else {
      auto b = make_padic(cfg, opts.cap);
      em.write("points.csv", pointset_csv(b.p_o));
      manifest["point_count"] = b.p_o.size();
    }
  } else if (cmd == "axioms") {
    if (cfg.is_quad()) {
      auto b = make_quad(cfg, opts.cap);
      Rational margin = cfg.margin ? *cfg.margin
                                   : axioms_auto_margin(b.scheme, b.p_o);
      auto rep = verify_axioms(b.scheme, b.region, b.p_o, margin, opts.cap);
      em.write("axioms.json", axioms_json(b.scheme, rep).dump(2) + "\n");
    } else {
      auto b = make_padic(cfg, opts.cap);
      auto rep = verify_axioms(b.scheme, b.region, b.p_o, opts.cap);
      em.write("axioms.json", axioms_json(b.scheme, rep).dump(2) + "\n");
    }
  } else if (cmd == "density") {
    if (cfg.is_quad()) {
      QuadScheme s = cfg.quad_scheme();
      QuadFolner f;
      f.scales = cfg.scales;
      for (const auto& [m, n] : cfg.folner_translates)
        f.translates.push_back(QuadInt(m, n, s.D));
      f.thickening = cfg.thickening;
      SubsetSpec spec = subset_spec(cfg);
      EnumerateOptions eopt{opts.cap};
      auto trace = upper_density(f, [&](const QuadRegion& r) {
        return subset_generate(s, enumerate(s, r, eopt), spec);
      });
      em.write("density.csv", density_csv(trace));
      manifest["limsup_estimate"] = rational_string(trace.limsup_estimate);
    } else {
      PadicScheme s = cfg.padic_scheme();
      PadicFolner f;
      f.p = s.p;
      f.levels = cfg.levels;
      for (const auto& [a, k] : cfg.folner_translates) {
        if (k < 0 || k > 64) throw UsageError("config: translate k out of range");
        f.translates.push_back(PadicRat(a, k.convert_to<unsigned>(), s.p));
      }
      SubsetSpec spec = subset_spec(cfg);
      EnumerateOptions eopt{opts.cap};
      auto trace = upper_density(f, [&](const PadicRegion& r) {
        return subset_generate(s, enumerate(s, r, eopt), spec);
      });
      em.write("density.csv", density_csv(trace));
      manifest["limsup_estimate"] = rational_string(trace.limsup_estimate);
    }
  } else if (cmd == "banach") {
    if (cfg.is_quad()) {
      auto b = make_quad(cfg, opts.cap);
      if (!cfg.window_extent)
        throw UsageError("config: [density] t required for banach");
      auto res = banach_density_emp(b.scheme, b.region, b.p_o,
                                    *cfg.window_extent);
      em.write("banach.json", banach_json(res).dump(2) + "\n");
    } else {
      auto b = make_padic(cfg, opts.cap);
      if (!cfg.ball_level)
        throw UsageError("config: [density] ball_level required for banach");
      auto res = banach_density_emp(b.scheme, b.region, b.p_o, *cfg.ball_level);
      em.write("banach.json", banach_json(res).dump(2) + "\n");
    }
  } else if (cmd == "gapset" || cmd == "apscan" || cmd == "multirec") {
    int kind = cmd == "gapset" ? 0 : (cmd == "apscan" ? 1 : 2);
    if (cfg.is_quad()) {
      auto b = make_quad(cfg, opts.cap);
      run_scan_quad<QuadBundle, QuadScheme>(cfg, b, kind, opts.recheck, em,
                                            manifest);
    } else {
      auto b = make_padic(cfg, opts.cap);
      run_scan_padic(cfg, b, kind, opts.recheck, em, manifest);
    }
  } else if (cmd == "synd") {
    std::vector<SyndRow> rows;
    if (cfg.is_quad()) {
      QuadScheme s = cfg.quad_scheme();
      if (cfg.scales.empty())
        throw UsageError("config: [folner] scales required for synd");
      SubsetSpec spec = subset_spec(cfg);
      EnumerateOptions eopt{opts.cap};
      for (const auto& T : cfg.scales) {
        QuadRegion region(T);
        auto full = enumerate(s, region, eopt);
        auto p_o = subset_generate(s, full, spec);
        RunConfig scaled = cfg;
        scaled.lambda_T.reset();  // scale-proportional lambda window
        Rational inner_T = auto_inner_T(scaled, T);
        Rational lam_T = cfg.lambda_T ? *cfg.lambda_T
                                      : auto_lambda_T(scaled, s, T);
        QuadScanContext ctx{s, region, p_o, inner_T};
        auto lambdas = lambda_window(full, lam_T);
        GapSetReport<QuadInt> rep;
        if (cfg.query_mode == "integer_multiples") {
          rep = ap_scan(ctx, lambdas, cfg.r);
        } else {
          rep = gap_set(ctx, lambdas, build_quad_query(cfg, s));
        }
        auto S = QuadPointSet::from_points(rep.gap_points());
        QuadScanContext lam_ctx{s, region, full, lam_T};
        auto synd = syndeticity(lam_ctx, S);
        SyndRow row;
        row.scale_label = "T=" + rational_string(T);
        row.covering_radius =
            synd.infinite ? "inf"
                          : rational_string(synd.covering_radius_ub);
        row.K_size = synd.K.size();
        rows.push_back(row);
      }
    } else {
      PadicScheme s = cfg.padic_scheme();
      if (cfg.levels.empty())
        throw UsageError("config: [folner] levels required for synd");
      SubsetSpec spec = subset_spec(cfg);
      EnumerateOptions eopt{opts.cap};
      for (unsigned lvl : cfg.levels) {
        PadicRegion region(lvl);
        auto full = enumerate(s, region, eopt);
        auto p_o = subset_generate(s, full, spec);
        PadicScanContext ctx{s, region, p_o};
        unsigned lam_level = cfg.lambda_level
                                 ? *cfg.lambda_level
                                 : padic_auto_lambda_level(cfg, s, lvl);
        auto lambdas = lambda_window(full, s, lam_level);
        GapSetReport<PadicRat> rep;
        if (cfg.query_mode == "integer_multiples") {
          rep = ap_scan(ctx, lambdas, cfg.r);
        } else {
          rep = gap_set(ctx, lambdas, build_padic_query(cfg, s));
        }
        auto S = PadicPointSet::from_points(rep.gap_points());
        auto synd = syndeticity(ctx, S);
        SyndRow row;
        row.scale_label = "n=" + std::to_string(lvl);
        if (synd.infinite) {
          row.covering_radius = "inf";
        } else if (synd.covering_level ==
                   std::numeric_limits<long long>::max()) {
          row.covering_radius = "level:inf";  // every gap hit exactly
        } else {
          row.covering_radius = "level:" + std::to_string(synd.covering_level);
        }
        row.K_size = synd.K.size();
        rows.push_back(row);
      }
    }
    em.write("synd.csv", synd_csv(rows));
  } else if (cmd == "patches") {
    if (cfg.is_quad()) {
      auto b = make_quad(cfg, opts.cap);
      if (!cfg.rho) throw UsageError("config: [transversal] rho required");
      Rational margin = cfg.margin ? *cfg.margin : *cfg.rho;
      auto stats = patch_census(b.scheme, b.region, b.p_o, *cfg.rho, margin);
      em.write("patches.json", patches_json(stats, *cfg.rho).dump(2) + "\n");
      manifest["distinct_patch_count"] = stats.distinct_patch_count();
    } else {
      auto b = make_padic(cfg, opts.cap);
      if (!cfg.rho_level)
        throw UsageError("config: [transversal] rho_level required");
      auto stats = patch_census(b.scheme, b.region, b.p_o, *cfg.rho_level);
      em.write("patches.json",
               patches_json(stats, *cfg.rho_level).dump(2) + "\n");
      manifest["distinct_patch_count"] = stats.distinct_patch_count();
    }
  } else if (cmd == "separation") {
    unsigned q = cfg.q >= 1 ? cfg.q : 1;
    if (cfg.is_quad()) {
      QuadScheme s = cfg.quad_scheme();
      Rational radius = cfg.sep_radius ? *cfg.sep_radius : Rational(0);
      auto res = separation_check(s, q, radius, opts.cap);
      em.write("separation.json", separation_json(res).dump(2) + "\n");
    } else {
      PadicScheme s = cfg.padic_scheme();
      long long lvl = cfg.sep_level ? *cfg.sep_level : 1;
      auto res = separation_check(s, q, lvl);
      em.write("separation.json", separation_json(res).dump(2) + "\n");
    }
  } else if (cmd == "ip") {
    if (!cfg.is_quad())
      throw UsageError("ip: quadratic schemes only (appendix construction)");
    auto b = make_quad(cfg, opts.cap);
    if (!cfg.delta) throw UsageError("config: [query] delta required for ip");
    if (cfg.ip_n < 1) throw UsageError("config: [query] n required for ip");
    if (cfg.F.empty()) throw UsageError("config: [query] F required for ip");
    QuadInt delta(cfg.delta->first, cfg.delta->second, b.scheme.D);
    std::vector<QuadInt> F;
    for (const auto& [m, n] : cfg.F) F.push_back(QuadInt(m, n, b.scheme.D));
    Rational inner_T = auto_inner_T(cfg, b.region.T);
    QuadScanContext ctx{b.scheme, b.region, b.p_o, inner_T};
    auto hit = ip_pattern_search(ctx, b.scheme, delta, F, cfg.ip_n);
    em.write("ip.json", ip_json(hit, delta, cfg.ip_n).dump(2) + "\n");
    if (hit && !hit->verified)
      throw std::runtime_error("ip: hit failed the membership recheck");
  } else {
    throw UsageError("unknown command " + cmd);
  }

  auto t1 = std::chrono::steady_clock::now();
  manifest["wall_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  manifest["outputs"] = em.outputs;
  atomic_write_file(opts.out_dir + "/manifest.json",
                    manifest.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cut-and-project approximate-lattice toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::vector<std::string> names = {"generate", "axioms",     "density",
                                    "banach",   "gapset",     "apscan",
                                    "multirec", "synd",       "patches",
                                    "separation", "ip"};
  std::vector<CLI::App*> subs;
  for (const auto& n : names) {
    auto* sub = app.add_subcommand(n);
    sub->add_option("--config", opts.config_path, "config file path")
        ->required();
    sub->add_option("--out", opts.out_dir, "output directory");
    sub->add_option("--workers", opts.workers, "worker thread count");
    sub->add_flag("--recheck", opts.recheck,
                  "re-verify every reported witness by direct membership");
    sub->add_option("--cap", opts.cap, "point-count capacity guard");
    subs.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);

  std::string cmd;
  for (size_t i = 0; i < names.size(); ++i)
    if (subs[i]->parsed()) cmd = names[i];

  try {
    return run_command(cmd, opts);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
