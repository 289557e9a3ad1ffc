#include "aplat/config.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace aplat {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw UsageError("config line " + std::to_string(line) + ": " + msg);
}

long long parse_ll(const std::string& v, int line) {
  try {
    size_t pos = 0;
    long long x = std::stoll(v, &pos);
    if (pos != v.size()) fail(line, "not an integer: " + v);
    return x;
  } catch (const std::exception&) {
    fail(line, "not an integer: " + v);
  }
}

uint64_t parse_u64(const std::string& v, int line) {
  try {
    size_t pos = 0;
    uint64_t x = std::stoull(v, &pos);
    if (pos != v.size()) fail(line, "not an unsigned integer: " + v);
    return x;
  } catch (const std::exception&) {
    fail(line, "not an unsigned integer: " + v);
  }
}

Rational parse_rat(const std::string& v, int line) {
  if (v.find('.') != std::string::npos)
    fail(line, "decimals are not exact; use a/b: " + v);
  try {
    return parse_rational(v);
  } catch (const UsageError& e) {
    fail(line, e.what());
  }
}

std::pair<BigInt, BigInt> parse_tuple(const std::string& v, int line) {
  auto comma = v.find(',');
  if (comma == std::string::npos)
    fail(line, "expected coordinate tuple 'x,y': " + v);
  try {
    return {BigInt(trim(v.substr(0, comma))), BigInt(trim(v.substr(comma + 1)))};
  } catch (const std::exception&) {
    fail(line, "bad coordinate tuple: " + v);
  }
}

std::vector<std::string> split(const std::string& v, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

RunConfig parse_config(std::istream& in) {
  RunConfig c;
  std::ostringstream raw;
  std::string line;
  std::string section;
  int lineno = 0;

  auto parse_kv = [&](const std::string& key, const std::string& val) {
    if (section == "scheme") {
      if (key == "kind") {
        if (val != "quad" && val != "padic")
          fail(lineno, "kind must be quad or padic");
        c.scheme_kind = val;
      } else if (key == "D") {
        c.D = parse_ll(val, lineno);
      } else if (key == "p") {
        c.p = parse_ll(val, lineno);
      } else if (key == "w") {
        c.w = parse_rat(val, lineno);
      } else if (key == "window") {
        if (val == "closed") c.window_closed = true;
        else if (val == "open") c.window_closed = false;
        else fail(lineno, "window must be closed or open");
      } else {
        fail(lineno, "unknown key [scheme] " + key);
      }
    } else if (section == "region") {
      if (key == "T") c.T = parse_rat(val, lineno);
      else if (key == "level") c.level = (unsigned)parse_ll(val, lineno);
      else if (key == "translate") c.translate = parse_tuple(val, lineno);
      else if (key == "margin") {
        if (val != "auto") c.margin = parse_rat(val, lineno);
      } else if (key == "lambda_T") c.lambda_T = parse_rat(val, lineno);
      else if (key == "lambda_level")
        c.lambda_level = (unsigned)parse_ll(val, lineno);
      else fail(lineno, "unknown key [region] " + key);
    } else if (section == "subset") {
      if (key == "kind") {
        if (val == "full") c.subset.kind = SubsetSpec::Kind::Full;
        else if (val == "bernoulli") c.subset.kind = SubsetSpec::Kind::Bernoulli;
        else if (val == "subwindow") c.subset.kind = SubsetSpec::Kind::Subwindow;
        else if (val == "congruence")
          c.subset.kind = SubsetSpec::Kind::Congruence;
        else fail(lineno, "unknown subset kind " + val);
      } else if (key == "theta") c.subset.theta = parse_rat(val, lineno);
      else if (key == "seed") {
        c.subset.seed = parse_u64(val, lineno);
        c.subset_seed = c.subset.seed;
      }
      else if (key == "wprime") c.subset.w_prime = parse_rat(val, lineno);
      else if (key == "strict") {
        if (val == "true") c.subset.subwindow_strict = true;
        else if (val == "false") c.subset.subwindow_strict = false;
        else fail(lineno, "strict must be true or false");
      } else if (key == "modulus") c.subset.modulus = parse_ll(val, lineno);
      else if (key == "residues") {
        for (const auto& r : split(val, ';'))
          c.subset.residues.push_back(parse_ll(r, lineno));
      } else fail(lineno, "unknown key [subset] " + key);
    } else if (section == "query") {
      if (key == "mode") {
        if (val != "dilation" && val != "integer_multiples")
          fail(lineno, "mode must be dilation or integer_multiples");
        c.query_mode = val;
      } else if (key == "F") {
        for (const auto& t : split(val, ';'))
          c.F.push_back(parse_tuple(t, lineno));
      } else if (key == "r") c.r = (unsigned)parse_ll(val, lineno);
      else if (key == "q") c.q = (unsigned)parse_ll(val, lineno);
      else if (key == "endos") {
        for (const auto& e : split(val, ';')) c.endo_specs.push_back(e);
      } else if (key == "delta") c.delta = parse_tuple(val, lineno);
      else if (key == "n") c.ip_n = (unsigned)parse_ll(val, lineno);
      else fail(lineno, "unknown key [query] " + key);
    } else if (section == "folner") {
      if (key == "scales") {
        for (const auto& t : split(val, ';'))
          c.scales.push_back(parse_rat(t, lineno));
      } else if (key == "levels") {
        for (const auto& t : split(val, ';'))
          c.levels.push_back((unsigned)parse_ll(t, lineno));
      } else if (key == "translates") {
        for (const auto& t : split(val, ';'))
          c.folner_translates.push_back(parse_tuple(t, lineno));
      } else if (key == "thickening") c.thickening = parse_rat(val, lineno);
      else fail(lineno, "unknown key [folner] " + key);
    } else if (section == "density") {
      if (key == "t") c.window_extent = parse_rat(val, lineno);
      else if (key == "ball_level") c.ball_level = parse_ll(val, lineno);
      else if (key == "vgap") c.v_gap = parse_rat(val, lineno);
      else if (key == "vlevel") c.v_level = parse_ll(val, lineno);
      else if (key == "samples") c.samples = (int)parse_ll(val, lineno);
      else fail(lineno, "unknown key [density] " + key);
    } else if (section == "transversal") {
      if (key == "rho") c.rho = parse_rat(val, lineno);
      else if (key == "rho_level") c.rho_level = parse_ll(val, lineno);
      else if (key == "radius") c.sep_radius = parse_rat(val, lineno);
      else if (key == "vlevel") c.sep_level = parse_ll(val, lineno);
      else if (key == "order") c.diff_order = (unsigned)parse_ll(val, lineno);
      else fail(lineno, "unknown key [transversal] " + key);
    } else if (section == "seed") {
      if (key == "seed") c.seed = parse_u64(val, lineno);
      else fail(lineno, "unknown key [seed] " + key);
    } else {
      fail(lineno, "key outside any known section");
    }
  };

  while (std::getline(in, line)) {
    raw << line << "\n";
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']') fail(lineno, "malformed section header " + t);
      section = t.substr(1, t.size() - 2);
      static const char* known[] = {"scheme", "region", "subset",  "query",
                                    "folner", "density", "transversal", "seed"};
      bool ok = false;
      for (const char* k : known) ok = ok || section == k;
      if (!ok) fail(lineno, "unknown section [" + section + "]");
      continue;
    }
    auto eq = t.find('=');
    if (eq == std::string::npos) fail(lineno, "expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    if (key.empty()) fail(lineno, "empty key");
    parse_kv(key, val);
  }

  if (c.scheme_kind.empty())
    throw UsageError("config: [scheme] kind is required");
  if (c.is_quad() && c.D == 0) throw UsageError("config: [scheme] D required");
  if (!c.is_quad() && c.p == 0) throw UsageError("config: [scheme] p required");
  c.raw = raw.str();
  return c;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file: " + path);
  return parse_config(in);
}

QuadScheme RunConfig::quad_scheme() const {
  if (!is_quad()) throw UsageError("config: not a quadratic scheme");
  return QuadScheme(D, w, window_closed);
}

PadicScheme RunConfig::padic_scheme() const {
  if (is_quad()) throw UsageError("config: not a p-adic scheme");
  return PadicScheme(p, w, window_closed);
}

QuadRegion RunConfig::quad_region() const {
  if (!T) throw UsageError("config: [region] T required for quad scheme");
  QuadRegion r(*T);
  if (translate) r.translate = QuadInt(translate->first, translate->second, D);
  return r;
}

PadicRegion RunConfig::padic_region() const {
  if (!level) throw UsageError("config: [region] level required for padic scheme");
  PadicRegion r(*level);
  if (translate) {
    if (translate->second < 0 ||
        translate->second > std::numeric_limits<unsigned>::max())
      throw UsageError("config: translate k out of range");
    r.translate =
        PadicRat(translate->first, translate->second.convert_to<unsigned>(), p);
  }
  return r;
}

}  // namespace aplat
