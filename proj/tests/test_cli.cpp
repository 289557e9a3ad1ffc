#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

const char* kCli = APLAT_CLI_PATH;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("aplat_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

int run(const std::string& args) {
  std::string cmd = std::string(kCli) + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write(const fs::path& p, const std::string& s) {
  std::ofstream out(p);
  out << s;
}

}  // namespace

TEST_CASE("generate: p-adic count-law CSV with 17 rows") {
  TempDir td;
  write(td.path / "c.cfg",
        "[scheme]\nkind = padic\np = 2\nw = 1\n"
        "[region]\nlevel = 3\n"
        "[subset]\nkind = full\n");
  REQUIRE(run("generate --config " + (td.path / "c.cfg").string() + " --out " +
              (td.path / "out").string()) == 0);
  std::string csv = slurp(td.path / "out" / "points.csv");
  // header + 17 point rows
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 18);
  CHECK(csv.rfind("a,k\n", 0) == 0);
}

TEST_CASE("generate: quadratic T=0 single-row CSV") {
  TempDir td;
  write(td.path / "c.cfg",
        "[scheme]\nkind = quad\nD = 2\nw = 1\n"
        "[region]\nT = 0\n"
        "[subset]\nkind = full\n");
  REQUIRE(run("generate --config " + (td.path / "c.cfg").string() + " --out " +
              (td.path / "out").string()) == 0);
  CHECK(slurp(td.path / "out" / "points.csv") == "m,n\n0,0\n");
}

TEST_CASE("rerun with identical config is byte-identical, any workers") {
  TempDir td;
  write(td.path / "c.cfg",
        "[scheme]\nkind = quad\nD = 2\nw = 1\n"
        "[region]\nT = 200\n"
        "[subset]\nkind = bernoulli\ntheta = 1/2\nseed = 9\n"
        "[query]\nmode = dilation\nF = 1,0 ; 1,1\n");
  std::string cfg = (td.path / "c.cfg").string();
  REQUIRE(run("gapset --config " + cfg + " --out " + (td.path / "o1").string() +
              " --workers 1") == 0);
  REQUIRE(run("gapset --config " + cfg + " --out " + (td.path / "o2").string() +
              " --workers 4") == 0);
  REQUIRE(run("gapset --config " + cfg + " --out " + (td.path / "o3").string()) ==
          0);
  std::string a = slurp(td.path / "o1" / "gapset.csv");
  CHECK(a == slurp(td.path / "o2" / "gapset.csv"));
  CHECK(a == slurp(td.path / "o3" / "gapset.csv"));
  CHECK(a.size() > 100);
}

TEST_CASE("exit code 2 on config errors, with line numbers") {
  TempDir td;
  write(td.path / "bad1.cfg",
        "[scheme]\nkind = quad\nD = 2\nw = 1\nbogus_key = 3\n");
  CHECK(run("generate --config " + (td.path / "bad1.cfg").string() +
            " --out " + (td.path / "o").string()) == 2);
  // decimals rejected: exactness end-to-end
  write(td.path / "bad2.cfg",
        "[scheme]\nkind = quad\nD = 2\nw = 0.5\n[region]\nT = 10\n");
  CHECK(run("generate --config " + (td.path / "bad2.cfg").string() +
            " --out " + (td.path / "o").string()) == 2);
  // D not square-free
  write(td.path / "bad3.cfg",
        "[scheme]\nkind = quad\nD = 8\nw = 1\n[region]\nT = 10\n");
  CHECK(run("generate --config " + (td.path / "bad3.cfg").string() +
            " --out " + (td.path / "o").string()) == 2);
  // bernoulli without a seed
  write(td.path / "bad4.cfg",
        "[scheme]\nkind = quad\nD = 2\nw = 1\n[region]\nT = 10\n"
        "[subset]\nkind = bernoulli\ntheta = 1/2\n");
  CHECK(run("generate --config " + (td.path / "bad4.cfg").string() +
            " --out " + (td.path / "o").string()) == 2);
  // missing config file
  CHECK(run("generate --config " + (td.path / "nope.cfg").string() +
            " --out " + (td.path / "o").string()) == 2);
}

TEST_CASE("exit code 3 on capacity errors, no partial outputs") {
  TempDir td;
  write(td.path / "c.cfg",
        "[scheme]\nkind = quad\nD = 2\nw = 1\n"
        "[region]\nT = 100000\n"
        "[subset]\nkind = full\n");
  CHECK(run("generate --config " + (td.path / "c.cfg").string() + " --out " +
            (td.path / "out").string() + " --cap 1000") == 3);
  CHECK_FALSE(fs::exists(td.path / "out" / "points.csv"));
  CHECK_FALSE(fs::exists(td.path / "out" / "manifest.json"));
}

TEST_CASE("apscan with recheck verifies every witness") {
  TempDir td;
  write(td.path / "c.cfg",
        "[scheme]\nkind = padic\np = 2\nw = 1\n"
        "[region]\nlevel = 8\n"
        "[subset]\nkind = bernoulli\ntheta = 2/3\nseed = 5\n"
        "[query]\nmode = integer_multiples\nr = 3\n");
  REQUIRE(run("apscan --config " + (td.path / "c.cfg").string() + " --out " +
              (td.path / "o").string() + " --recheck") == 0);
  std::string manifest = slurp(td.path / "o" / "manifest.json");
  CHECK(manifest.find("\"failures\": 0") != std::string::npos);
}

TEST_CASE("density on an almost-surely-empty subset is an all-zero trace") {
  TempDir td;
  write(td.path / "c.cfg",
        "[scheme]\nkind = quad\nD = 2\nw = 1\n"
        "[region]\nT = 100\n"
        "[subset]\nkind = bernoulli\ntheta = 1/1000000000000\nseed = 1\n"
        "[folner]\nscales = 20;50;100\n");
  REQUIRE(run("density --config " + (td.path / "c.cfg").string() + " --out " +
              (td.path / "o").string()) == 0);
  std::string csv = slurp(td.path / "o" / "density.csv");
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);  // header
  while (std::getline(is, line)) {
    CHECK(line.find(",0,") != std::string::npos);
    CHECK(line.find("0.000000000000") != std::string::npos);
  }
}

TEST_CASE("ip search command emits verified hits") {
  TempDir td;
  write(td.path / "c.cfg",
        "[scheme]\nkind = quad\nD = 2\nw = 1\n"
        "[region]\nT = 500\n"
        "[subset]\nkind = full\n"
        "[query]\nF = 1,0\ndelta = 3,2\nn = 3\n");
  // delta = 3 + 2 sqrt 2 has |star| = 3 - 2 sqrt 2 ~ 0.17 < 1/3: in Delta_3
  REQUIRE(run("ip --config " + (td.path / "c.cfg").string() + " --out " +
              (td.path / "o").string()) == 0);
  std::string j = slurp(td.path / "o" / "ip.json");
  CHECK(j.find("\"found\": true") != std::string::npos);
  CHECK(j.find("\"verified\": true") != std::string::npos);
}

TEST_CASE("axioms command: quadratic corrections within {-1, 0, 1}") {
  TempDir td;
  write(td.path / "c.cfg",
        "[scheme]\nkind = quad\nD = 2\nw = 1\n"
        "[region]\nT = 300\n"
        "[subset]\nkind = full\n");
  REQUIRE(run("axioms --config " + (td.path / "c.cfg").string() + " --out " +
              (td.path / "o").string()) == 0);
  std::string j = slurp(td.path / "o" / "axioms.json");
  CHECK(j.find("\"symmetric\": true") != std::string::npos);
  CHECK(j.find("\"contains_zero\": true") != std::string::npos);
  CHECK(j.find("\"mult_closed_violations\": 0") != std::string::npos);
  CHECK(j.find("\"uncovered_sums\": 0") != std::string::npos);
  // the correction set holds only integer points with |m| <= 1
  auto pos = j.find("\"correction_set\"");
  auto end = j.find("]", j.find("]", j.find("]", pos) + 1) + 1);
  std::string corr = j.substr(pos, end - pos);
  for (const char* bad : {"2", "3", "4", "5", "6", "7", "8", "9"})
    CHECK(corr.find(bad) == std::string::npos);
}

TEST_CASE("patches command reports the census") {
  TempDir td;
  write(td.path / "c.cfg",
        "[scheme]\nkind = quad\nD = 2\nw = 1\n"
        "[region]\nT = 300\n"
        "[subset]\nkind = full\n"
        "[transversal]\nrho = 4\n");
  REQUIRE(run("patches --config " + (td.path / "c.cfg").string() + " --out " +
              (td.path / "o").string()) == 0);
  std::string j = slurp(td.path / "o" / "patches.json");
  CHECK(j.find("\"total_centers\"") != std::string::npos);
  CHECK(j.find("\"patches\"") != std::string::npos);
}
