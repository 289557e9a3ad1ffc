// Benchmark: OpenMP kernels against the serial reference implementations
// on identical inputs, verifying byte-identical results before timing.

#include <omp.h>

#include <cstdio>
#include <functional>

#include "aplat/density.hpp"
#include "aplat/patterns.hpp"
#include "aplat/reference.hpp"
#include "aplat/transversal.hpp"

using namespace aplat;

namespace {

double time_it(const std::function<void()>& fn, int reps = 3) {
  double best = 1e100;
  for (int i = 0; i < reps; ++i) {
    double t0 = omp_get_wtime();
    fn();
    best = std::min(best, omp_get_wtime() - t0);
  }
  return best;
}

void row(const char* name, double parallel_s, double serial_s) {
  std::printf("%-28s %10.3f ms %14.3f ms %8.2fx\n", name, parallel_s * 1e3,
              serial_s * 1e3, serial_s / parallel_s);
}

}  // namespace

int main(int argc, char** argv) {
  int threads = omp_get_max_threads();
  if (argc > 1) {
    threads = std::atoi(argv[1]);
    omp_set_num_threads(threads);
  }
  std::printf("threads: %d\n", threads);
  std::printf("%-28s %13s %17s %9s\n", "kernel", "parallel", "serial ref",
              "speedup");

  QuadScheme s(2, 1);

  // enumerate: interval kernel vs the brute-force coefficient box
  {
    QuadRegion region(Rational(800));
    QuadPointSet fast;
    std::vector<QuadInt> brute;
    double tp = time_it([&] { fast = enumerate(s, region); });
    double ts = time_it(
        [&] { brute = ref::enumerate_bruteforce(s, region, 850, 600); }, 1);
    if (fast.size() != brute.size()) {
      std::fprintf(stderr, "enumerate mismatch: %zu vs %zu\n", fast.size(),
                   brute.size());
      return 1;
    }
    row("enumerate T=800", tp, ts);
  }

  // gap-set scan: hash-indexed parallel scan vs naive nested loops
  {
    QuadRegion region(Rational(1500));
    auto pts = enumerate(s, region);
    QuadScanContext ctx{s, region, pts, Rational(750)};
    QuadQuery q;
    q.F = {s.element(1, 0), s.element(1, 1)};
    std::vector<QuadInt> lambdas;
    for (const auto& l : pts.points())
      if (quad_abs_leq(l, Rational(180))) lambdas.push_back(l);

    GapSetReport<QuadInt> rep;
    std::vector<GapRow<QuadInt>> naive;
    double tp = time_it([&] { rep = gap_set(ctx, lambdas, q); });
    double ts = time_it(
        [&] {
          naive = ref::gap_set_naive<QuadInt>(
              pts.points(), [&](const QuadInt& p) { return ctx.in_inner(p); },
              lambdas, [&](const QuadInt& l) { return q.displacements(l); });
        },
        1);
    for (size_t i = 0; i < rep.rows.size(); ++i) {
      if (rep.rows[i].base_points != naive[i].base_points) {
        std::fprintf(stderr, "gap_set mismatch at row %zu\n", i);
        return 1;
      }
    }
    row("gap_set 465 lambdas", tp, ts);
  }

  // banach window maximization: two-pointer parallel scan vs recount
  {
    QuadRegion region(Rational(6000));
    auto pts = enumerate(s, region);
    BanachResult res;
    long long naive = 0;
    double tp = time_it(
        [&] { res = banach_density_emp(s, region, pts, Rational(50)); });
    double ts = time_it(
        [&] {
          naive =
              ref::banach_naive_best_count(s, region, pts.points(), Rational(50));
        },
        1);
    if (res.best_count != naive) {
      std::fprintf(stderr, "banach mismatch: %lld vs %lld\n", res.best_count,
                   naive);
      return 1;
    }
    row("banach window T=6000", tp, ts);
  }

  // sumset: parallel pair formation vs nested loops
  {
    auto pts = enumerate(s, QuadRegion(Rational(300)));
    QuadPointSet fast, naive;
    double tp = time_it([&] { fast = sumset(pts, 2); });
    double ts = time_it([&] { naive = ref::sumset_naive(pts, 2); }, 1);
    if (fast.size() != naive.size()) {
      std::fprintf(stderr, "sumset mismatch\n");
      return 1;
    }
    row("sumset q=2, T=300", tp, ts);
  }

  std::printf("all kernels agree with the serial reference\n");
  return 0;
}
