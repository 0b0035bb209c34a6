// Times a sweep of saddle-connection searches over a grid of primitive
// directions, serially and with the OpenMP fan-out, and prints the speedup.
// The per-direction work is branchy exact arithmetic, so this measures the
// harness-level parallelism, not a vectorized kernel.

#include <gmpxx.h>

#include <chrono>
#include <cstdio>
#include <numeric>
#include <vector>

#include "CLI11.hpp"
#include "tsurf/flow.hpp"
#include "tsurf/surface.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace tsurf;

std::vector<Vec2> direction_grid(long n) {
    std::vector<Vec2> dirs;
    for (long p = 1; p <= n; ++p) {
        for (long q = 1; q <= n; ++q) {
            mpz_class g, zp = p, zq = q;
            mpz_gcd(g.get_mpz_t(), zp.get_mpz_t(), zq.get_mpz_t());
            if (g == 1) dirs.push_back({Rational(p), Rational(q)});
        }
    }
    return dirs;
}

long search(const Rational& c, const Vec2& dir, long budget) {
    Surface h(c);
    return static_cast<long>(find_saddle_connections(h, dir, budget).size());
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel sweep of saddle-connection searches"};
    std::string c_str = "5/4";
    long grid = 8, budget = 150;
    app.add_option("--c", c_str, "surface parameter p/q, at least 1");
    app.add_option("--grid", grid, "use primitive directions (p,q) with 1 <= p,q <= grid");
    app.add_option("--budget", budget, "crossing budget per launch");
    CLI11_PARSE(app, argc, argv);

    Rational c = Rational::parse(c_str);
    std::vector<Vec2> dirs = direction_grid(grid);
    std::vector<long> found(dirs.size(), 0);

    auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < dirs.size(); ++i) found[i] = search(c, dirs[i], budget);
    double serial = seconds_since(t0);
    long total = std::accumulate(found.begin(), found.end(), 0L);

    std::printf("sweep: %zu primitive directions, budget %ld, c = %s\n", dirs.size(), budget,
                c.str().c_str());
    std::printf("serial:   %8.3f s   (%ld connections)\n", serial, total);

#ifdef _OPENMP
    std::vector<long> found_par(dirs.size(), 0);
    t0 = std::chrono::steady_clock::now();
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(dirs.size()); ++i)
        found_par[i] = search(c, dirs[i], budget);
    double parallel = seconds_since(t0);
    long total_par = std::accumulate(found_par.begin(), found_par.end(), 0L);
    std::printf("parallel: %8.3f s   (%ld connections, %d threads, %.2fx)\n", parallel, total_par,
                omp_get_max_threads(), parallel > 0 ? serial / parallel : 0.0);
    if (total != total_par) {
        std::printf("MISMATCH: serial and parallel sweeps disagree\n");
        return 1;
    }
#else
    std::printf("parallel: not available (compiled without OpenMP)\n");
#endif
    return 0;
}
