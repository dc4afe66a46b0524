// Parallel kernels against their serial references. Prints wall time for each
// and checks that both produce the same result.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "penrose/kitedart.hpp"
#include "penrose/pentagrid.hpp"
#include "penrose/robinson.hpp"

using namespace penrose;

namespace {

double seconds(const std::function<void()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double par, double ser, bool same) {
  std::printf("%-18s parallel %8.3f s   serial %8.3f s   speedup %5.2f   %s\n", name, par, ser,
              par > 0 ? ser / par : 0.0, same ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  {
    const auto seed = robinson::seed_patch(robinson::Seed::Sun);
    robinson::Patch a, b;
    const double tp = seconds([&] { a = robinson::inflate(seed, 9); });
    const double ts = seconds([&] { b = robinson::inflate_serial(seed, 9); });
    row("inflate sun 9", tp, ts, a == b);
  }
  {
    const auto tiles = robinson::pair_halves(robinson::inflate(robinson::seed_patch(robinson::Seed::Sun), 8)).tiles;
    kitedart::Verdict a, b;
    const double tp = seconds([&] { a = kitedart::check_legal(tiles); });
    const double ts = seconds([&] { b = kitedart::check_legal_serial(tiles); });
    row("check_legal", tp, ts, a.violations.size() == b.violations.size());

    const auto sites = kitedart::vertex_stars(tiles);
    std::vector<MarkedTile> motif;
    for (std::size_t i : sites[sites.size() / 2].tiles) motif.push_back(tiles[i]);
    std::vector<kitedart::Isometry> x, y;
    const double mp = seconds([&] { x = kitedart::find_motif(tiles, motif); });
    const double ms = seconds([&] { y = kitedart::find_motif_serial(tiles, motif); });
    row("find_motif", mp, ms, x == y);
  }
  {
    pentagrid::Pentagrid g;
    g.gamma = {Rational(1, 5), Rational(1, 7), Rational(1, 11), Rational(1, 13), Rational(0)};
    g = g.normalized();
    pentagrid::RhombusPatch a, b;
    const double tp = seconds([&] { a = pentagrid::generate_tiling(g, 25.0); });
    const double ts = seconds([&] { b = pentagrid::generate_tiling_serial(g, 25.0); });
    row("generate_tiling", tp, ts, pentagrid::vertex_set(a) == pentagrid::vertex_set(b));

    std::vector<pentagrid::ProjectedPoint> p, q;
    const double cp = seconds([&] { p = pentagrid::cut_and_project(g, 6, 8.0); });
    const double cs = seconds([&] { q = pentagrid::cut_and_project_serial(g, 6, 8.0); });
    row("cut_and_project", cp, cs, p == q);
  }
  {
    double a = 0, b = 0;
    const double dp = seconds([&] { a = pentagrid::density_probe(7, 2); });
    const double ds = seconds([&] { b = pentagrid::density_probe_serial(7, 2); });
    row("density_probe", dp, ds, std::abs(a - b) < 1e-9);
  }
  return 0;
}
