// End-to-end acceptance run. One [PASS]/[FAIL] line per criterion, with the
// wall time next to its budget. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>

#include "cli.hpp"
#include "json.hpp"
#include "oracles.hpp"
#include "penrose/document.hpp"
#include "penrose/kitedart.hpp"
#include "penrose/pentagrid.hpp"
#include "penrose/robinson.hpp"
#include "penrose/tilingspace.hpp"

using namespace penrose;
namespace rb = penrose::robinson;
namespace fs = std::filesystem;

namespace {

// Collects the first failure reason; later checks still run.
struct Check {
  std::string why;
  void operator()(bool ok, const std::string& what) {
    if (!ok && why.empty()) why = what;
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget > 0 && secs > budget) {
    char b[96];
    std::snprintf(b, sizeof b, "took %.2f s, budget %.0f s", secs, budget);
    c(false, b);
  }
  const bool ok = c.why.empty();
  if (!ok) ++failures;
  std::printf("[%s] %2d. %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", id, title, secs, ok ? "" : ": ", c.why.c_str());
  std::fflush(stdout);
}

std::string cli_out(std::vector<std::string> args, int* code = nullptr) {
  std::ostringstream out, err;
  const int rc = cli::run(args, out, err);
  if (code) *code = rc;
  return out.str();
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::string num(double v) {
  char b[64];
  std::snprintf(b, sizeof b, "%.10g", v);
  return b;
}

}  // namespace

int main() {
  criterion(1, "lattice/dense dichotomy of the density probe", 10, [](Check& c) {
    for (int n : {3, 4, 6}) {
      for (int b = 1; b <= 4; ++b) {
        int rc = 0;
        const double v = std::stod(cli_out({"probe", "--n", std::to_string(n), "--box", std::to_string(b)}, &rc));
        c(rc == 0 && std::abs(v - 1.0) <= 1e-9, "probe n=" + std::to_string(n) + " box=" + std::to_string(b) + " = " + num(v));
      }
    }
    const double p1 = std::stod(cli_out({"probe", "--n", "5", "--box", "1"}));
    const double p3 = std::stod(cli_out({"probe", "--n", "5", "--box", "3"}));
    c(std::abs(p1 - 0.3819660) <= 1e-6, "probe n=5 box=1 = " + num(p1));
    c(std::abs(p1 - oracle::brute_density(5, 1)) <= 1e-9, "box=1 disagrees with exhaustive search");
    c(p3 < p1, "probe n=5 box=3 = " + num(p3) + " not below box=1");
  });

  criterion(2, "substitution census from the acute seed", 5, [](Check& c) {
    rb::Patch p = rb::seed_patch(rb::Seed::Acute);
    for (int n = 0; n < 12; ++n) {
      const auto before = rb::counts(p);
      p = rb::inflate(p, 1);
      const auto after = rb::counts(p);
      c(after.acute == 2 * before.acute + before.obtuse && after.obtuse == before.acute + before.obtuse,
        "recurrence broken at n=" + std::to_string(n + 1));
    }
    const auto k = rb::counts(p);
    c(k.acute == oracle::fib(25) && k.obtuse == oracle::fib(24), "level 12 counts are not Fibonacci");
    const double ratio = static_cast<double>(k.acute) / static_cast<double>(k.obtuse);
    c(std::abs(ratio - 1.6180339887) < 1e-4, "A12/O12 = " + num(ratio));
  });

  criterion(3, "composition inverts inflation on 50 random patches", 0, [](Check& c) {
    std::mt19937_64 rng(20241017);
    const rb::Seed seeds[] = {rb::Seed::Acute, rb::Seed::Obtuse, rb::Seed::Sun, rb::Seed::Star};
    for (int trial = 0; trial < 50; ++trial) {
      const int level = static_cast<int>(rng() % 6);
      const rb::Patch big = rb::inflate(rb::seed_patch(seeds[trial % 4]), level);
      const rb::Patch q = oracle::disk_subpatch(big, rng);
      const auto r = rb::compose(rb::inflate(q, 1));
      c(r.patch == q && r.dropped.empty(), "trial " + std::to_string(trial) + " (level " + std::to_string(level) + ")");
    }
  });

  criterion(4, "exact vertices and area scaling", 0, [](Check& c) {
    for (rb::Seed s : {rb::Seed::Acute, rb::Seed::Obtuse, rb::Seed::Sun, rb::Seed::Star}) {
      rb::Patch p = rb::seed_patch(s);
      for (int n = 0; n < 6; ++n) {
        const rb::Patch q = rb::inflate(p, 1);
        // Persisted geometry is integer-only, and every tile is an exact
        // image of its prototile.
        const auto j = nlohmann::json::parse(document::serialize(document::from_patch(q)));
        for (const auto& t : j["tiles"]) {
          for (const auto& v : t["vertices"]) {
            bool ints = v.size() == 4;
            for (const auto& x : v) ints = ints && x.is_number_integer();
            c(ints, "non-integer vertex");
          }
        }
        for (const auto& t : q.tiles) (void)rb::frame_of(t);
        const double want = kPhi * kPhi * rb::area(p);
        c(std::abs(rb::area(q) - want) <= 1e-9 * want, "area ratio off at level " + std::to_string(n + 1));
        p = q;
      }
    }
  });

  criterion(5, "paired patches are legal and the atlas has 7 stars", 60, [](Check& c) {
    rb::Patch p = rb::seed_patch(rb::Seed::Acute);
    for (int n = 1; n <= 12; ++n) {
      p = rb::inflate(p, 1);
      const auto tiles = rb::pair_halves(p).tiles;
      const auto v = kitedart::check_legal(tiles);
      c(v.legal(), "level " + std::to_string(n) + ": " + std::to_string(v.violations.size()) + " violations");
    }
    std::vector<kitedart::VertexStar> a5, a6, a7;
    a5 = kitedart::vertex_atlas(5);
    a6 = kitedart::vertex_atlas(6);
    a7 = kitedart::vertex_atlas(7);
    c(a5.size() == 7 && a5 == a6 && a6 == a7, "atlas sizes " + std::to_string(a5.size()) + "/" +
                                                   std::to_string(a6.size()) + "/" + std::to_string(a7.size()));
    std::set<std::vector<oracle::C>> mine;
    for (const auto& s : a7) {
      std::vector<oracle::C> v;
      for (const auto& k : s.corners) v.push_back({k.kind == TileKind::Kite ? 0 : 1, k.vertex});
      mine.insert(oracle::canon(v));
    }
    c(mine == oracle::brute_force_fans(), "atlas differs from the brute-force fan census");
  });

  criterion(6, "pentagrid tilings are valid on 25 random grids", 0, [](Check& c) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 25; ++i) {
      const auto g = oracle::random_regular(rng, 20.0);
      const auto p = pentagrid::generate_tiling(g, 8.0);
      const auto a = pentagrid::audit(p);
      c(a.ok() && a.interior_edges > 0, "audit failed on grid " + std::to_string(i));
      c(pentagrid::index_sum_check(p), "index sums outside {1..4} on grid " + std::to_string(i));
      const auto big = pentagrid::audit(pentagrid::generate_tiling(g, 20.0));
      const double ratio = static_cast<double>(big.thick) / static_cast<double>(big.thin);
      c(std::abs(ratio - kPhi) / kPhi < 0.05, "thick/thin = " + num(ratio) + " on grid " + std::to_string(i));
    }
  });

  criterion(7, "pentagrid and projection give the same vertices", 60, [](Check& c) {
    std::mt19937_64 rng(7);
    const double rv = 6.0;
    for (int i = 0; i < 10; ++i) {
      const auto g = oracle::random_regular(rng, 8.0);
      const auto p = pentagrid::generate_tiling(g, 0.4 * (rv + 4) + 2);
      c(pentagrid::complete_radius(p) >= rv, "dual patch does not cover the disk");
      std::set<Cyclotomic5> a, b;
      for (const auto& v : pentagrid::vertex_set(p)) {
        if (pentagrid::within_radius(v, rv)) a.insert(v);
      }
      for (const auto& q : pentagrid::cut_and_project(g, 6, rv)) b.insert(q.point);
      c(!a.empty() && a == b, "vertex sets differ on grid " + std::to_string(i));
    }
  });

  criterion(8, "sequence space counts, round trips and dense classes", 0, [](Check& c) {
    for (int n = 0; n <= 20; ++n) {
      c(tilingspace::count_admissible(n) == oracle::fib(n + 2), "count_admissible(" + std::to_string(n) + ")");
      if (n > 12) continue;
      std::uint64_t brute = 0;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) brute += (m & (m >> 1)) == 0 ? 1 : 0;
      c(tilingspace::count_admissible(n) == brute, "brute-force count differs at n=" + std::to_string(n));
    }
    for (auto root : {rb::HalfKind::Acute, rb::HalfKind::Obtuse}) {
      for (int d = 0; d <= 6; ++d) {
        for (const auto& t : tilingspace::enumerate_towers(root, d)) {
          c(tilingspace::sequence_to_tower(tilingspace::tower_to_sequence(t), root) == t, "tower round trip");
        }
      }
    }
    std::mt19937_64 rng(8);
    const auto bits = [&](std::size_t n) {
      std::string s;
      for (std::size_t i = 0; i < n; ++i) s += ((rng() & 1) && (s.empty() || s.back() == '0')) ? '1' : '0';
      return s;
    };
    int built = 0;
    while (built < 100) {
      const std::string p = bits(rng() % 13);
      const tilingspace::IndexSequence y(bits(rng() % 9), bits(1 + rng() % 6));
      if (!y.admissible()) continue;
      const auto x = tilingspace::with_prefix(p, y);
      c(x.admissible() && x.head(p.size()) == p && tilingspace::tails_equivalent(x, y), "density construction");
      ++built;
    }
  });

  criterion(9, "trace normalisation is exact", 0, [](Check& c) {
    for (int n = 0; n <= 90; ++n) {
      const auto [da, dob] = tilingspace::bratteli_dimensions(n);
      const auto [wa, wo] = tilingspace::trace_weights(n);
      const GoldenNumber total = GoldenNumber(Rational(da), 0) * wa + GoldenNumber(Rational(dob), 0) * wo;
      c(total == GoldenNumber(1, 0), "d.w != 1 at n=" + std::to_string(n));
      c(gn_sign(wa) == 1 && gn_sign(wo) == 1, "non-positive weight at n=" + std::to_string(n));
    }
  });

  criterion(10, "inflate and render are byte-for-byte deterministic", 0, [](Check& c) {
    const fs::path dir = fs::temp_directory_path() / ("penrose_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const auto j1 = (dir / "a.json").string(), j2 = (dir / "b.json").string();
    const auto s1 = (dir / "a.svg").string(), s2 = (dir / "b.svg").string();
    int rc = 0;
    cli_out({"inflate", "--seed", "sun", "--levels", "6", "--pair", "--out", j1}, &rc);
    c(rc == 0, "inflate failed");
    cli_out({"inflate", "--seed", "sun", "--levels", "6", "--pair", "--out", j2}, &rc);
    cli_out({"render", "--in", j1, "--out", s1}, &rc);
    c(rc == 0, "render failed");
    cli_out({"render", "--in", j2, "--out", s2}, &rc);
    const auto a = slurp(j1), b = slurp(j2);
    c(!a.empty() && a == b, "JSON differs");
    c(!slurp(s1).empty() && slurp(s1) == slurp(s2), "SVG differs");
    fs::remove_all(dir);
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
