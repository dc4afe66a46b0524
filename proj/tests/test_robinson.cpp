#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "penrose/error.hpp"
#include "penrose/robinson.hpp"
#include "oracles.hpp"

using namespace penrose;
using namespace penrose::robinson;

namespace {

using oracle::fib;

// Side lengths squared of a triangle, in floating point.
std::array<double, 3> sides2(const HalfTile& t) {
  std::array<double, 3> s{};
  for (int i = 0; i < 3; ++i) s[i] = std::norm((t.v[(i + 1) % 3] - t.v[i]).embed());
  return s;
}

// Float shape oracle: legs and base for the kind, orientation for the chirality.
bool shape_ok(const HalfTile& t) {
  const auto s = sides2(t);  // v0v1, v1v2, v2v0
  const double phi2 = kPhi * kPhi;
  const bool lengths = t.kind == HalfKind::Acute
                           ? std::abs(s[0] - phi2) < 1e-9 && std::abs(s[1] - 1) < 1e-9 && std::abs(s[2] - phi2) < 1e-9
                           : std::abs(s[0] - 1) < 1e-9 && std::abs(s[1] - phi2) < 1e-9 && std::abs(s[2] - 1) < 1e-9;
  const auto a = t.v[0].embed(), b = t.v[1].embed(), c = t.v[2].embed();
  const double cross = ((b - a) * std::conj(c - a)).imag() * -1.0;
  return lengths && ((cross > 0) == (t.chirality == Chirality::Right));
}

double float_area(const Patch& p) {
  double s = 0;
  for (const auto& t : p.tiles) {
    const auto a = t.v[0].embed(), b = t.v[1].embed(), c = t.v[2].embed();
    s += std::abs(((b - a) * std::conj(c - a)).imag()) / 2;
  }
  return s;
}

using oracle::disk_subpatch;

}  // namespace

TEST_CASE("seeds") {
  CHECK(counts(seed_patch(Seed::Acute)) == TileCounts{1, 0});
  CHECK(counts(seed_patch(Seed::Obtuse)) == TileCounts{0, 1});
  CHECK(counts(seed_patch("sun")) == TileCounts{10, 0});
  CHECK(counts(seed_patch("star")) == TileCounts{0, 10});
  CHECK_THROWS_AS(seed_patch("moon"), Error);
  try {
    seed_patch("moon");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownSeed);
  }
  for (Seed s : {Seed::Sun, Seed::Star}) {
    const Patch p = seed_patch(s);
    CHECK(validate(p).empty());
    // 5-fold symmetry: multiplying by zeta maps the seed onto itself.
    Patch r = p;
    for (auto& t : r.tiles) {
      for (auto& v : t.v) v = v * Cyclotomic5::zeta_power(1);
    }
    r.canonicalize();
    CHECK(r == p);
    for (const auto& t : p.tiles) CHECK(shape_ok(t));
  }
}

TEST_CASE("subdivision table") {
  for (HalfKind k : {HalfKind::Acute, HalfKind::Obtuse}) {
    for (Chirality c : {Chirality::Left, Chirality::Right}) {
      const HalfTile t = make_half_tile(k, c, Cyclotomic5(1, 2, 0, -1), 3);
      CHECK(shape_ok(t));
      CHECK(frame_of(t).rotation == 3);
      const auto ch = subdivide(t);
      REQUIRE(ch.size() == static_cast<std::size_t>(child_count(k)));
      for (std::size_t i = 0; i < ch.size(); ++i) {
        CHECK(shape_ok(ch[i]));
        CHECK(ch[i].kind == child_kind(k, static_cast<int>(i)));
      }
      if (k == HalfKind::Acute) {
        CHECK(ch[0].chirality == c);
        CHECK(ch[1].chirality == flipped(c));
        CHECK(ch[2].chirality == c);
      } else {
        CHECK(ch[0].chirality == flipped(c));
        CHECK(ch[1].chirality == c);
      }
      Patch kids;
      kids.tiles = ch;
      CHECK(validate(kids).empty());
    }
  }
}

TEST_CASE("inflate counts follow the recurrence") {
  CHECK(counts(inflate(seed_patch(Seed::Acute), 1)) == TileCounts{2, 1});
  CHECK(counts(inflate(seed_patch(Seed::Acute), 2)) == TileCounts{5, 3});
  CHECK(counts(inflate(seed_patch(Seed::Acute), 3)) == TileCounts{13, 8});
  CHECK(inflate(seed_patch(Seed::Sun), 0) == seed_patch(Seed::Sun));
  Patch p = seed_patch(Seed::Acute);
  for (int n = 1; n <= 12; ++n) {
    const TileCounts before = counts(p);
    p = inflate(p, 1);
    const TileCounts after = counts(p);
    CHECK(after.acute == 2 * before.acute + before.obtuse);
    CHECK(after.obtuse == before.acute + before.obtuse);
    CHECK(after.acute == fib(2 * n + 1));
    CHECK(after.obtuse == fib(2 * n));
    CHECK(p.scale_exponent == -n);
    if (n >= 10) CHECK(std::abs(static_cast<double>(after.acute) / after.obtuse - 1.6180339887) < 1e-4);
  }
}

TEST_CASE("parallel and serial inflation agree") {
  for (Seed s : {Seed::Acute, Seed::Obtuse, Seed::Sun, Seed::Star}) {
    CHECK(inflate(seed_patch(s), 6) == inflate_serial(seed_patch(s), 6));
  }
}

TEST_CASE("inflation keeps patches valid, exact and area-scaled") {
  for (Seed s : {Seed::Sun, Seed::Star, Seed::Obtuse}) {
    Patch p = seed_patch(s);
    for (int n = 0; n < 5; ++n) {
      const Patch q = inflate(p, 1);
      CHECK(validate(q).empty());
      for (const auto& t : q.tiles) CHECK(shape_ok(t));
      const double want = kPhi * kPhi * area(p);
      CHECK(std::abs(area(q) - want) <= 1e-9 * want);
      CHECK(std::abs(area(q) - float_area(q)) <= 1e-9 * area(q));
      p = q;
    }
  }
}

TEST_CASE("validate flags overlaps and partial edges") {
  Patch p = seed_patch(Seed::Acute);
  HalfTile moved = p.tiles[0];
  for (auto& v : moved.v) v = v + Cyclotomic5::integer(1);
  p.tiles.push_back(moved);
  const auto issues = validate(p);
  REQUIRE_FALSE(issues.empty());
  CHECK(issues[0].type == PatchIssue::Type::Overlap);

  // Two acute halves glued along a base edge shifted by half an edge.
  Patch q;
  q.tiles.push_back(make_half_tile(HalfKind::Acute, Chirality::Right, Cyclotomic5{}, 0));
  HalfTile bad = make_half_tile(HalfKind::Acute, Chirality::Left, Cyclotomic5{}, 0);
  bad.chirality = Chirality::Right;
  q.tiles.push_back(bad);
  CHECK_FALSE(validate(q).empty());
}

TEST_CASE("compose inverts inflate") {
  for (Seed s : {Seed::Acute, Seed::Obtuse, Seed::Sun, Seed::Star}) {
    for (int level = 0; level <= 4; ++level) {
      const Patch q = inflate(seed_patch(s), level);
      const auto r = compose(inflate(q, 1));
      CHECK(r.patch == q);
      CHECK(r.dropped.empty());
    }
  }
  CHECK(compose(inflate(seed_patch(Seed::Sun), 2)).patch == inflate(seed_patch(Seed::Sun), 1));
}

TEST_CASE("compose of random subpatches") {
  std::mt19937_64 rng(2024);
  const Seed seeds[] = {Seed::Acute, Seed::Obtuse, Seed::Sun, Seed::Star};
  for (int trial = 0; trial < 20; ++trial) {
    const Patch big = inflate(seed_patch(seeds[trial % 4]), 3 + trial % 3);
    const Patch q = disk_subpatch(big, rng);
    const auto r = compose(inflate(q, 1));
    CHECK(r.patch == q);
    CHECK(r.dropped.empty());
  }
}

TEST_CASE("compose drops incomplete parents") {
  const auto r = compose(seed_patch(Seed::Acute));
  CHECK(r.patch.tiles.empty());
  CHECK(r.dropped.size() == 1);
  CHECK(r.patch.scale_exponent == 1);

  // Remove one child: its siblings are reported, the rest composes.
  Patch p = inflate(seed_patch(Seed::Sun), 2);
  p.tiles.erase(p.tiles.begin());
  const auto s = compose(p);
  CHECK(s.patch.tiles.size() + 1 == inflate(seed_patch(Seed::Sun), 1).tiles.size());
  CHECK_FALSE(s.dropped.empty());
}

TEST_CASE("compose rejects a patch that is not an inflation") {
  // The twice-inflated star with its centre replaced by a sun: edge-to-edge,
  // but the central kites fit no parent whose other children are absent.
  Patch q;
  for (const auto& t : inflate(seed_patch(Seed::Star), 2).tiles) {
    const auto c = (t.v[0].embed() + t.v[1].embed() + t.v[2].embed()) / 3.0;
    if (std::abs(c) > 1.7) q.tiles.push_back(t);
  }
  for (const auto& t : seed_patch(Seed::Sun).tiles) q.tiles.push_back(t);
  q.canonicalize();
  REQUIRE(validate(q).empty());
  try {
    compose(q);
    FAIL("expected NoComposition");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoComposition);
  }
}

TEST_CASE("overlapping candidate parents resolve to the true ones") {
  // An acute parent's lower two children also form an obtuse parent.
  const HalfTile a = make_half_tile(HalfKind::Acute, Chirality::Right, Cyclotomic5(2, 0, -1, 1), 7);
  Patch p;
  for (const auto& t : subdivide(a)) p.tiles.push_back(t);
  p.canonicalize();
  const auto r = compose(p);
  REQUIRE(r.patch.tiles.size() == 1);
  CHECK(r.patch.tiles[0] == a);
}

TEST_CASE("pair_halves") {
  const auto sun = pair_halves(seed_patch(Seed::Sun));
  CHECK(sun.tiles.size() == 5);
  CHECK(sun.unpaired.empty());
  for (const auto& t : sun.tiles) CHECK(t.kind == TileKind::Kite);
  const auto star = pair_halves(seed_patch(Seed::Star));
  CHECK(star.tiles.size() == 5);
  for (const auto& t : star.tiles) {
    CHECK(t.kind == TileKind::Dart);
    CHECK(t.pose.translation == Cyclotomic5{});
  }
  const auto one = pair_halves(seed_patch(Seed::Acute));
  CHECK(one.tiles.empty());
  CHECK(one.unpaired.size() == 1);
  const auto none = pair_halves(Patch{});
  CHECK(none.tiles.empty());
  CHECK(none.unpaired.empty());
}

TEST_CASE("split_tiles undoes pair_halves") {
  for (Seed s : {Seed::Sun, Seed::Star}) {
    const Patch p = inflate(seed_patch(s), 5);
    const auto pairing = pair_halves(p);
    Patch back = split_tiles(pairing.tiles, p.scale_exponent);
    back.tiles.insert(back.tiles.end(), pairing.unpaired.begin(), pairing.unpaired.end());
    back.canonicalize();
    CHECK(back == p);
    for (const auto& t : split_tiles(pairing.tiles).tiles) CHECK(shape_ok(t));
  }
}

TEST_CASE("unpaired halves lie on the boundary only") {
  // 0, 10, 20, 20, 30, 60, 100 for sun levels 1..7, from an independent prototype.
  const std::size_t want[] = {0, 10, 20, 20, 30, 60, 100};
  for (int n = 1; n <= 7; ++n) {
    CHECK(pair_halves(inflate(seed_patch(Seed::Sun), n)).unpaired.size() == want[n - 1]);
  }
  CHECK(inflate(seed_patch(Seed::Sun), 7).tiles.size() == 9870);
}
