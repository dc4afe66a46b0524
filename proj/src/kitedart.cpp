#include "penrose/kitedart.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "penrose/error.hpp"
#include "penrose/geometry.hpp"

namespace penrose {

const char* to_string(TileKind kind) { return kind == TileKind::Kite ? "kite" : "dart"; }

std::array<Cyclotomic5, 4> MarkedTile::vertices() const {
  const int r = rotation();
  const Cyclotomic5& t = pose.translation;
  const Cyclotomic5 phi = Cyclotomic5::phi();
  const Cyclotomic5 far = kind == TileKind::Kite ? phi.rotated(r) : Cyclotomic5::unit(r);
  return {t, t + phi.rotated(r - 1), t + far, t + phi.rotated(r + 1)};
}

std::size_t MarkedTileHash::operator()(const MarkedTile& t) const noexcept {
  std::size_t h = Cyclotomic5Hash{}(t.pose.translation);
  hash_combine(h, static_cast<std::size_t>(t.kind));
  hash_combine(h, static_cast<std::size_t>(t.rotation()));
  return h;
}

}  // namespace penrose

namespace penrose::kitedart {

namespace {

// Vertex order matches MarkedTile::vertices().
constexpr Color kKiteColors[4] = {Color::X, Color::Y, Color::X, Color::Y};
constexpr Color kDartColors[4] = {Color::Y, Color::X, Color::Y, Color::X};
constexpr int kKiteAngles[4] = {2, 2, 4, 2};
constexpr int kDartAngles[4] = {2, 1, 6, 1};

std::complex<double> tile_centroid(const MarkedTile& t) {
  const auto v = t.vertices();
  return centroid(v);
}

std::array<Triangle, 2> triangles(const std::array<Cyclotomic5, 4>& v) {
  // Both shapes split along the axis v0-v2, which lies inside the dart too.
  return {Triangle{v[0], v[1], v[2]}, Triangle{v[0], v[2], v[3]}};
}

// Decides one pair; appends at most one violation.
void check_pair(const MarkedTile& a, std::size_t ia, const MarkedTile& b, std::size_t ib,
                std::vector<Violation>& out) {
  const auto va = a.vertices();
  const auto vb = b.vertices();
  for (const auto& s : triangles(va)) {
    for (const auto& t : triangles(vb)) {
      if (triangle_interiors_overlap(s, t)) {
        out.push_back({Violation::Type::Overlap, ia, ib, "interiors intersect"});
        return;
      }
    }
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (on_open_segment(va[i], vb[j], vb[(j + 1) % 4]) || on_open_segment(vb[i], va[j], va[(j + 1) % 4])) {
        out.push_back({Violation::Type::PartialEdge, ia, ib, "vertex inside an edge"});
        return;
      }
    }
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (!(va[i] == vb[(j + 1) % 4] && va[(i + 1) % 4] == vb[j])) continue;
      const EdgeLabel la = edge_label(a.kind, i);
      const EdgeLabel lb = edge_label(b.kind, j);
      // Traversals run opposite ways, so the X ends coincide iff the arrows
      // point opposite ways relative to each tile.
      const Cyclotomic5& xa = la.forward ? va[i] : va[(i + 1) % 4];
      const Cyclotomic5& xb = lb.forward ? vb[j] : vb[(j + 1) % 4];
      if (la.symbol != lb.symbol || !(xa == xb)) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "edge %d of %s meets edge %d of %s", i, to_string(a.kind), j,
                      to_string(b.kind));
        out.push_back({Violation::Type::LabelMismatch, ia, ib, buf});
        return;
      }
    }
  }
}

// Pairs whose centroids are within this distance can touch.
constexpr double kContactReach = 2.6;

Verdict check_impl(std::span<const MarkedTile> tiles, bool parallel) {
  const std::size_t n = tiles.size();
  std::vector<std::complex<double>> cs(n);
  BucketGrid grid(kContactReach);
  for (std::size_t i = 0; i < n; ++i) {
    cs[i] = tile_centroid(tiles[i]);
    grid.insert(static_cast<std::uint32_t>(i), cs[i]);
  }
  std::vector<std::vector<Violation>> found(n);
  auto work = [&](std::size_t i) {
    std::vector<std::uint32_t> near;
    grid.visit(cs[i], kContactReach, [&](std::uint32_t j) {
      if (j > i && std::abs(cs[j] - cs[i]) <= kContactReach) near.push_back(j);
    });
    std::sort(near.begin(), near.end());
    for (std::uint32_t j : near) check_pair(tiles[i], i, tiles[j], j, found[i]);
  };
  if (parallel) {
    const auto sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < sn; ++i) work(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) work(i);
  }
  Verdict v;
  for (auto& f : found) v.violations.insert(v.violations.end(), f.begin(), f.end());
  return v;
}

// Direction index k in 0..9 of a unit or phi-length edge vector.
int edge_direction(const Cyclotomic5& d) {
  for (int k = 0; k < 10; ++k) {
    const Cyclotomic5 u = Cyclotomic5::unit(k);
    if (d == u || d == u.times_phi()) return k;
  }
  throw Error(ErrorCode::InvalidArgument, "edge is not a tile edge");
}

}  // namespace

Color corner_color(TileKind kind, int vertex) {
  return kind == TileKind::Kite ? kKiteColors[vertex & 3] : kDartColors[vertex & 3];
}

int corner_angle(TileKind kind, int vertex) {
  return kind == TileKind::Kite ? kKiteAngles[vertex & 3] : kDartAngles[vertex & 3];
}

EdgeLabel edge_label(TileKind kind, int edge) {
  edge &= 3;
  // Edges 0 and 3 are long on both shapes.
  const EdgeSymbol s = (edge == 0 || edge == 3) ? EdgeSymbol::Alpha : EdgeSymbol::Beta;
  return {s, corner_color(kind, edge) == Color::X};
}

const char* to_string(Violation::Type type) {
  switch (type) {
    case Violation::Type::Overlap: return "overlap";
    case Violation::Type::PartialEdge: return "partial-edge";
    case Violation::Type::LabelMismatch: return "label-mismatch";
  }
  return "?";
}

Verdict check_legal(std::span<const MarkedTile> tiles) { return check_impl(tiles, true); }
Verdict check_legal_serial(std::span<const MarkedTile> tiles) { return check_impl(tiles, false); }

// ---------------------------------------------------------------------------
// Vertex stars

namespace {

// Mirror image of a corner: the two side vertices trade places.
Corner mirrored(Corner c) {
  if (c.vertex == 1) return {c.kind, 3};
  if (c.vertex == 3) return {c.kind, 1};
  return c;
}

Corner corner(char kind, int vertex) {
  return {kind == 'K' ? TileKind::Kite : TileKind::Dart, static_cast<std::uint8_t>(vertex)};
}

const std::map<VertexStar, std::string>& star_names() {
  static const std::map<VertexStar, std::string> names = [] {
    std::map<VertexStar, std::string> m;
    auto add = [&](const char* name, std::initializer_list<std::pair<char, int>> cs) {
      std::vector<Corner> v;
      for (auto [k, i] : cs) v.push_back(corner(k, i));
      m[VertexStar::canonical(v)] = name;
    };
    add("sun", {{'K', 0}, {'K', 0}, {'K', 0}, {'K', 0}, {'K', 0}});
    add("star", {{'D', 0}, {'D', 0}, {'D', 0}, {'D', 0}, {'D', 0}});
    add("ace", {{'D', 2}, {'K', 1}, {'K', 3}});
    add("deuce", {{'K', 2}, {'K', 2}, {'D', 1}, {'D', 3}});
    add("jack", {{'K', 0}, {'K', 0}, {'D', 3}, {'K', 2}, {'D', 1}});
    add("queen", {{'D', 0}, {'K', 3}, {'K', 1}, {'K', 3}, {'K', 1}});
    add("king", {{'D', 0}, {'D', 0}, {'D', 0}, {'K', 3}, {'K', 1}});
    return m;
  }();
  return names;
}

}  // namespace

VertexStar VertexStar::canonical(std::vector<Corner> ccw) {
  std::vector<Corner> best = ccw;
  std::vector<Corner> mirror(ccw.rbegin(), ccw.rend());
  for (auto& c : mirror) c = mirrored(c);
  for (auto* seq : {&ccw, &mirror}) {
    for (std::size_t r = 0; r < seq->size(); ++r) {
      std::rotate(seq->begin(), seq->begin() + 1, seq->end());
      best = std::min(best, *seq);
    }
  }
  return VertexStar{best};
}

std::string VertexStar::name() const {
  auto it = star_names().find(*this);
  return it == star_names().end() ? "unnamed" : it->second;
}

std::string VertexStar::to_string() const {
  std::string s;
  for (const auto& c : corners) {
    if (!s.empty()) s += ' ';
    s += c.kind == TileKind::Kite ? 'K' : 'D';
    s += static_cast<char>('0' + c.vertex);
  }
  return s;
}

std::vector<StarSite> vertex_stars(std::span<const MarkedTile> tiles) {
  struct Incidence {
    std::size_t tile;
    int vertex;
  };
  std::unordered_map<Cyclotomic5, std::vector<Incidence>, Cyclotomic5Hash> at;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const auto v = tiles[i].vertices();
    for (int k = 0; k < 4; ++k) at[v[k]].push_back({i, k});
  }
  std::vector<StarSite> out;
  for (const auto& [p, inc] : at) {
    int total = 0;
    for (const auto& x : inc) total += corner_angle(tiles[x.tile].kind, x.vertex);
    if (total != 10) continue;
    // Order corners by the direction of their outgoing (counterclockwise) edge.
    std::vector<std::pair<int, Incidence>> keyed;
    for (const auto& x : inc) {
      const auto v = tiles[x.tile].vertices();
      keyed.push_back({edge_direction(v[(x.vertex + 1) % 4] - v[x.vertex]), x});
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Corner> seq;
    StarSite site;
    site.center = p;
    for (const auto& [d, x] : keyed) {
      seq.push_back({tiles[x.tile].kind, static_cast<std::uint8_t>(x.vertex)});
      site.tiles.push_back(x.tile);
    }
    site.star = VertexStar::canonical(std::move(seq));
    std::sort(site.tiles.begin(), site.tiles.end());
    out.push_back(std::move(site));
  }
  std::sort(out.begin(), out.end(), [](const StarSite& a, const StarSite& b) { return a.center < b.center; });
  return out;
}

std::vector<VertexStar> vertex_atlas(int levels, AtlasSeeds seeds) {
  if (levels < 0 || levels > kMaxAtlasLevels) {
    throw Error(ErrorCode::InvalidArgument, "atlas levels must be in 0.." + std::to_string(kMaxAtlasLevels));
  }
  std::vector<robinson::Seed> which;
  if (seeds != AtlasSeeds::Star) which.push_back(robinson::Seed::Sun);
  if (seeds != AtlasSeeds::Sun) which.push_back(robinson::Seed::Star);
  std::vector<VertexStar> out;
  for (auto s : which) {
    const auto tiles = robinson::pair_halves(robinson::inflate(robinson::seed_patch(s), levels)).tiles;
    for (auto& site : vertex_stars(tiles)) out.push_back(std::move(site.star));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Motifs

Cyclotomic5 apply(const Isometry& g, const Cyclotomic5& z) {
  return (g.reflected ? z.conj() : z).rotated(g.rotation) + g.translation;
}

MarkedTile apply(const Isometry& g, const MarkedTile& t) {
  MarkedTile out = t;
  out.pose.translation = apply(g, t.pose.translation);
  out.pose.rotation = ((g.reflected ? g.rotation - t.rotation() : g.rotation + t.rotation()) % 10 + 10) % 10;
  out.pose.reflected = t.pose.reflected != g.reflected;
  return out;
}

robinson::HalfTile apply(const Isometry& g, const robinson::HalfTile& t) {
  robinson::HalfTile out = t;
  for (auto& v : out.v) v = apply(g, v);
  if (g.reflected) out.chirality = robinson::flipped(t.chirality);
  return out;
}

namespace {

int mod10(int k) { return ((k % 10) + 10) % 10; }

template <class Tile, class Hash, class Candidates>
std::vector<Isometry> search(std::span<const Tile> haystack, std::span<const Tile> motif, bool parallel,
                             Candidates&& candidates) {
  if (motif.empty() || haystack.empty()) return {};
  const std::unordered_set<Tile, Hash> present(haystack.begin(), haystack.end());
  std::vector<std::vector<Isometry>> found(haystack.size());
  auto work = [&](std::size_t i) {
    for (const Isometry& g : candidates(haystack[i], motif[0])) {
      if (!(apply(g, motif[0]) == haystack[i])) continue;
      bool all = true;
      for (std::size_t k = 1; k < motif.size() && all; ++k) all = present.count(apply(g, motif[k])) > 0;
      if (all) found[i].push_back(g);
    }
  };
  if (parallel) {
    const auto n = static_cast<std::int64_t>(haystack.size());
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < n; ++i) work(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < haystack.size(); ++i) work(i);
  }
  std::vector<Isometry> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// A kite or dart is mirror symmetric about its axis, so the isometries taking
// m onto h are one rotation and one reflection.
std::vector<Isometry> tile_candidates(const MarkedTile& h, const MarkedTile& m) {
  if (h.kind != m.kind) return {};
  std::vector<Isometry> gs;
  for (bool refl : {false, true}) {
    Isometry g;
    g.reflected = refl;
    g.rotation = mod10(refl ? h.rotation() + m.rotation() : h.rotation() - m.rotation());
    const Cyclotomic5 a = refl ? m.pose.translation.conj() : m.pose.translation;
    g.translation = h.pose.translation - a.rotated(g.rotation);
    gs.push_back(g);
  }
  return gs;
}

std::vector<Isometry> find_motif_impl(std::span<const MarkedTile> haystack, std::span<const MarkedTile> motif,
                                      bool parallel) {
  return search<MarkedTile, MarkedTileHash>(haystack, motif, parallel, tile_candidates);
}

}  // namespace

std::vector<Isometry> find_motif(std::span<const MarkedTile> haystack, std::span<const MarkedTile> motif) {
  return find_motif_impl(haystack, motif, true);
}

std::vector<Isometry> find_motif_serial(std::span<const MarkedTile> haystack, std::span<const MarkedTile> motif) {
  return find_motif_impl(haystack, motif, false);
}

std::vector<Isometry> find_motif(const robinson::Patch& haystack, const robinson::Patch& motif) {
  using robinson::HalfTile;
  // Half-tiles have no symmetry: chirality fixes the reflection and the frame
  // fixes rotation and translation.
  auto candidates = [](const HalfTile& h, const HalfTile& m) -> std::vector<Isometry> {
    if (h.kind != m.kind) return {};
    const auto fh = robinson::frame_of(h);
    const auto fm = robinson::frame_of(m);
    Isometry g;
    g.reflected = h.chirality != m.chirality;
    g.rotation = mod10(g.reflected ? fh.rotation + fm.rotation : fh.rotation - fm.rotation);
    const Cyclotomic5 a = g.reflected ? fm.origin.conj() : fm.origin;
    g.translation = fh.origin - a.rotated(g.rotation);
    return {g};
  };
  return search<HalfTile, robinson::HalfTileHash>(std::span<const HalfTile>(haystack.tiles),
                                                  std::span<const HalfTile>(motif.tiles), true, candidates);
}

// ---------------------------------------------------------------------------
// Repetitivity

namespace {

// Edges used by exactly one tile.
std::vector<std::pair<std::complex<double>, std::complex<double>>> boundary_edges(std::span<const MarkedTile> tiles) {
  struct EdgeKey {
    Cyclotomic5 a, b;
    bool operator==(const EdgeKey&) const = default;
  };
  struct EdgeHash {
    std::size_t operator()(const EdgeKey& e) const noexcept {
      std::size_t h = Cyclotomic5Hash{}(e.a);
      hash_combine(h, Cyclotomic5Hash{}(e.b));
      return h;
    }
  };
  std::unordered_map<EdgeKey, int, EdgeHash> uses;
  for (const auto& t : tiles) {
    const auto v = t.vertices();
    for (int i = 0; i < 4; ++i) {
      auto a = v[i], b = v[(i + 1) % 4];
      if (b < a) std::swap(a, b);
      ++uses[{a, b}];
    }
  }
  std::vector<std::pair<std::complex<double>, std::complex<double>>> out;
  for (const auto& [e, n] : uses) {
    if (n == 1) out.push_back({e.a.embed(), e.b.embed()});
  }
  return out;
}

double segment_distance(std::complex<double> p, std::complex<double> a, std::complex<double> b) {
  const std::complex<double> d = b - a;
  const double len2 = std::norm(d);
  double t = len2 > 0 ? ((p - a) * std::conj(d)).real() / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

// Exact vertex sum, embedded once, so equal vertex multisets give bitwise
// equal anchors.
std::complex<double> vertex_mean(std::span<const MarkedTile> tiles) {
  Cyclotomic5 sum;
  for (const auto& t : tiles) {
    for (const auto& v : t.vertices()) sum += v;
  }
  return sum.embed() / static_cast<double>(4 * tiles.size());
}

class NearestIndex {
 public:
  explicit NearestIndex(std::vector<std::complex<double>> pts) : pts_(std::move(pts)), grid_(kCell) {
    for (std::size_t i = 0; i < pts_.size(); ++i) grid_.insert(static_cast<std::uint32_t>(i), pts_[i]);
  }

  double distance(std::complex<double> p) const {
    double best = std::numeric_limits<double>::infinity();
    for (double reach = kCell;; reach *= 2) {
      grid_.visit(p, reach, [&](std::uint32_t i) { best = std::min(best, std::abs(pts_[i] - p)); });
      // Everything within `reach` of p has been seen.
      if (best <= reach || reach > 1e7) return best;
    }
  }

 private:
  static constexpr double kCell = 2.0;
  std::vector<std::complex<double>> pts_;
  BucketGrid grid_;
};

}  // namespace

Recurrence recurrence_radius(std::span<const MarkedTile> patch, std::span<const MarkedTile> motif) {
  const auto occ = find_motif(patch, motif);
  if (occ.empty()) throw Error(ErrorCode::MotifAbsent, "motif does not occur in the patch");

  std::vector<std::complex<double>> anchors;
  anchors.reserve(occ.size());
  std::vector<MarkedTile> image(motif.size());
  for (const auto& g : occ) {
    for (std::size_t k = 0; k < motif.size(); ++k) image[k] = apply(g, motif[k]);
    std::sort(image.begin(), image.end());
    anchors.push_back(vertex_mean(image));
  }
  const NearestIndex nearest(std::move(anchors));
  const auto edges = boundary_edges(patch);

  // A sample only counts when an occurrence anchored within R of it would
  // still fit inside the patch, so depth is measured less the motif extent.
  std::vector<MarkedTile> m(motif.begin(), motif.end());
  std::sort(m.begin(), m.end());
  const auto mc = vertex_mean(m);
  double extent = 0.0;
  for (const auto& t : m) {
    for (const auto& v : t.vertices()) extent = std::max(extent, std::abs(v.embed() - mc));
  }

  const std::size_t n = patch.size();
  std::vector<double> depth(n), reach(n);
  const auto sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < sn; ++i) {
    const auto c = tile_centroid(patch[static_cast<std::size_t>(i)]);
    double d = std::numeric_limits<double>::infinity();
    for (const auto& [a, b] : edges) d = std::min(d, segment_distance(c, a, b));
    depth[i] = d - extent;
    reach[i] = nearest.distance(c);
  }

  // f(R) = max reach over samples deeper than R is non-increasing; the answer
  // is the least R with f(R) <= R, which is one of the breakpoints below.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return depth[a] < depth[b]; });
  std::vector<double> sorted_depth(n), suffix(n + 1, -1.0);
  for (std::size_t k = 0; k < n; ++k) sorted_depth[k] = depth[order[k]];
  for (std::size_t k = n; k-- > 0;) suffix[k] = std::max(suffix[k + 1], reach[order[k]]);

  std::vector<double> cands{0.0};
  cands.insert(cands.end(), depth.begin(), depth.end());
  cands.insert(cands.end(), reach.begin(), reach.end());
  std::sort(cands.begin(), cands.end());

  Recurrence out;
  out.occurrences = occ.size();
  for (double r : cands) {
    const auto idx = static_cast<std::size_t>(std::upper_bound(sorted_depth.begin(), sorted_depth.end(), r) -
                                              sorted_depth.begin());
    if (suffix[idx] <= r) {
      out.radius = r;
      out.samples = n - idx;
      break;
    }
  }
  if (out.samples == 0) {
    out.center_fallback = true;
    out.samples = 1;
    std::vector<MarkedTile> all(patch.begin(), patch.end());
    std::sort(all.begin(), all.end());
    out.radius = nearest.distance(vertex_mean(all));
  }
  return out;
}

std::optional<Cyclotomic5> find_period(std::span<const MarkedTile> tiles) {
  const std::size_t n = tiles.size();
  if (n < 2) return std::nullopt;
  // A tile's centroid is within 1.2 of each of its points.
  constexpr double kTileRadius = 1.2;

  const auto edges = boundary_edges(tiles);
  std::vector<std::complex<double>> cs(n);
  std::vector<double> depth(n);
  const auto sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < sn; ++i) {
    cs[i] = tile_centroid(tiles[i]);
    double d = std::numeric_limits<double>::infinity();
    for (const auto& [a, b] : edges) d = std::min(d, segment_distance(cs[i], a, b));
    depth[i] = d;
  }
  // Points near the centroid of a tile this deep are at least one tile
  // radius inside the patch, so a tile translated there must be present.
  BucketGrid deep(2.0);
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (depth[i] >= 2 * kTileRadius) deep.insert(static_cast<std::uint32_t>(i), cs[i]);
    if (depth[i] > depth[pivot]) pivot = i;
  }
  const auto inside = [&](std::complex<double> p) {
    bool hit = false;
    deep.visit(p, kTileRadius, [&](std::uint32_t j) { hit = hit || std::abs(cs[j] - p) < kTileRadius; });
    return hit;
  };

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return std::abs(cs[a] - cs[pivot]) < std::abs(cs[b] - cs[pivot]); });

  // Too little overlap proves nothing either way.
  const std::size_t quorum = std::max<std::size_t>(8, n / 8);
  const std::unordered_set<MarkedTile, MarkedTileHash> present(tiles.begin(), tiles.end());
  const MarkedTile& p0 = tiles[pivot];
  for (std::size_t j : order) {
    if (j == pivot || tiles[j].kind != p0.kind || tiles[j].rotation() != p0.rotation()) continue;
    const Cyclotomic5 t = tiles[j].pose.translation - p0.pose.translation;
    const std::complex<double> tf = t.embed();
    std::size_t checked = 0;
    bool period = true;
    for (std::size_t i : order) {
      if (depth[i] < kTileRadius || !inside(cs[i] + tf)) continue;
      MarkedTile moved = tiles[i];
      moved.pose.translation = moved.pose.translation + t;
      if (!present.contains(moved)) {
        period = false;
        break;
      }
      ++checked;
    }
    if (period && checked >= quorum) return t;
  }
  return std::nullopt;
}

}  // namespace penrose::kitedart
