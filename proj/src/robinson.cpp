#include "penrose/robinson.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include <omp.h>

#include "penrose/error.hpp"
#include "penrose/geometry.hpp"

namespace penrose::robinson {

namespace {

const std::array<Cyclotomic5, 10>& units() {
  static const std::array<Cyclotomic5, 10> table = [] {
    std::array<Cyclotomic5, 10> t{};
    for (int k = 0; k < 10; ++k) t[k] = Cyclotomic5::unit(k);
    return t;
  }();
  return table;
}

const Cyclotomic5& unit(int k) { return units()[((k % 10) + 10) % 10]; }

// phi^-1 = phi - 1
Cyclotomic5 divide_by_phi(const Cyclotomic5& u) { return u.times_phi() - u; }

// v + (w - v)(phi - 1)
Cyclotomic5 cut(const Cyclotomic5& v, const Cyclotomic5& w) { return v + divide_by_phi(w - v); }

std::array<Cyclotomic5, 3> prototile(HalfKind kind, Chirality chirality) {
  const Cyclotomic5 phi = Cyclotomic5::phi();
  const int side = chirality == Chirality::Right ? 1 : -1;
  if (kind == HalfKind::Acute) return {Cyclotomic5{}, phi, phi * unit(side)};
  return {Cyclotomic5{}, Cyclotomic5::integer(1), unit(3 * side)};
}

struct Role {
  HalfKind parent_kind;
  Chirality parent_chirality;
  int index;
  Frame child_frame;  // frame of the child inside subdivide(prototile)
};

// Every way a tile of the given kind/chirality can sit inside a parent.
const std::vector<Role>& roles_for(HalfKind kind, Chirality chirality) {
  static const std::map<std::pair<HalfKind, Chirality>, std::vector<Role>> table = [] {
    std::map<std::pair<HalfKind, Chirality>, std::vector<Role>> t;
    for (HalfKind pk : {HalfKind::Acute, HalfKind::Obtuse}) {
      for (Chirality pc : {Chirality::Left, Chirality::Right}) {
        const auto children = subdivide(make_half_tile(pk, pc, Cyclotomic5{}, 0));
        for (int i = 0; i < static_cast<int>(children.size()); ++i) {
          const auto& c = children[i];
          t[{c.kind, c.chirality}].push_back(Role{pk, pc, i, frame_of(c)});
        }
      }
    }
    return t;
  }();
  return table.at({kind, chirality});
}

}  // namespace

const char* to_string(HalfKind kind) { return kind == HalfKind::Acute ? "acute" : "obtuse"; }

const char* to_string(Chirality chirality) { return chirality == Chirality::Left ? "left" : "right"; }

std::size_t HalfTileHash::operator()(const HalfTile& t) const noexcept {
  std::size_t seed = static_cast<std::size_t>(t.kind) * 2 + static_cast<std::size_t>(t.chirality);
  for (const auto& v : t.v) hash_combine(seed, Cyclotomic5Hash{}(v));
  return seed;
}

HalfTile make_half_tile(HalfKind kind, Chirality chirality, const Cyclotomic5& origin, int rotation) {
  const auto proto = prototile(kind, chirality);
  const Cyclotomic5& u = unit(rotation);
  HalfTile t;
  t.kind = kind;
  t.chirality = chirality;
  for (std::size_t i = 0; i < 3; ++i) t.v[i] = origin + u * proto[i];
  return t;
}

Frame frame_of(const HalfTile& t) {
  const Cyclotomic5 d = t.v[1] - t.v[0];
  const Cyclotomic5 base = t.kind == HalfKind::Acute ? Cyclotomic5::phi() : Cyclotomic5::integer(1);
  for (int k = 0; k < 10; ++k) {
    if (base * unit(k) == d) {
      if (make_half_tile(t.kind, t.chirality, t.v[0], k) == t) return {t.v[0], k};
      break;
    }
  }
  throw Error(ErrorCode::InvalidArgument, std::string("not a unit ") + to_string(t.kind) + " half-tile: " +
                                              t.v[0].to_string() + " " + t.v[1].to_string() + " " +
                                              t.v[2].to_string());
}

void Patch::canonicalize() {
  std::sort(tiles.begin(), tiles.end());
  tiles.erase(std::unique(tiles.begin(), tiles.end()), tiles.end());
}

Seed parse_seed(std::string_view name) {
  if (name == "acute") return Seed::Acute;
  if (name == "obtuse") return Seed::Obtuse;
  if (name == "sun") return Seed::Sun;
  if (name == "star") return Seed::Star;
  throw Error(ErrorCode::UnknownSeed, "unknown seed '" + std::string(name) + "' (expected acute, obtuse, sun or star)");
}

const char* to_string(Seed seed) {
  switch (seed) {
    case Seed::Acute: return "acute";
    case Seed::Obtuse: return "obtuse";
    case Seed::Sun: return "sun";
    case Seed::Star: return "star";
  }
  return "?";
}

Patch seed_patch(Seed seed) {
  Patch p;
  const Cyclotomic5 origin{};
  switch (seed) {
    case Seed::Acute:
      p.tiles.push_back(make_half_tile(HalfKind::Acute, Chirality::Right, origin, 0));
      break;
    case Seed::Obtuse:
      p.tiles.push_back(make_half_tile(HalfKind::Obtuse, Chirality::Right, origin, 0));
      break;
    case Seed::Sun:
      // Five kites with their tails at the origin.
      for (int i = 0; i < 5; ++i) {
        p.tiles.push_back(make_half_tile(HalfKind::Acute, Chirality::Right, origin, 2 * i - 1));
        p.tiles.push_back(make_half_tile(HalfKind::Acute, Chirality::Left, origin, 2 * i + 1));
      }
      break;
    case Seed::Star:
      // Five darts with their tips at the origin; apex (reflex) at w^(2i).
      for (int i = 0; i < 5; ++i) {
        p.tiles.push_back(make_half_tile(HalfKind::Obtuse, Chirality::Right, unit(2 * i), 2 * i + 2));
        p.tiles.push_back(make_half_tile(HalfKind::Obtuse, Chirality::Left, unit(2 * i), 2 * i - 2));
      }
      break;
  }
  p.canonicalize();
  return p;
}

Patch seed_patch(std::string_view name) { return seed_patch(parse_seed(name)); }

HalfKind child_kind(HalfKind parent, int index) {
  if (parent == HalfKind::Acute) return index == 2 ? HalfKind::Obtuse : HalfKind::Acute;
  return index == 1 ? HalfKind::Obtuse : HalfKind::Acute;
}

std::vector<HalfTile> subdivide(const HalfTile& t) {
  const Cyclotomic5 a = t.v[0].times_phi();
  const Cyclotomic5 b = t.v[1].times_phi();
  const Cyclotomic5 c = t.v[2].times_phi();
  const Chirality same = t.chirality;
  const Chirality other = flipped(t.chirality);
  if (t.kind == HalfKind::Acute) {
    const Cyclotomic5 p = cut(a, c);
    const Cyclotomic5 q = cut(b, a);
    return {HalfTile{{b, c, p}, HalfKind::Acute, same},
            HalfTile{{b, q, p}, HalfKind::Acute, other},
            HalfTile{{q, p, a}, HalfKind::Obtuse, same}};
  }
  const Cyclotomic5 r = cut(c, b);
  return {HalfTile{{c, r, a}, HalfKind::Acute, other},
          HalfTile{{r, a, b}, HalfKind::Obtuse, same}};
}

Patch inflate(const Patch& p, int levels) {
  if (levels < 0) throw Error(ErrorCode::InvalidArgument, "negative inflation level");
  Patch cur = p;
  for (int level = 0; level < levels; ++level) {
    const std::size_t n = cur.tiles.size();
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + child_count(cur.tiles[i].kind);
    std::vector<HalfTile> next(offset[n]);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
      const auto children = subdivide(cur.tiles[i]);
      std::copy(children.begin(), children.end(), next.begin() + static_cast<std::ptrdiff_t>(offset[i]));
    }
    cur.tiles = std::move(next);
    cur.scale_exponent -= 1;
    cur.canonicalize();
  }
  return cur;
}

Patch inflate_serial(const Patch& p, int levels) {
  if (levels < 0) throw Error(ErrorCode::InvalidArgument, "negative inflation level");
  Patch cur = p;
  for (int level = 0; level < levels; ++level) {
    std::vector<HalfTile> next;
    next.reserve(cur.tiles.size() * 3);
    for (const auto& t : cur.tiles) {
      for (const auto& c : subdivide(t)) next.push_back(c);
    }
    cur.tiles = std::move(next);
    cur.scale_exponent -= 1;
    cur.canonicalize();
  }
  return cur;
}

ComposeResult compose(const Patch& p) {
  const std::unordered_set<HalfTile, HalfTileHash> present(p.tiles.begin(), p.tiles.end());

  struct Candidate {
    HalfTile parent;
    std::vector<HalfTile> missing;
  };

  std::vector<std::vector<Candidate>> candidates(p.tiles.size());
  std::map<HalfTile, std::vector<std::size_t>> complete;  // parent -> claimed tile indices

  for (std::size_t i = 0; i < p.tiles.size(); ++i) {
    const HalfTile& tile = p.tiles[i];
    const Frame f = frame_of(tile);
    for (const Role& role : roles_for(tile.kind, tile.chirality)) {
      const int rotation = f.rotation - role.child_frame.rotation;
      const Cyclotomic5 origin = divide_by_phi(f.origin - unit(rotation) * role.child_frame.origin);
      Candidate cand{make_half_tile(role.parent_kind, role.parent_chirality, origin, rotation), {}};
      for (const auto& child : subdivide(cand.parent)) {
        if (!present.contains(child)) cand.missing.push_back(child);
      }
      if (cand.missing.empty()) complete[cand.parent].push_back(i);
      candidates[i].push_back(std::move(cand));
    }
  }

  // The two lower children of an acute parent also fill an obtuse parent, and
  // a true obtuse parent plus a neighbour can fill a spurious acute one, so
  // complete candidates overlap. Within each group of overlapping candidates
  // keep the disjoint selection covering the most tiles; a tie between two
  // different selections means the patch does not determine its parents.
  std::vector<HalfTile> parents;
  std::vector<std::vector<std::size_t>> members;
  for (auto& [parent, m] : complete) {
    parents.push_back(parent);
    members.push_back(std::move(m));
  }
  std::vector<std::vector<std::size_t>> owners(p.tiles.size());
  for (std::size_t k = 0; k < parents.size(); ++k) {
    for (std::size_t i : members[k]) owners[i].push_back(k);
  }

  std::vector<std::size_t> group(parents.size());
  for (std::size_t k = 0; k < parents.size(); ++k) group[k] = k;
  const auto find = [&](std::size_t k) {
    while (group[k] != k) k = group[k] = group[group[k]];
    return k;
  };
  for (const auto& o : owners) {
    for (std::size_t j = 1; j < o.size(); ++j) group[find(o[j])] = find(o[0]);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < parents.size(); ++k) groups[find(k)].push_back(k);

  std::vector<char> chosen(parents.size(), 0);
  std::vector<std::optional<std::size_t>> owner(p.tiles.size());
  constexpr std::size_t kMaxGroup = 48;
  for (const auto& [root, ks] : groups) {
    if (ks.size() == 1) {
      chosen[ks[0]] = 1;
      continue;
    }
    if (ks.size() > kMaxGroup) {
      throw Error(ErrorCode::NoComposition,
                  "ambiguous parents around tile " + std::to_string(members[ks[0]].front()));
    }
    std::vector<std::size_t> suffix(ks.size() + 1, 0);
    for (std::size_t j = ks.size(); j-- > 0;) suffix[j] = suffix[j + 1] + members[ks[j]].size();
    std::vector<char> used(p.tiles.size(), 0), pick(ks.size(), 0), best_pick;
    std::size_t best = 0, ties = 0;
    const auto search = [&](auto&& self, std::size_t j, std::size_t covered) -> void {
      if (covered + suffix[j] < best) return;
      if (j == ks.size()) {
        if (covered > best) {
          best = covered;
          best_pick = pick;
          ties = 1;
        } else if (covered == best) {
          ++ties;
        }
        return;
      }
      const auto& m = members[ks[j]];
      if (std::none_of(m.begin(), m.end(), [&](std::size_t i) { return used[i] != 0; })) {
        for (std::size_t i : m) used[i] = 1;
        pick[j] = 1;
        self(self, j + 1, covered + m.size());
        pick[j] = 0;
        for (std::size_t i : m) used[i] = 0;
      }
      self(self, j + 1, covered);
    };
    search(search, 0, 0);
    if (ties > 1) {
      throw Error(ErrorCode::NoComposition,
                  "tile " + std::to_string(members[ks[0]].front()) + " is a child of 2 complete parents");
    }
    for (std::size_t j = 0; j < ks.size(); ++j) chosen[ks[j]] = best_pick[j];
  }
  for (std::size_t k = 0; k < parents.size(); ++k) {
    if (!chosen[k]) continue;
    for (std::size_t i : members[k]) owner[i] = k;
  }

  ComposeResult result;
  std::optional<BucketGrid> grid;
  for (std::size_t i = 0; i < p.tiles.size(); ++i) {
    if (owner[i]) continue;
    if (!grid) {
      grid.emplace(2.0);
      for (std::size_t j = 0; j < p.tiles.size(); ++j) {
        grid->insert(static_cast<std::uint32_t>(j), centroid(p.tiles[j].v));
      }
    }
    // A candidate is contradicted when one of its missing children overlaps a
    // tile that is actually there.
    bool some_open = false;
    for (const auto& cand : candidates[i]) {
      bool contradicted = cand.missing.empty();  // complete but rejected
      for (const auto& child : cand.missing) {
        grid->visit(centroid(child.v), 2.0, [&](std::uint32_t j) {
          if (!contradicted && triangle_interiors_overlap(child.v, p.tiles[j].v)) contradicted = true;
        });
        if (contradicted) break;
      }
      if (!contradicted) {
        some_open = true;
        break;
      }
    }
    if (!some_open) {
      throw Error(ErrorCode::NoComposition,
                  "tile " + std::to_string(i) + " fits no parent of the subdivision table");
    }
    result.dropped.push_back(p.tiles[i]);
  }

  result.patch.scale_exponent = p.scale_exponent + 1;
  for (std::size_t k = 0; k < parents.size(); ++k) {
    if (chosen[k]) result.patch.tiles.push_back(parents[k]);
  }
  result.patch.canonicalize();
  return result;
}

TileCounts counts(const Patch& p) {
  TileCounts c;
  for (const auto& t : p.tiles) {
    if (t.kind == HalfKind::Acute) {
      ++c.acute;
    } else {
      ++c.obtuse;
    }
  }
  return c;
}

namespace {

int axis_direction(const Cyclotomic5& from, const Cyclotomic5& to, const Cyclotomic5& length) {
  const Cyclotomic5 d = to - from;
  for (int k = 0; k < 10; ++k) {
    if (length * unit(k) == d) return k;
  }
  throw Error(ErrorCode::InvalidArgument, "axis is not along a tenth root of unity");
}

}  // namespace

Pairing pair_halves(const Patch& p) {
  struct AxisKey {
    HalfKind kind;
    Cyclotomic5 apex;
    Cyclotomic5 end;
    auto operator<=>(const AxisKey&) const = default;
  };
  std::map<AxisKey, std::vector<std::size_t>> by_axis;
  for (std::size_t i = 0; i < p.tiles.size(); ++i) {
    const auto& t = p.tiles[i];
    by_axis[{t.kind, t.v[0], t.v[2]}].push_back(i);
  }

  Pairing out;
  for (const auto& [key, members] : by_axis) {
    const bool mirrored = members.size() == 2 && p.tiles[members[0]].chirality != p.tiles[members[1]].chirality;
    if (!mirrored) {
      for (std::size_t i : members) out.unpaired.push_back(p.tiles[i]);
      continue;
    }
    MarkedTile m;
    if (key.kind == HalfKind::Acute) {
      m.kind = TileKind::Kite;
      m.pose.translation = key.apex;
      m.pose.rotation = axis_direction(key.apex, key.end, Cyclotomic5::phi());
    } else {
      m.kind = TileKind::Dart;
      m.pose.translation = key.end;
      m.pose.rotation = axis_direction(key.end, key.apex, Cyclotomic5::integer(1));
    }
    out.tiles.push_back(m);
  }
  std::sort(out.tiles.begin(), out.tiles.end());
  std::sort(out.unpaired.begin(), out.unpaired.end());
  return out;
}

Patch split_tiles(const std::vector<MarkedTile>& tiles, int scale_exponent) {
  Patch p;
  p.scale_exponent = scale_exponent;
  for (const auto& m : tiles) {
    const auto v = m.vertices();
    // v = (tail|tip, side, head|reflex, side), counterclockwise.
    if (m.kind == TileKind::Kite) {
      p.tiles.push_back(HalfTile{{v[0], v[1], v[2]}, HalfKind::Acute, Chirality::Right});
      p.tiles.push_back(HalfTile{{v[0], v[3], v[2]}, HalfKind::Acute, Chirality::Left});
    } else {
      p.tiles.push_back(HalfTile{{v[2], v[3], v[0]}, HalfKind::Obtuse, Chirality::Right});
      p.tiles.push_back(HalfTile{{v[2], v[1], v[0]}, HalfKind::Obtuse, Chirality::Left});
    }
  }
  p.canonicalize();
  return p;
}

std::vector<PatchIssue> validate(const Patch& p) {
  std::vector<PatchIssue> issues;
  const std::size_t n = p.tiles.size();
  for (std::size_t i = 0; i < n; ++i) {
    try {
      frame_of(p.tiles[i]);
    } catch (const Error&) {
      issues.push_back({PatchIssue::Type::BadShape, i, i});
    }
  }
  if (!issues.empty()) return issues;

  BucketGrid grid(2.0);
  std::vector<std::complex<double>> centers(n);
  for (std::size_t i = 0; i < n; ++i) {
    centers[i] = centroid(p.tiles[i].v);
    grid.insert(static_cast<std::uint32_t>(i), centers[i]);
  }

  std::vector<std::vector<PatchIssue>> local(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(n); ++ii) {
    const std::size_t i = static_cast<std::size_t>(ii);
    auto& out = local[static_cast<std::size_t>(omp_get_thread_num())];
    grid.visit(centers[i], 2.0, [&](std::uint32_t j) {
      if (j <= i) return;
      const auto& s = p.tiles[i].v;
      const auto& t = p.tiles[j].v;
      if (triangle_interiors_overlap(s, t)) {
        out.push_back({PatchIssue::Type::Overlap, i, j});
        return;
      }
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
          if (on_open_segment(t[b], s[a], s[(a + 1) % 3]) || on_open_segment(s[b], t[a], t[(a + 1) % 3])) {
            out.push_back({PatchIssue::Type::PartialEdge, i, j});
            return;
          }
        }
      }
    });
  }
  for (auto& l : local) issues.insert(issues.end(), l.begin(), l.end());
  std::sort(issues.begin(), issues.end(), [](const PatchIssue& x, const PatchIssue& y) {
    return std::tie(x.first, x.second, x.type) < std::tie(y.first, y.second, y.type);
  });
  return issues;
}

GoldenInt area_scaled(const Patch& p) {
  GoldenInt total{};
  for (const auto& t : p.tiles) {
    GoldenInt a = doubled_area_scaled(t.v);
    if (a.sign() < 0) a = GoldenInt{} - a;
    total = total + a;
  }
  return total;
}

double area(const Patch& p) {
  return cross_scaled_to_double(GoldenNumber(0LL) - area_scaled(p).exact()) / 2.0;
}

}  // namespace penrose::robinson
