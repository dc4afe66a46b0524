#include "penrose/document.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "json.hpp"
#include "penrose/error.hpp"

namespace penrose::document {

using nlohmann::json;

namespace {

const char* const kHalfKinds[] = {"acute", "obtuse"};
const char* const kTileKinds[] = {"kite", "dart"};
const char* const kRhombusKinds[] = {"thick", "thin"};

bool is_half(const std::string& k) { return k == kHalfKinds[0] || k == kHalfKinds[1]; }
bool is_tile(const std::string& k) { return k == kTileKinds[0] || k == kTileKinds[1]; }
bool is_rhombus(const std::string& k) { return k == kRhombusKinds[0] || k == kRhombusKinds[1]; }

json tile_json(const DocTile& t) {
  json j = json::object();
  j["kind"] = t.kind;
  if (t.chirality) j["chirality"] = *t.chirality;
  json vs = json::array();
  for (const auto& v : t.vertices) vs.push_back(v.coeffs());
  j["vertices"] = std::move(vs);
  if (t.families) j["families"] = *t.families;
  if (!t.index_vectors.empty()) j["index_vectors"] = t.index_vectors;
  return j;
}

[[noreturn]] void fail(ErrorCode code, const std::string& field, const std::string& what) {
  throw Error(code, field + ": " + what);
}

std::int64_t integer_at(const json& j, const std::string& field) {
  if (j.is_number_unsigned()) {
    if (j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      fail(ErrorCode::NonIntegerVertex, field, "integer out of 64-bit range");
    }
    return static_cast<std::int64_t>(j.get<std::uint64_t>());
  }
  if (!j.is_number_integer()) fail(ErrorCode::NonIntegerVertex, field, "expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

const json& member(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(ErrorCode::MalformedDocument, where, std::string("missing field '") + key + "'");
  return *it;
}

DocTile parse_tile(const json& j, const std::string& where) {
  if (!j.is_object()) fail(ErrorCode::MalformedDocument, where, "tile must be an object");
  DocTile t;
  const json& kind = member(j, "kind", where);
  if (!kind.is_string()) fail(ErrorCode::MalformedKind, where + ".kind", "kind must be a string");
  t.kind = kind.get<std::string>();
  if (!is_half(t.kind) && !is_tile(t.kind) && !is_rhombus(t.kind)) {
    fail(ErrorCode::MalformedKind, where + ".kind", "unknown tile kind '" + t.kind + "'");
  }
  if (is_half(t.kind)) {
    const json& c = member(j, "chirality", where);
    if (!c.is_string() || (c != "left" && c != "right")) {
      fail(ErrorCode::MalformedKind, where + ".chirality", "chirality must be 'left' or 'right'");
    }
    t.chirality = c.get<std::string>();
  } else if (j.contains("chirality")) {
    fail(ErrorCode::MalformedDocument, where + ".chirality", "only acute/obtuse tiles carry a chirality");
  }

  const json& vs = member(j, "vertices", where);
  const std::size_t want = is_half(t.kind) ? 3 : 4;
  if (!vs.is_array() || vs.size() != want) {
    fail(ErrorCode::MalformedDocument, where + ".vertices", "expected " + std::to_string(want) + " vertices");
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string f = where + ".vertices[" + std::to_string(i) + "]";
    if (!vs[i].is_array() || vs[i].size() != 4) fail(ErrorCode::NonIntegerVertex, f, "expected 4 integers");
    Cyclotomic5::Coeffs c{};
    for (std::size_t k = 0; k < 4; ++k) c[k] = integer_at(vs[i][k], f + "[" + std::to_string(k) + "]");
    t.vertices.emplace_back(c);
  }

  if (is_rhombus(t.kind)) {
    const json& fam = member(j, "families", where);
    if (!fam.is_array() || fam.size() != 2 || !fam[0].is_number_integer() || !fam[1].is_number_integer()) {
      fail(ErrorCode::MalformedDocument, where + ".families", "expected [r, s]");
    }
    const int r = fam[0].get<int>(), s = fam[1].get<int>();
    if (r < 0 || s > 4 || r >= s) fail(ErrorCode::MalformedDocument, where + ".families", "need 0 <= r < s <= 4");
    t.families = std::array<int, 2>{r, s};
    if (j.contains("index_vectors")) {
      const json& iv = j["index_vectors"];
      if (!iv.is_array() || iv.size() != 4) fail(ErrorCode::MalformedDocument, where + ".index_vectors", "expected 4 vectors");
      for (std::size_t i = 0; i < 4; ++i) {
        const std::string f = where + ".index_vectors[" + std::to_string(i) + "]";
        if (!iv[i].is_array() || iv[i].size() != 5) fail(ErrorCode::MalformedDocument, f, "expected 5 integers");
        pentagrid::GridIndexVector k{};
        for (std::size_t m = 0; m < 5; ++m) k[m] = integer_at(iv[i][m], f + "[" + std::to_string(m) + "]");
        t.index_vectors.push_back(k);
      }
    }
  } else if (j.contains("families") || j.contains("index_vectors")) {
    fail(ErrorCode::MalformedDocument, where, "only thick/thin tiles carry families or index vectors");
  }
  return t;
}

}  // namespace

void TilingDocument::canonicalize() {
  std::sort(tiles.begin(), tiles.end(), [](const DocTile& a, const DocTile& b) {
    return std::tie(a.vertices, a.kind, a.chirality) < std::tie(b.vertices, b.kind, b.chirality);
  });
}

std::string serialize(const TilingDocument& doc) {
  TilingDocument d = doc;
  d.canonicalize();
  json gen = json::object();
  gen["command"] = d.command;
  gen["parameters"] = d.parameters;
  std::string out = "{\n";
  out += "\"format_version\": " + std::to_string(d.format_version) + ",\n";
  out += "\"generator\": " + gen.dump() + ",\n";
  out += "\"scale_exponent\": " + std::to_string(d.scale_exponent) + ",\n";
  out += "\"tiles\": [";
  for (std::size_t i = 0; i < d.tiles.size(); ++i) {
    out += i == 0 ? "\n" : ",\n";
    out += tile_json(d.tiles[i]).dump();
  }
  out += d.tiles.empty() ? "]\n" : "\n]\n";
  out += "}\n";
  return out;
}

TilingDocument parse(std::string_view bytes) {
  json j;
  try {
    j = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedDocument, "byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) fail(ErrorCode::MalformedDocument, "document", "top level must be an object");
  TilingDocument d;
  const json& ver = member(j, "format_version", "document");
  if (!ver.is_number_integer()) fail(ErrorCode::UnknownVersion, "format_version", "must be an integer");
  d.format_version = ver.get<int>();
  if (d.format_version != kFormatVersion) {
    fail(ErrorCode::UnknownVersion, "format_version", "unsupported version " + std::to_string(d.format_version));
  }
  const json& gen = member(j, "generator", "document");
  if (!gen.is_object()) fail(ErrorCode::MalformedDocument, "generator", "must be an object");
  const json& cmd = member(gen, "command", "generator");
  if (!cmd.is_string()) fail(ErrorCode::MalformedDocument, "generator.command", "must be a string");
  d.command = cmd.get<std::string>();
  if (gen.contains("parameters")) {
    const json& ps = gen["parameters"];
    if (!ps.is_object()) fail(ErrorCode::MalformedDocument, "generator.parameters", "must be an object");
    for (const auto& [k, v] : ps.items()) {
      if (!v.is_string()) fail(ErrorCode::MalformedDocument, "generator.parameters." + k, "must be a string");
      d.parameters[k] = v.get<std::string>();
    }
  }
  const json& se = member(j, "scale_exponent", "document");
  if (!se.is_number_integer()) fail(ErrorCode::MalformedDocument, "scale_exponent", "must be an integer");
  d.scale_exponent = se.get<int>();
  const json& tiles = member(j, "tiles", "document");
  if (!tiles.is_array()) fail(ErrorCode::MalformedDocument, "tiles", "must be an array");
  for (std::size_t i = 0; i < tiles.size(); ++i) d.tiles.push_back(parse_tile(tiles[i], "tiles[" + std::to_string(i) + "]"));
  return d;
}

// ---------------------------------------------------------------------------
// Conversions

namespace {

DocTile half_doc(const robinson::HalfTile& t) {
  return DocTile{robinson::to_string(t.kind), std::string(robinson::to_string(t.chirality)),
                 std::vector<Cyclotomic5>(t.v.begin(), t.v.end()), std::nullopt, {}};
}

DocTile tile_doc(const MarkedTile& t) {
  const auto v = t.vertices();
  return DocTile{to_string(t.kind), std::nullopt, std::vector<Cyclotomic5>(v.begin(), v.end()), std::nullopt, {}};
}

}  // namespace

TilingDocument from_patch(const robinson::Patch& p) {
  TilingDocument d;
  d.scale_exponent = p.scale_exponent;
  for (const auto& t : p.tiles) d.tiles.push_back(half_doc(t));
  d.canonicalize();
  return d;
}

TilingDocument from_tiles(const std::vector<MarkedTile>& tiles, int scale_exponent) {
  TilingDocument d;
  d.scale_exponent = scale_exponent;
  for (const auto& t : tiles) d.tiles.push_back(tile_doc(t));
  d.canonicalize();
  return d;
}

TilingDocument from_pairing(const robinson::Pairing& pairing, int scale_exponent) {
  TilingDocument d = from_tiles(pairing.tiles, scale_exponent);
  for (const auto& t : pairing.unpaired) d.tiles.push_back(half_doc(t));
  d.canonicalize();
  return d;
}

TilingDocument from_rhombi(const pentagrid::RhombusPatch& p) {
  TilingDocument d;
  for (const auto& h : p.rhombi) {
    d.tiles.push_back(DocTile{pentagrid::to_string(h.shape), std::nullopt,
                              std::vector<Cyclotomic5>(h.v.begin(), h.v.end()), std::array<int, 2>{h.r, h.s},
                              std::vector<pentagrid::GridIndexVector>(h.index.begin(), h.index.end())});
  }
  d.canonicalize();
  return d;
}

robinson::Patch to_patch(const TilingDocument& doc) {
  robinson::Patch p;
  p.scale_exponent = doc.scale_exponent;
  for (std::size_t i = 0; i < doc.tiles.size(); ++i) {
    const auto& t = doc.tiles[i];
    if (!is_half(t.kind)) continue;
    robinson::HalfTile h;
    h.kind = t.kind == "acute" ? robinson::HalfKind::Acute : robinson::HalfKind::Obtuse;
    h.chirality = t.chirality == "left" ? robinson::Chirality::Left : robinson::Chirality::Right;
    std::copy(t.vertices.begin(), t.vertices.end(), h.v.begin());
    try {
      robinson::frame_of(h);
    } catch (const Error& e) {
      fail(ErrorCode::MalformedDocument, "tiles[" + std::to_string(i) + "]", e.what());
    }
    p.tiles.push_back(h);
  }
  return p;
}

std::vector<MarkedTile> to_tiles(const TilingDocument& doc) {
  std::vector<MarkedTile> out;
  for (std::size_t i = 0; i < doc.tiles.size(); ++i) {
    const auto& t = doc.tiles[i];
    if (!is_tile(t.kind)) continue;
    MarkedTile m;
    m.kind = t.kind == "kite" ? TileKind::Kite : TileKind::Dart;
    m.pose.translation = t.vertices[0];
    const Cyclotomic5 axis = t.vertices[2] - t.vertices[0];
    bool ok = false;
    for (int k = 0; k < 10 && !ok; ++k) {
      const Cyclotomic5 u = Cyclotomic5::unit(k);
      if ((m.kind == TileKind::Kite ? u.times_phi() : u) == axis) {
        m.pose.rotation = k;
        ok = true;
      }
    }
    const auto v = m.vertices();
    if (!ok || !std::equal(v.begin(), v.end(), t.vertices.begin())) {
      fail(ErrorCode::MalformedDocument, "tiles[" + std::to_string(i) + "].vertices", "not a unit " + t.kind);
    }
    out.push_back(m);
  }
  return out;
}

std::vector<pentagrid::Rhombus> to_rhombi(const TilingDocument& doc) {
  std::vector<pentagrid::Rhombus> out;
  for (const auto& t : doc.tiles) {
    if (!is_rhombus(t.kind)) continue;
    pentagrid::Rhombus h;
    h.r = (*t.families)[0];
    h.s = (*t.families)[1];
    std::copy(t.vertices.begin(), t.vertices.end(), h.v.begin());
    if (t.index_vectors.size() == 4) {
      std::copy(t.index_vectors.begin(), t.index_vectors.end(), h.index.begin());
      h.k_r = h.index[0][h.r];
      h.k_s = h.index[0][h.s];
    }
    h.shape = t.kind == "thick" ? pentagrid::Shape::Thick : pentagrid::Shape::Thin;
    out.push_back(h);
  }
  return out;
}

}  // namespace penrose::document
