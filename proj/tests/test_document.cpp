#include <regex>

#include "doctest.h"
#include "json.hpp"
#include "penrose/document.hpp"
#include "penrose/error.hpp"
#include "penrose/kitedart.hpp"
#include "penrose/svg.hpp"

using namespace penrose;
using namespace penrose::document;
namespace rb = penrose::robinson;

namespace {

ErrorCode code_of(std::string_view text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parse accepted a bad document");
  return ErrorCode::InvalidArgument;
}

std::string message_of(std::string_view text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

pentagrid::Pentagrid sample_grid() {
  pentagrid::Pentagrid g;
  g.gamma = {Rational(1, 5), Rational(1, 7), Rational(1, 11), Rational(1, 13), Rational(0)};
  return g.normalized();
}

const char* kMinimal = R"({"format_version": 1, "generator": {"command": "x", "parameters": {}}, "scale_exponent": 0, "tiles": [)";

}  // namespace

TEST_CASE("half-tile documents round trip") {
  for (rb::Seed s : {rb::Seed::Acute, rb::Seed::Obtuse, rb::Seed::Sun, rb::Seed::Star}) {
    const rb::Patch p = rb::inflate(rb::seed_patch(s), 3);
    const TilingDocument d = from_patch(p);
    const std::string bytes = serialize(d);
    const TilingDocument back = parse(bytes);
    CHECK(back == d);
    CHECK(serialize(back) == bytes);
    CHECK(to_patch(back) == p);
    CHECK(rb::validate(to_patch(back)).empty());
  }
  const TilingDocument eight = from_patch(rb::inflate(rb::seed_patch(rb::Seed::Acute), 2));
  CHECK(eight.tiles.size() == 8);
  CHECK(count(serialize(eight), "\"kind\"") == 8);
}

TEST_CASE("kite/dart and rhombus documents round trip") {
  const auto pairing = rb::pair_halves(rb::inflate(rb::seed_patch(rb::Seed::Sun), 3));
  const TilingDocument d = from_pairing(pairing, -3);
  const TilingDocument back = parse(serialize(d));
  CHECK(back == d);
  auto tiles = to_tiles(back);
  auto want = pairing.tiles;
  std::sort(tiles.begin(), tiles.end());
  std::sort(want.begin(), want.end());
  CHECK(tiles == want);
  CHECK(back.scale_exponent == -3);
  CHECK(kitedart::check_legal(tiles).legal());

  const auto rp = pentagrid::generate_tiling(sample_grid(), 4.0);
  const TilingDocument r = from_rhombi(rp);
  const TilingDocument rback = parse(serialize(r));
  CHECK(rback == r);
  const auto rh = to_rhombi(rback);
  REQUIRE(rh.size() == rp.rhombi.size());
  std::set<std::vector<Cyclotomic5>> a, b;
  for (const auto& x : rh) a.insert({x.v.begin(), x.v.end()});
  for (const auto& x : rp.rhombi) b.insert({x.v.begin(), x.v.end()});
  CHECK(a == b);
}

TEST_CASE("empty document") {
  const TilingDocument d = from_patch(rb::Patch{});
  const std::string bytes = serialize(d);
  const auto j = nlohmann::json::parse(bytes);
  CHECK(j["format_version"] == 1);
  CHECK(j["tiles"].is_array());
  CHECK(j["tiles"].empty());
  CHECK(parse(bytes) == d);
}

TEST_CASE("serialisation is canonical and float-free") {
  rb::Patch p = rb::inflate(rb::seed_patch(rb::Seed::Sun), 2);
  TilingDocument d1 = from_patch(p);
  TilingDocument d2 = d1;
  std::reverse(d2.tiles.begin(), d2.tiles.end());
  CHECK(serialize(d1) == serialize(d2));
  const std::string s = serialize(d1);
  CHECK(s.find('.') == std::string::npos);
  CHECK(s.find('e') != std::string::npos);  // "acute", "scale_exponent"
  const auto j = nlohmann::json::parse(s);
  for (const auto& t : j["tiles"]) {
    for (const auto& v : t["vertices"]) {
      REQUIRE(v.size() == 4);
      for (const auto& c : v) CHECK(c.is_number_integer());
    }
  }
}

TEST_CASE("parse errors name the problem") {
  CHECK(code_of("{") == ErrorCode::MalformedDocument);
  CHECK(code_of("[]") == ErrorCode::MalformedDocument);
  CHECK(code_of(R"({"format_version": 2, "generator": {"command": "x", "parameters": {}}, "scale_exponent": 0, "tiles": []})") ==
        ErrorCode::UnknownVersion);
  CHECK(code_of(std::string(kMinimal) + R"({"kind": "hexagon", "vertices": [[0,0,0,0]]}]})") == ErrorCode::MalformedKind);
  const std::string fl = std::string(kMinimal) +
                         R"({"kind": "kite", "vertices": [[0,0,0,0],[1,0,0,0],[0,1,0,0],[0,0,1,0]]},
                            {"kind": "kite", "vertices": [[0,0,0,0],[1,0,0.5,0],[0,1,0,0],[0,0,1,0]]}]})";
  CHECK(code_of(fl) == ErrorCode::NonIntegerVertex);
  CHECK(message_of(fl).find("tiles[1].vertices[1][2]") != std::string::npos);
  CHECK(code_of(std::string(kMinimal) + R"({"kind": "kite", "vertices": [[0,0,0]]}]})") == ErrorCode::MalformedDocument);
  CHECK(code_of(R"({"generator": {"command": "x", "parameters": {}}, "scale_exponent": 0, "tiles": []})") ==
        ErrorCode::MalformedDocument);
  // A half-tile whose vertices are not a prototile image.
  const TilingDocument bad = parse(std::string(kMinimal) +
                                   R"({"chirality": "right", "kind": "acute", "vertices": [[0,0,0,0],[1,0,0,0],[0,1,0,0]]}]})");
  CHECK_THROWS_AS(to_patch(bad), Error);
}

TEST_CASE("svg output") {
  const std::string empty = svg::render_svg(from_patch(rb::Patch{}));
  CHECK(empty.rfind("<?xml", 0) == 0);
  CHECK(empty.find("<svg") != std::string::npos);
  CHECK(count(empty, "<path") == 0);

  const auto sun = rb::pair_halves(rb::seed_patch(rb::Seed::Sun));
  const TilingDocument d = from_pairing(sun, 0);
  const std::string a = svg::render_svg(d);
  CHECK(count(a, "<path") == 5);
  CHECK(a == svg::render_svg(parse(serialize(d))));

  svg::RenderStyle deco;
  deco.decorations = true;
  CHECK(count(svg::render_svg(d, deco), "<path") > 5);

  // Coordinates carry exactly six decimals and no negative zero.
  const std::regex num(R"(-?\d+\.(\d+))");
  const std::string whole = svg::render_svg(from_patch(rb::inflate(rb::seed_patch(rb::Seed::Star), 3)));
  const std::string big = whole.substr(whole.find("<path"));
  std::size_t seen = 0;
  for (auto it = std::sregex_iterator(big.begin(), big.end(), num); it != std::sregex_iterator(); ++it) {
    CHECK((*it)[1].length() == 6);
    CHECK(it->str() != "-0.000000");
    ++seen;
  }
  CHECK(seen > 100);
}

TEST_CASE("render scales by phi to the scale exponent") {
  // An inflated patch drawn at its scale exponent has the seed's size.
  const auto seed = svg::render_svg(from_patch(rb::seed_patch(rb::Seed::Sun)));
  const auto big = svg::render_svg(from_patch(rb::inflate(rb::seed_patch(rb::Seed::Sun), 4)));
  const std::regex vb(R"re(viewBox="([-\d.]+) ([-\d.]+) ([\d.]+) ([\d.]+)")re");
  std::smatch m1, m2;
  REQUIRE(std::regex_search(seed, m1, vb));
  REQUIRE(std::regex_search(big, m2, vb));
  CHECK(std::stod(m1[3]) == doctest::Approx(std::stod(m2[3])).epsilon(1e-4));
}
