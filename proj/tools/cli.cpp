#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "penrose/document.hpp"
#include "penrose/error.hpp"
#include "penrose/kitedart.hpp"
#include "penrose/pentagrid.hpp"
#include "penrose/robinson.hpp"
#include "penrose/svg.hpp"
#include "penrose/tilingspace.hpp"

namespace penrose::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool usage_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::UnknownSeed:
    case ErrorCode::InvalidArgument:
    case ErrorCode::Inadmissible:
    case ErrorCode::OddLength:
    case ErrorCode::InvalidTower:
      return true;
    default:
      return false;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& bytes, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << bytes;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << bytes;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::array<Rational, 5> parse_gamma(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 5) throw UsageError("--gamma needs exactly five comma-separated offsets");
  std::array<Rational, 5> g;
  for (int j = 0; j < 5; ++j) g[j] = parse_rational(parts[j]);
  return g;
}

std::string gamma_string(const std::array<Rational, 5>& g) {
  std::vector<std::string> parts;
  for (const auto& x : g) parts.push_back(x.str());
  return join(parts, ",");
}

// The last offset moves by eps * u, u uniform in [-1, 1) with 53-bit
// resolution; the mapping uses integers only, so it is the same everywhere.
Rational perturbation(const Rational& eps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t m = rng() >> 11;
  const BigInt two53 = BigInt(1) << 53;
  return eps * Rational(2 * BigInt(m) - two53, two53);
}

std::string format_tower(const tilingspace::Tower& t) {
  std::vector<std::string> ps;
  for (int p : t.positions) ps.push_back(std::to_string(p));
  return std::string(robinson::to_string(t.root)) + ":" + join(ps, ",");
}

robinson::HalfKind parse_root(const std::string& s) {
  if (s == "acute") return robinson::HalfKind::Acute;
  if (s == "obtuse") return robinson::HalfKind::Obtuse;
  throw UsageError("root must be acute or obtuse, got '" + s + "'");
}

tilingspace::Tower parse_tower(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("--tower expects root:p0,p1,... e.g. acute:0,2");
  tilingspace::Tower t;
  t.root = parse_root(s.substr(0, colon));
  const std::string rest = s.substr(colon + 1);
  if (!rest.empty()) {
    for (const auto& p : split(rest, ',')) {
      if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos) {
        throw UsageError("tower positions must be non-negative integers");
      }
      t.positions.push_back(std::stoi(p));
    }
  }
  return t;
}

struct Options {
  // inflate
  std::string seed = "sun";
  int levels = 0;
  bool pair = false;
  // pentagrid / project
  std::string gamma;
  std::string radius = "8";
  bool sum_zero = false;
  bool no_normalize = false;
  std::string perturb;
  std::uint64_t rng_seed = 0;
  int box = 6;
  // sequence
  bool encode = false;
  bool decode = false;
  std::string tower;
  std::string bits;
  std::string root = "acute";
  // verify / render
  std::string in;
  std::string out;
  bool decorations = false;
  // atlas / probe
  int atlas_levels = 6;
  int n = 5;
};

pentagrid::Pentagrid build_grid(const Options& o, std::map<std::string, std::string>& params) {
  pentagrid::Pentagrid g;
  g.gamma = parse_gamma(o.gamma);
  if (!o.perturb.empty()) {
    g.gamma[4] += perturbation(parse_rational(o.perturb), o.rng_seed);
    params["perturb"] = o.perturb;
    params["rng_seed"] = std::to_string(o.rng_seed);
  }
  if (!o.no_normalize) {
    g = g.normalized();
  } else {
    g.sum_zero = o.sum_zero;
    g.validate();
  }
  params["gamma"] = gamma_string(g.gamma);
  params["sum_zero"] = g.sum_zero ? "true" : "false";
  return g;
}

double parse_radius(const std::string& s) {
  const Rational r = parse_rational(s);
  if (r <= 0) throw UsageError("--radius must be positive");
  return static_cast<double>(r);
}

int cmd_inflate(const Options& o, std::ostream& out) {
  auto patch = robinson::inflate(robinson::seed_patch(o.seed), o.levels);
  document::TilingDocument doc =
      o.pair ? document::from_pairing(robinson::pair_halves(patch), patch.scale_exponent) : document::from_patch(patch);
  doc.command = "inflate";
  doc.parameters = {{"seed", o.seed}, {"levels", std::to_string(o.levels)}, {"pair", o.pair ? "true" : "false"}};
  emit(document::serialize(doc), o.out, out);
  return kOk;
}

int cmd_pentagrid(const Options& o, std::ostream& out, std::ostream& err) {
  std::map<std::string, std::string> params{{"radius", o.radius}};
  const auto g = build_grid(o, params);
  const double radius = parse_radius(o.radius);
  const auto reg = pentagrid::is_regular(g, radius);
  if (!reg.regular) {
    err << "singular pentagrid: " << reg.singular.size() << " point(s) on three or more lines\n";
    for (const auto& p : reg.singular) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "  (%.9f, %.9f) lines", p.z.real(), p.z.imag());
      err << buf;
      for (std::size_t i = 0; i < p.families.size(); ++i) err << " " << p.families[i] << ":" << p.lines[i];
      err << "\n";
    }
    err << "use --perturb EPS to move the last offset\n";
    return kValidationFailure;
  }
  auto doc = document::from_rhombi(pentagrid::generate_tiling(g, radius));
  doc.command = "pentagrid";
  doc.parameters = params;
  emit(document::serialize(doc), o.out, out);
  return kOk;
}

int cmd_project(const Options& o, std::ostream& out) {
  std::map<std::string, std::string> params{{"radius", o.radius}, {"box", std::to_string(o.box)}};
  const auto g = build_grid(o, params);
  const auto pts = pentagrid::cut_and_project(g, o.box, parse_radius(o.radius));
  nlohmann::json gen = {{"command", "project"}, {"parameters", params}};
  std::string s = "{\n\"format_version\": " + std::to_string(document::kFormatVersion) + ",\n";
  s += "\"generator\": " + gen.dump() + ",\n\"points\": [";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    nlohmann::json p = {{"index_vector", pts[i].k}, {"point", pts[i].point.coeffs()}};
    s += (i ? ",\n" : "\n") + p.dump();
  }
  s += pts.empty() ? "]\n}\n" : "\n]\n}\n";
  emit(s, o.out, out);
  return kOk;
}

int cmd_sequence(const Options& o, std::ostream& out) {
  if (o.encode == o.decode) throw UsageError("sequence needs exactly one of --encode or --decode");
  if (o.encode) {
    if (o.tower.empty()) throw UsageError("--encode needs --tower root:p0,p1,...");
    out << tilingspace::tower_to_sequence(parse_tower(o.tower)) << "\n";
    return kOk;
  }
  const auto t = tilingspace::sequence_to_tower(o.bits, parse_root(o.root));
  out << format_tower(t) << "\n";
  std::vector<std::string> kinds;
  for (std::size_t k = 0; k <= t.depth(); ++k) kinds.push_back(robinson::to_string(t.kind_at(k)));
  out << "kinds T0..T" << t.depth() << ": " << join(kinds, " ") << "\n";
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto doc = document::parse(read_file(o.in));
  bool ok = true;
  out << "tiles: " << doc.tiles.size() << "\n";
  out << "exact vertices: yes\n";

  const auto patch = document::to_patch(doc);
  if (!patch.tiles.empty()) {
    const auto issues = robinson::validate(patch);
    out << "half-tiles: " << patch.tiles.size() << ", edge-to-edge issues: " << issues.size() << "\n";
    ok = ok && issues.empty();
  }
  const auto tiles = document::to_tiles(doc);
  if (!tiles.empty()) {
    const auto verdict = kitedart::check_legal(tiles);
    out << "kites/darts: " << tiles.size() << ", matching-rule violations: " << verdict.violations.size() << "\n";
    for (std::size_t i = 0; i < std::min<std::size_t>(verdict.violations.size(), 10); ++i) {
      const auto& v = verdict.violations[i];
      out << "  " << kitedart::to_string(v.type) << " " << v.first << " " << v.second << ": " << v.detail << "\n";
    }
    ok = ok && verdict.legal();
  }
  const auto rhombi = document::to_rhombi(doc);
  if (!rhombi.empty()) {
    pentagrid::RhombusPatch rp;
    rp.rhombi = rhombi;
    const auto a = pentagrid::audit(rp);
    std::size_t bad_index = 0;
    for (const auto& h : rhombi) {
      for (int i = 0; i < 4; ++i) {
        if (!(pentagrid::project(h.index[i]) == h.v[i])) ++bad_index;
      }
    }
    out << "rhombi: " << rhombi.size() << " (thick " << a.thick << ", thin " << a.thin << "), non-unit sides: "
        << a.non_unit_sides << ", overfull edges: " << a.overfull_edges << ", index/vertex mismatches: " << bad_index
        << "\n";
    ok = ok && a.non_unit_sides == 0 && a.overfull_edges == 0 && a.duplicate_rhombi == 0 && bad_index == 0;
    auto it = doc.parameters.find("sum_zero");
    if (it != doc.parameters.end() && it->second == "true") {
      rp.grid.sum_zero = true;
      const bool sums = pentagrid::index_sum_check(rp);
      out << "index sums in {1,2,3,4}: " << (sums ? "yes" : "no") << "\n";
      ok = ok && sums;
    }
  }
  out << (ok ? "valid" : "INVALID") << "\n";
  return ok ? kOk : kValidationFailure;
}

int cmd_atlas(const Options& o, std::ostream& out) {
  const auto stars = kitedart::vertex_atlas(o.atlas_levels);
  for (const auto& s : stars) out << s.name() << ": " << s.to_string() << "\n";
  out << "stars: " << stars.size() << "\n";
  return kOk;
}

int cmd_render(const Options& o, std::ostream& out) {
  const auto doc = document::parse(read_file(o.in));
  svg::RenderStyle style;
  style.decorations = o.decorations;
  emit(svg::render_svg(doc, style), o.out, out);
  return kOk;
}

int cmd_probe(const Options& o, std::ostream& out) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f\n", pentagrid::density_probe(o.n, o.box));
  out << buf;
  return kOk;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  // cpp_int reads a leading 0 as octal.
  auto decimal = [](std::string d) {
    d.erase(0, std::min(d.find_first_not_of('0'), d.size()));
    return BigInt(d.empty() ? "0" : d);
  };
  auto bad = [&] { return Error(ErrorCode::InvalidArgument, "not a rational number: '" + text + "'"); };
  if (text.empty()) throw bad();
  auto integer = [&](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size() || s.find_first_not_of("0123456789", i) != std::string::npos) throw bad();
    const bool neg = s[0] == '-';
    const BigInt v = decimal(s.substr(i));
    return neg ? BigInt(-v) : v;
  };
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const BigInt num = integer(text.substr(0, slash), true);
    const BigInt den = integer(text.substr(slash + 1), false);
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  std::string s = text;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    s.erase(0, 1);
  }
  const auto dot = s.find('.');
  std::string whole = dot == std::string::npos ? s : s.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw bad();
  if ((whole + frac).find_first_not_of("0123456789") != std::string::npos) throw bad();
  BigInt den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  const BigInt num = decimal(whole + frac);
  Rational r(num, den);
  return neg ? Rational(-r) : r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Penrose tilings: substitution, pentagrid, verification and rendering", "penrose"};
  app.require_subcommand(1, 1);
  Options o;

  auto* inflate = app.add_subcommand("inflate", "Inflate a seed patch of half-tiles");
  inflate->add_option("--seed", o.seed, "acute, obtuse, sun or star")->required();
  inflate->add_option("--levels", o.levels, "Number of inflations")->required()->check(CLI::Range(0, 30));
  inflate->add_flag("--pair", o.pair, "Join mirror halves into kites and darts");
  inflate->add_option("--out", o.out, "Output JSON (default stdout)");

  auto grid_options = [&](CLI::App* c) {
    c->add_option("--gamma", o.gamma, "Five offsets g0,...,g4 (rationals or decimals)")->required();
    c->add_option("--radius", o.radius, "Disk radius");
    c->add_flag("--sum-zero", o.sum_zero, "Require the offsets to sum to zero");
    c->add_flag("--no-normalize", o.no_normalize, "Keep offsets as given instead of subtracting their mean");
    c->add_option("--perturb", o.perturb, "Move the last offset by up to this amount");
    c->add_option("--rng-seed", o.rng_seed, "Seed for --perturb");
    c->add_option("--out", o.out, "Output JSON (default stdout)");
  };
  auto* grid = app.add_subcommand("pentagrid", "Rhombus tiling dual to a pentagrid");
  grid_options(grid);
  auto* project = app.add_subcommand("project", "Cut-and-project vertex set");
  grid_options(project);
  project->add_option("--box", o.box, "Bound B on |k_j|")->check(CLI::Range(0, 40));

  auto* seq = app.add_subcommand("sequence", "Convert between towers and index sequences");
  seq->add_flag("--encode", o.encode, "Tower to bits");
  seq->add_flag("--decode", o.decode, "Bits to tower");
  seq->add_option("--tower", o.tower, "root:p0,p1,... with p_k the child position of T_k");
  seq->add_option("--bits", o.bits, "Admissible bit string of even length");
  seq->add_option("--root", o.root, "Root kind when decoding (acute or obtuse)");

  auto* verify = app.add_subcommand("verify", "Check a tiling document");
  verify->add_option("--in", o.in, "Input JSON")->required();

  auto* atlas = app.add_subcommand("atlas", "List the vertex stars of inflated sun and star patches");
  atlas->add_option("--levels", o.atlas_levels, "Inflation levels")->check(CLI::Range(0, kitedart::kMaxAtlasLevels));

  auto* render = app.add_subcommand("render", "Render a tiling document as SVG");
  render->add_option("--in", o.in, "Input JSON")->required();
  render->add_option("--out", o.out, "Output SVG (default stdout)");
  render->add_flag("--decorations", o.decorations, "Draw matching-rule arcs");

  auto* probe = app.add_subcommand("probe", "Smallest nonzero |sum k_j exp(2 pi i j/n)| over a box");
  probe->add_option("--n", o.n, "Number of directions")->check(CLI::Range(1, 12));
  probe->add_option("--box", o.box, "Bound B on |k_j|")->check(CLI::Range(1, 6));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (inflate->parsed()) return cmd_inflate(o, out);
    if (grid->parsed()) return cmd_pentagrid(o, out, err);
    if (project->parsed()) return cmd_project(o, out);
    if (seq->parsed()) return cmd_sequence(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (atlas->parsed()) return cmd_atlas(o, out);
    if (render->parsed()) return cmd_render(o, out);
    if (probe->parsed()) return cmd_probe(o, out);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return usage_code(e.code()) ? kUsageError : kValidationFailure;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kValidationFailure;
  }
  return kUsageError;
}

}  // namespace penrose::cli
