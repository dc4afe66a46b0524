#include "penrose/pentagrid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <unordered_map>

#include "penrose/error.hpp"

namespace penrose::pentagrid {

namespace {

constexpr double kFilter = 1e-7;

int mod5(int m) { return ((m % 5) + 5) % 5; }

// sin(72 m deg) in units of sin 36 deg.
GoldenNumber sine_ratio(int m) {
  switch (mod5(m)) {
    case 1: return GoldenNumber::phi();
    case 2: return GoldenNumber(1LL);
    case 3: return GoldenNumber(-1LL);
    case 4: return -GoldenNumber::phi();
    default: return GoldenNumber(0LL);
  }
}

// e_j = alpha e_r + beta e_s, where e_j = exp(2 pi i j / 5).
struct Decomposition {
  GoldenNumber alpha, beta;
  double alpha_d = 0.0, beta_d = 0.0;
};

struct PairData {
  std::array<Decomposition, 5> dec;
  // cos and sin^2 of the angle between e_r and e_s.
  GoldenNumber cos_delta, sin2_delta;
  double cos_d = 0.0, sin_d = 0.0;
};

const PairData& pair_data(int r, int s) {
  static const auto table = [] {
    std::array<std::array<PairData, 5>, 5> t{};
    const GoldenNumber phi = GoldenNumber::phi();
    const GoldenNumber half(Rational(1, 2));
    const GoldenNumber quarter(Rational(1, 4));
    for (int r = 0; r < 5; ++r) {
      for (int s = 0; s < 5; ++s) {
        if (r == s) continue;
        auto& d = t[r][s];
        const GoldenNumber den = sine_ratio(s - r);
        for (int j = 0; j < 5; ++j) {
          d.dec[j].alpha = sine_ratio(s - j) / den;
          d.dec[j].beta = sine_ratio(j - r) / den;
          d.dec[j].alpha_d = d.dec[j].alpha.to_double();
          d.dec[j].beta_d = d.dec[j].beta.to_double();
        }
        const int m = mod5(s - r);
        if (m == 1 || m == 4) {
          d.cos_delta = (phi - GoldenNumber(1LL)) * half;
          d.sin2_delta = (GoldenNumber(2LL) + phi) * quarter;
        } else {
          d.cos_delta = -phi * half;
          d.sin2_delta = (GoldenNumber(3LL) - phi) * quarter;
        }
        const double delta = 2.0 * kPi * (s - r) / 5.0;
        d.cos_d = std::cos(delta);
        d.sin_d = std::sin(delta);
      }
    }
    return t;
  }();
  return table[r][s];
}

struct Context {
  const Pentagrid& g;
  std::array<double, 5> gd;
};

// The intersection point of lines (r, k_r) and (s, k_s).
struct Crossing {
  int r, s;
  std::int64_t k_r, k_s;
  Rational p, q;  // Re(z zeta^-r), Re(z zeta^-s)
  double pd, qd;
};

Crossing crossing(const Context& c, int r, std::int64_t k_r, int s, std::int64_t k_s) {
  Crossing x{r, s, k_r, k_s, Rational(k_r) - c.g.gamma[r], Rational(k_s) - c.g.gamma[s], 0.0, 0.0};
  x.pd = static_cast<double>(k_r) - c.gd[r];
  x.qd = static_cast<double>(k_s) - c.gd[s];
  return x;
}

std::complex<double> crossing_point(const Crossing& x) {
  const auto& d = pair_data(x.r, x.s);
  const double tr = 2.0 * kPi * x.r / 5.0, ts = 2.0 * kPi * x.s / 5.0;
  const std::complex<double> i_er = std::polar(1.0, tr + kPi / 2), i_es = std::polar(1.0, ts + kPi / 2);
  return (x.qd * i_er - x.pd * i_es) / d.sin_d;
}

bool in_disk(const Crossing& x, double radius) {
  const auto& d = pair_data(x.r, x.s);
  const double m2 = (x.pd * x.pd + x.qd * x.qd - 2 * x.pd * x.qd * d.cos_d) / (d.sin_d * d.sin_d);
  const double r2 = radius * radius;
  if (std::abs(m2 - r2) > 1e-9 * std::max(1.0, r2)) return m2 <= r2;
  const GoldenNumber p(x.p), q(x.q);
  const GoldenNumber lhs = p * p + q * q - GoldenNumber(2LL) * p * q * d.cos_delta;
  const Rational rr(radius);
  return compare(lhs, d.sin2_delta * GoldenNumber(rr * rr)) <= 0;
}

// K_j at the crossing, or nullopt when line j passes through it.
std::optional<std::int64_t> value_at(const Context& c, const Crossing& x, int j) {
  const auto& dec = pair_data(x.r, x.s).dec[j];
  const double v = dec.alpha_d * x.pd + dec.beta_d * x.qd + c.gd[j];
  if (std::abs(v - std::round(v)) > kFilter) return static_cast<std::int64_t>(std::ceil(v));
  const GoldenNumber exact = dec.alpha * GoldenNumber(x.p) + dec.beta * GoldenNumber(x.q) + GoldenNumber(c.g.gamma[j]);
  if (exact.is_integer()) return std::nullopt;
  return static_cast<std::int64_t>(ceil(exact));
}

std::int64_t exact_line(const Context& c, const Crossing& x, int j) {
  const auto& dec = pair_data(x.r, x.s).dec[j];
  const GoldenNumber v = dec.alpha * GoldenNumber(x.p) + dec.beta * GoldenNumber(x.q) + GoldenNumber(c.g.gamma[j]);
  return static_cast<std::int64_t>(floor(v));
}

Context context(const Pentagrid& g) { return Context{g, g.gamma_double()}; }

std::pair<std::int64_t, std::int64_t> line_range(double gamma, double radius) {
  return {static_cast<std::int64_t>(std::ceil(gamma - radius - kFilter)),
          static_cast<std::int64_t>(std::floor(gamma + radius + kFilter))};
}

struct Job {
  int r, s;
  std::int64_t k_r;
};

std::vector<Job> jobs(const Context& c, double radius) {
  std::vector<Job> out;
  for (int r = 0; r < 5; ++r) {
    for (int s = r + 1; s < 5; ++s) {
      const auto [lo, hi] = line_range(c.gd[r], radius);
      for (std::int64_t k = lo; k <= hi; ++k) out.push_back({r, s, k});
    }
  }
  return out;
}

Rhombus build_rhombus(const Context& c, const Crossing& x) {
  Rhombus h;
  h.r = x.r;
  h.s = x.s;
  h.k_r = x.k_r;
  h.k_s = x.k_s;
  GridIndexVector base{};
  for (int j = 0; j < 5; ++j) {
    if (j == x.r || j == x.s) continue;
    auto v = value_at(c, x, j);
    if (!v) throw Error(ErrorCode::SingularIntersection, "three grid lines meet at the intersection");
    base[j] = *v;
  }
  base[x.r] = x.k_r;
  base[x.s] = x.k_s;
  h.index = {base, base, base, base};
  h.index[1][x.r] += 1;
  h.index[2][x.r] += 1;
  h.index[2][x.s] += 1;
  h.index[3][x.s] += 1;
  for (int i = 0; i < 4; ++i) h.v[i] = project(h.index[i]);
  const int m = mod5(x.s - x.r);
  h.shape = (m == 1 || m == 4) ? Shape::Thick : Shape::Thin;
  h.z0 = crossing_point(x);
  return h;
}

// Rhombi (or singular points) for one (r, s, k_r) line of the scan.
void scan_job(const Context& c, const Job& job, double radius, std::vector<Rhombus>* rhombi,
              std::vector<SingularPoint>* singular) {
  const auto [lo, hi] = line_range(c.gd[job.s], radius);
  for (std::int64_t k_s = lo; k_s <= hi; ++k_s) {
    const Crossing x = crossing(c, job.r, job.k_r, job.s, k_s);
    if (!in_disk(x, radius)) continue;
    std::vector<int> through;
    for (int j = 0; j < 5; ++j) {
      if (j != job.r && j != job.s && !value_at(c, x, j)) through.push_back(j);
    }
    if (through.empty()) {
      if (rhombi) rhombi->push_back(build_rhombus(c, x));
      continue;
    }
    // Report each singular point once, from its two lowest families.
    if (!singular || through.front() < job.s) continue;
    SingularPoint sp;
    sp.z = crossing_point(x);
    sp.families = {job.r, job.s};
    sp.lines = {job.k_r, k_s};
    for (int j : through) {
      sp.families.push_back(j);
      sp.lines.push_back(exact_line(c, x, j));
    }
    singular->push_back(std::move(sp));
  }
}

RhombusPatch generate_impl(const Pentagrid& g, double radius, bool parallel) {
  g.validate();
  const Context c = context(g);
  const auto js = jobs(c, radius);
  std::vector<std::vector<Rhombus>> rh(js.size());
  std::vector<std::vector<SingularPoint>> sg(js.size());
  const auto n = static_cast<std::int64_t>(js.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i) scan_job(c, js[i], radius, &rh[i], &sg[i]);
  } else {
    for (std::int64_t i = 0; i < n; ++i) scan_job(c, js[i], radius, &rh[i], &sg[i]);
  }
  for (const auto& s : sg) {
    if (s.empty()) continue;
    const auto& p = s.front();
    char buf[128];
    std::snprintf(buf, sizeof buf, "pentagrid is singular at (%.9f, %.9f): %zu lines meet", p.z.real(), p.z.imag(),
                  p.families.size());
    throw Error(ErrorCode::SingularPentagrid, buf);
  }
  RhombusPatch out;
  out.grid = g;
  out.radius = radius;
  for (auto& v : rh) out.rhombi.insert(out.rhombi.end(), v.begin(), v.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

void Pentagrid::validate() const {
  if (!sum_zero) return;
  Rational sum = 0;
  for (const auto& x : gamma) sum += x;
  if (sum != 0) throw Error(ErrorCode::InvalidArgument, "sum_zero is set but the offsets do not sum to 0");
}

Pentagrid Pentagrid::normalized() const {
  Rational mean = 0;
  for (const auto& x : gamma) mean += x;
  mean /= 5;
  Pentagrid out;
  for (int j = 0; j < 5; ++j) out.gamma[j] = gamma[j] - mean;
  out.sum_zero = true;
  return out;
}

std::array<double, 5> Pentagrid::gamma_double() const {
  std::array<double, 5> out{};
  for (int j = 0; j < 5; ++j) out[j] = static_cast<double>(gamma[j]);
  return out;
}

Cyclotomic5 project(const GridIndexVector& k) {
  // zeta^4 = -1 - zeta - zeta^2 - zeta^3.
  return Cyclotomic5(k[0] - k[4], k[1] - k[4], k[2] - k[4], k[3] - k[4]);
}

bool within_radius(const Cyclotomic5& p, double radius) {
  const GoldenInt n2 = norm2(p);
  const double m2 = n2.to_double(), r2 = radius * radius;
  if (std::abs(m2 - r2) > 1e-9 * std::max(1.0, r2)) return m2 <= r2;
  const Rational rr(radius);
  return compare(n2.exact(), GoldenNumber(rr * rr)) <= 0;
}

const char* to_string(Shape shape) { return shape == Shape::Thick ? "thick" : "thin"; }

std::int64_t grid_value(std::complex<double> z, int j, const Pentagrid& g) {
  if (j < 0 || j > 4) throw Error(ErrorCode::InvalidArgument, "family index must be 0..4");
  const double x = (z * std::polar(1.0, -2.0 * kPi * j / 5.0)).real() + static_cast<double>(g.gamma[j]);
  if (std::abs(x - std::round(x)) <= 1e-9) {
    throw Error(ErrorCode::OnGridLine, "point lies on a line of family " + std::to_string(j));
  }
  return static_cast<std::int64_t>(std::ceil(x));
}

Regularity is_regular(const Pentagrid& g, double radius) {
  const Context c = context(g);
  Regularity out;
  for (const auto& job : jobs(c, radius)) scan_job(c, job, radius, nullptr, &out.singular);
  out.regular = out.singular.empty();
  return out;
}

Rhombus dual_rhombus(const Pentagrid& g, int r, std::int64_t k_r, int s, std::int64_t k_s) {
  if (r == s || r < 0 || s < 0 || r > 4 || s > 4) throw Error(ErrorCode::InvalidArgument, "need two distinct families");
  if (r > s) {
    std::swap(r, s);
    std::swap(k_r, k_s);
  }
  const Context c = context(g);
  return build_rhombus(c, crossing(c, r, k_r, s, k_s));
}

RhombusPatch generate_tiling(const Pentagrid& g, double radius) { return generate_impl(g, radius, true); }
RhombusPatch generate_tiling_serial(const Pentagrid& g, double radius) { return generate_impl(g, radius, false); }

double complete_radius(const RhombusPatch& p) {
  std::complex<double> shift{0.0, 0.0};
  for (int j = 0; j < 5; ++j) shift += static_cast<double>(p.grid.gamma[j]) * std::polar(1.0, 2.0 * kPi * j / 5.0);
  // A vertex sits at 5/2 z + sum (gamma_j + f_j) zeta^j with f_j in [0, 1], and
  // |sum f_j zeta^j| <= phi.
  return 2.5 * p.radius - std::abs(shift) - 2.0;
}

Audit audit(const RhombusPatch& p) {
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
  std::array<Cyclotomic5, 10> units;
  for (int j = 0; j < 5; ++j) {
    units[j] = Cyclotomic5::zeta_power(j);
    units[j + 5] = -units[j];
  }
  Audit a;
  a.rhombi = p.rhombi.size();
  std::unordered_map<EdgeKey, int, EdgeHash> uses;
  std::map<std::array<Cyclotomic5, 4>, int> seen;
  for (const auto& h : p.rhombi) {
    (h.shape == Shape::Thick ? a.thick : a.thin) += 1;
    auto sorted = h.v;
    std::sort(sorted.begin(), sorted.end());
    if (seen[sorted]++ > 0) ++a.duplicate_rhombi;
    for (int i = 0; i < 4; ++i) {
      auto x = h.v[i], y = h.v[(i + 1) % 4];
      if (std::find(units.begin(), units.end(), y - x) == units.end()) ++a.non_unit_sides;
      if (y < x) std::swap(x, y);
      ++uses[{x, y}];
    }
  }
  const double core = complete_radius(p) - 0.5;
  for (const auto& [e, n] : uses) {
    if (n > 2) ++a.overfull_edges;
    if (std::abs((e.a + e.b).embed()) / 2 <= core) {
      ++a.interior_edges;
      if (n == 1) ++a.unmatched_interior_edges;
    }
  }
  return a;
}

bool index_sum_check(const RhombusPatch& p) {
  if (!p.grid.sum_zero) throw Error(ErrorCode::SumConstraintUnset, "index sums are only constrained when sum(gamma) = 0");
  for (const auto& h : p.rhombi) {
    for (const auto& k : h.index) {
      std::int64_t sum = 0;
      for (auto x : k) sum += x;
      if (sum < 1 || sum > 4) return false;
    }
  }
  return true;
}

std::vector<Cyclotomic5> vertex_set(const RhombusPatch& p) {
  std::vector<Cyclotomic5> out;
  out.reserve(p.rhombi.size() * 4);
  for (const auto& h : p.rhombi) out.insert(out.end(), h.v.begin(), h.v.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Cut and project

namespace {

// Cells live in (u, w) = (Re z, Re(z zeta^-1)); Re(z zeta^-j) = a_j u + b_j w.
struct CellBasis {
  std::array<GoldenNumber, 5> a, b;
  std::array<double, 5> ad, bd;
};

const CellBasis& cell_basis() {
  static const CellBasis basis = [] {
    CellBasis c;
    const auto& d = pair_data(0, 1);
    for (int j = 0; j < 5; ++j) {
      c.a[j] = d.dec[j].alpha;
      c.b[j] = d.dec[j].beta;
      c.ad[j] = d.dec[j].alpha_d;
      c.bd[j] = d.dec[j].beta_d;
    }
    return c;
  }();
  return basis;
}

template <class T>
struct Pt {
  T u, w;
};

// Keeps the side a u + b w <= c of a counterclockwise polygon.
template <class T>
std::vector<Pt<T>> clip(const std::vector<Pt<T>>& poly, const T& a, const T& b, const T& c) {
  std::vector<Pt<T>> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& P = poly[i];
    const auto& Q = poly[(i + 1) % n];
    const T fp = a * P.u + b * P.w - c;
    const T fq = a * Q.u + b * Q.w - c;
    const bool in_p = !(fp > T(0LL));
    const bool in_q = !(fq > T(0LL));
    if (in_p) out.push_back(P);
    if (in_p != in_q) {
      const T t = fp / (fp - fq);
      out.push_back({P.u + (Q.u - P.u) * t, P.w + (Q.w - P.w) * t});
    }
  }
  return out;
}

template <class T>
T doubled_area(const std::vector<Pt<T>>& poly) {
  T s(0LL);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& P = poly[i];
    const auto& Q = poly[(i + 1) % poly.size()];
    s = s + (P.u * Q.w - Q.u * P.w);
  }
  return s;
}

// GoldenNumber has no ordering operators; this wrapper gives clip() what it needs.
struct G {
  GoldenNumber x;
  G() = default;
  explicit G(long long v) : x(v) {}
  G(GoldenNumber v) : x(std::move(v)) {}
  friend G operator+(const G& p, const G& q) { return p.x + q.x; }
  friend G operator-(const G& p, const G& q) { return p.x - q.x; }
  friend G operator*(const G& p, const G& q) { return p.x * q.x; }
  friend G operator/(const G& p, const G& q) { return p.x / q.x; }
  friend bool operator>(const G& p, const G& q) { return compare(p.x, q.x) > 0; }
};

double cell_area_double(const Pentagrid& g, const std::array<double, 5>& gd, const GridIndexVector& k, double slack) {
  (void)g;
  const auto& cb = cell_basis();
  // Cell bounds: k_j - 1 - gamma_j < a_j u + b_j w <= k_j - gamma_j.
  auto lo = [&](int j) { return static_cast<double>(k[j]) - 1.0 - gd[j] - slack; };
  auto hi = [&](int j) { return static_cast<double>(k[j]) - gd[j] + slack; };
  std::vector<Pt<double>> poly{{lo(0), lo(1)}, {hi(0), lo(1)}, {hi(0), hi(1)}, {lo(0), hi(1)}};
  if (hi(0) <= lo(0) || hi(1) <= lo(1)) return 0.0;
  for (int j = 2; j < 5 && !poly.empty(); ++j) {
    poly = clip(poly, cb.ad[j], cb.bd[j], hi(j));
    if (!poly.empty()) poly = clip(poly, -cb.ad[j], -cb.bd[j], -lo(j));
  }
  return poly.size() < 3 ? 0.0 : doubled_area(poly);
}

bool cell_area_exact_positive(const Pentagrid& g, const GridIndexVector& k) {
  const auto& cb = cell_basis();
  auto lo = [&](int j) { return G(GoldenNumber(Rational(k[j] - 1) - g.gamma[j])); };
  auto hi = [&](int j) { return G(GoldenNumber(Rational(k[j]) - g.gamma[j])); };
  std::vector<Pt<G>> poly{{lo(0), lo(1)}, {hi(0), lo(1)}, {hi(0), hi(1)}, {lo(0), hi(1)}};
  for (int j = 2; j < 5 && !poly.empty(); ++j) {
    poly = clip(poly, G(cb.a[j]), G(cb.b[j]), hi(j));
    if (!poly.empty()) poly = clip(poly, G(-cb.a[j]), G(-cb.b[j]), G(-lo(j).x));
  }
  return poly.size() >= 3 && doubled_area(poly).x.sign() > 0;
}

bool cell_nonempty_impl(const Pentagrid& g, const std::array<double, 5>& gd, const GridIndexVector& k) {
  if (cell_area_double(g, gd, k, kFilter) <= 0.0) return false;
  if (cell_area_double(g, gd, k, -kFilter) > 1e-12) return true;
  return cell_area_exact_positive(g, k);
}

ProjectedPoint projected(const GridIndexVector& k) { return {k, project(k)}; }

}  // namespace

bool cell_nonempty(const Pentagrid& g, const GridIndexVector& k) {
  return cell_nonempty_impl(g, g.gamma_double(), k);
}

std::vector<ProjectedPoint> cut_and_project(const Pentagrid& g, int box, double clip_radius) {
  g.validate();
  if (box < 0) throw Error(ErrorCode::InvalidArgument, "box bound must be >= 0");
  const auto gd = g.gamma_double();
  const auto& cb = cell_basis();
  const int side = 2 * box + 1;
  std::vector<std::vector<ProjectedPoint>> found(static_cast<std::size_t>(side) * side);
  const std::int64_t total = static_cast<std::int64_t>(side) * side;
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    GridIndexVector k{};
    k[0] = idx / side - box;
    k[1] = idx % side - box;
    // Range of Re(z zeta^-j) + gamma_j over the (k0, k1) box bounds k_j.
    const double u0 = k[0] - 1 - gd[0], u1 = k[0] - gd[0];
    const double w0 = k[1] - 1 - gd[1], w1 = k[1] - gd[1];
    std::array<std::int64_t, 5> lo{}, hi{};
    for (int j = 2; j < 5; ++j) {
      double mn = std::numeric_limits<double>::infinity(), mx = -mn;
      for (double u : {u0, u1}) {
        for (double w : {w0, w1}) {
          const double x = cb.ad[j] * u + cb.bd[j] * w + gd[j];
          mn = std::min(mn, x);
          mx = std::max(mx, x);
        }
      }
      lo[j] = std::max<std::int64_t>(-box, static_cast<std::int64_t>(std::ceil(mn - kFilter)));
      hi[j] = std::min<std::int64_t>(box, static_cast<std::int64_t>(std::ceil(mx + kFilter)));
    }
    auto& out = found[static_cast<std::size_t>(idx)];
    for (k[2] = lo[2]; k[2] <= hi[2]; ++k[2]) {
      for (k[3] = lo[3]; k[3] <= hi[3]; ++k[3]) {
        for (k[4] = lo[4]; k[4] <= hi[4]; ++k[4]) {
          if (!cell_nonempty_impl(g, gd, k)) continue;
          auto pt = projected(k);
          if (within_radius(pt.point, clip_radius)) out.push_back(pt);
        }
      }
    }
  }
  std::vector<ProjectedPoint> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end(), [](const ProjectedPoint& a, const ProjectedPoint& b) { return a.k < b.k; });
  return out;
}

std::vector<ProjectedPoint> cut_and_project_serial(const Pentagrid& g, int box, double clip_radius) {
  g.validate();
  if (box < 0) throw Error(ErrorCode::InvalidArgument, "box bound must be >= 0");
  const auto gd = g.gamma_double();
  std::vector<ProjectedPoint> out;
  GridIndexVector k{};
  for (k[0] = -box; k[0] <= box; ++k[0])
    for (k[1] = -box; k[1] <= box; ++k[1])
      for (k[2] = -box; k[2] <= box; ++k[2])
        for (k[3] = -box; k[3] <= box; ++k[3])
          for (k[4] = -box; k[4] <= box; ++k[4]) {
            if (!cell_nonempty_impl(g, gd, k)) continue;
            auto pt = projected(k);
            if (within_radius(pt.point, clip_radius)) out.push_back(pt);
          }
  return out;
}

// ---------------------------------------------------------------------------
// Density probe

namespace {

constexpr double kZeroGuard = 1e-9;

void check_probe_args(int n, int box) {
  if (n < 1 || n > 12 || box < 1 || box > 6) {
    throw Error(ErrorCode::InvalidArgument, "density probe needs 1 <= n <= 12 and 1 <= B <= 6");
  }
}

// All sums sum_{j in [first, first + count)} k_j w^j, deduplicated.
std::vector<std::complex<double>> half_sums(int n, int first, int count, int box) {
  std::vector<std::complex<double>> roots(count);
  for (int j = 0; j < count; ++j) roots[j] = std::polar(1.0, 2.0 * kPi * (first + j) / n);
  std::vector<std::complex<double>> sums{0.0};
  for (int j = 0; j < count; ++j) {
    std::vector<std::complex<double>> next;
    next.reserve(sums.size() * (2 * box + 1));
    for (const auto& s : sums) {
      for (int k = -box; k <= box; ++k) next.push_back(s + static_cast<double>(k) * roots[j]);
    }
    // Equal sums reached along different paths merge on a fine grid key; the
    // stored value stays unrounded.
    const auto snap = [](const std::complex<double>& z) {
      return std::pair{std::llround(z.real() * 1e9), std::llround(z.imag() * 1e9)};
    };
    std::sort(next.begin(), next.end(), [&](const auto& x, const auto& y) { return snap(x) < snap(y); });
    next.erase(std::unique(next.begin(), next.end(), [&](const auto& x, const auto& y) { return snap(x) == snap(y); }),
               next.end());
    sums = std::move(next);
  }
  return sums;
}

}  // namespace

double density_probe(int n, int box) {
  check_probe_args(n, box);
  const int left = n / 2;
  const auto a = half_sums(n, 0, left, box);
  const auto b = half_sums(n, left, n - left, box);
  // k = e_0 gives 1, so the answer never exceeds 1 and pairs farther apart
  // than that are irrelevant.
  constexpr double kCell = 0.25;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> grid;
  auto cell = [](double v) { return static_cast<std::int64_t>(std::floor(v / kCell)); };
  auto key = [](std::int64_t x, std::int64_t y) {
    return (static_cast<std::uint64_t>(x) << 32) ^ (static_cast<std::uint64_t>(y) & 0xffffffffULL);
  };
  for (std::size_t i = 0; i < a.size(); ++i) grid[key(cell(a[i].real()), cell(a[i].imag()))].push_back(static_cast<std::uint32_t>(i));

  double best = 1.0;
  const auto nb = static_cast<std::int64_t>(b.size());
#pragma omp parallel
  {
    double local = 1.0;
#pragma omp for schedule(dynamic, 1024)
    for (std::int64_t i = 0; i < nb; ++i) {
      const std::complex<double> target = -b[i];
      const double reach = local;
      const std::int64_t x0 = cell(target.real() - reach), x1 = cell(target.real() + reach);
      const std::int64_t y0 = cell(target.imag() - reach), y1 = cell(target.imag() + reach);
      for (std::int64_t x = x0; x <= x1; ++x) {
        for (std::int64_t y = y0; y <= y1; ++y) {
          auto it = grid.find(key(x, y));
          if (it == grid.end()) continue;
          for (std::uint32_t j : it->second) {
            const double d = std::abs(a[j] - target);
            if (d > kZeroGuard && d < local) local = d;
          }
        }
      }
    }
#pragma omp critical
    best = std::min(best, local);
  }
  return best;
}

double density_probe_serial(int n, int box) {
  check_probe_args(n, box);
  std::vector<std::complex<double>> roots(n);
  for (int j = 0; j < n; ++j) roots[j] = std::polar(1.0, 2.0 * kPi * j / n);
  std::vector<int> k(n, -box);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    std::complex<double> s{0.0, 0.0};
    for (int j = 0; j < n; ++j) s += static_cast<double>(k[j]) * roots[j];
    const double d = std::abs(s);
    if (d > kZeroGuard) best = std::min(best, d);
    int j = 0;
    while (j < n && k[j] == box) k[j++] = -box;
    if (j == n) break;
    ++k[j];
  }
  return best;
}

}  // namespace penrose::pentagrid
