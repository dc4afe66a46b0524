#include "penrose/tilingspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "penrose/error.hpp"

namespace penrose::tilingspace {

using robinson::HalfKind;

bool is_admissible(std::string_view bits) { return bits.find("11") == std::string_view::npos; }

std::uint64_t count_admissible(int n) {
  if (n < 0 || n > 64) throw Error(ErrorCode::InvalidArgument, "count_admissible needs 0 <= n <= 64");
  // (ending in 0, ending in 1); the empty string counts as ending in 0.
  std::uint64_t zero = 1, one = 0;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t z = zero + one;
    one = zero;
    zero = z;
  }
  return n == 0 ? 1 : zero + one;
}

// ---------------------------------------------------------------------------
// IndexSequence

namespace {

void require_bits(const std::string& s) {
  if (s.find_first_not_of("01") != std::string::npos) {
    throw Error(ErrorCode::InvalidArgument, "index sequence has a character other than 0/1: " + s);
  }
}

const std::string kZeroCycle = "0";

}  // namespace

IndexSequence::IndexSequence(std::string prefix, std::string period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  require_bits(prefix_);
  require_bits(period_);
}

const std::string& IndexSequence::cycle() const { return period_.empty() ? kZeroCycle : period_; }

int IndexSequence::at(std::size_t n) const {
  if (n < prefix_.size()) return prefix_[n] - '0';
  const auto& c = cycle();
  return c[(n - prefix_.size()) % c.size()] - '0';
}

std::string IndexSequence::head(std::size_t n) const {
  std::string s;
  s.reserve(n);
  for (std::size_t i = 0; i < n; ++i) s += static_cast<char>('0' + at(i));
  return s;
}

bool IndexSequence::admissible() const {
  // Prefix, one full cycle, and the wrap back to the cycle start.
  const auto& c = cycle();
  return is_admissible(head(prefix_.size() + 2 * c.size()));
}

std::string IndexSequence::to_string() const { return prefix_ + "(" + cycle() + ")"; }

bool tails_equivalent(const IndexSequence& x, const IndexSequence& y) {
  const std::size_t start = std::max(x.prefix().size(), y.prefix().size());
  const std::size_t px = std::max<std::size_t>(1, x.period().size());
  const std::size_t py = std::max<std::size_t>(1, y.period().size());
  const std::size_t span = std::lcm(px, py);
  for (std::size_t n = start; n < start + span; ++n) {
    if (x.at(n) != y.at(n)) return false;
  }
  return true;
}

double cantor_distance(const IndexSequence& x, const IndexSequence& y, std::size_t horizon) {
  for (std::size_t n = 0; n < horizon; ++n) {
    if (x.at(n) != y.at(n)) return std::ldexp(1.0, -static_cast<int>(n));
  }
  return 0.0;
}

IndexSequence with_prefix(std::string_view p, const IndexSequence& y) {
  if (!is_admissible(p) || !y.admissible()) throw Error(ErrorCode::Inadmissible, "prefix or target is not admissible");
  const std::size_t join = p.size() + 1;
  const std::size_t start = std::max(join, y.prefix().size());
  const std::size_t len = std::max<std::size_t>(1, y.period().size());
  std::string prefix(p);
  prefix += '0';
  for (std::size_t n = join; n < start; ++n) prefix += static_cast<char>('0' + y.at(n));
  std::string period;
  for (std::size_t n = start; n < start + len; ++n) period += static_cast<char>('0' + y.at(n));
  return IndexSequence(std::move(prefix), std::move(period));
}

// ---------------------------------------------------------------------------
// Towers

namespace {

const char* block_for(HalfKind parent, int position) {
  if (parent == HalfKind::Acute) {
    static const char* kAcute[3] = {"00", "01", "10"};
    return kAcute[position];
  }
  static const char* kObtuse[2] = {"00", "10"};
  return kObtuse[position];
}

void check_position(HalfKind parent, int position) {
  if (position < 0 || position >= robinson::child_count(parent)) {
    throw Error(ErrorCode::InvalidTower, "child position " + std::to_string(position) + " is invalid in an " +
                                             robinson::to_string(parent) + " parent");
  }
}

std::uint64_t fib(int n) {
  std::uint64_t a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return a;
}

}  // namespace

HalfKind Tower::kind_at(std::size_t k) const {
  if (k > positions.size()) throw Error(ErrorCode::InvalidTower, "tower level out of range");
  HalfKind kind = root;
  for (std::size_t j = positions.size(); j-- > k;) {
    check_position(kind, positions[j]);
    kind = robinson::child_kind(kind, positions[j]);
  }
  return kind;
}

std::string tower_to_sequence(const Tower& t) {
  std::vector<HalfKind> kinds(t.depth() + 1);
  kinds[t.depth()] = t.root;
  for (std::size_t k = t.depth(); k-- > 0;) {
    check_position(kinds[k + 1], t.positions[k]);
    kinds[k] = robinson::child_kind(kinds[k + 1], t.positions[k]);
  }
  std::string bits;
  for (std::size_t k = 0; k < t.depth(); ++k) bits += block_for(kinds[k + 1], t.positions[k]);
  return bits;
}

Tower sequence_to_tower(std::string_view bits, HalfKind root) {
  if (!is_admissible(bits)) throw Error(ErrorCode::Inadmissible, "sequence contains 11");
  if (bits.size() % 2 != 0) throw Error(ErrorCode::OddLength, "sequence length must be even");
  const std::size_t n = bits.size() / 2;
  Tower t;
  t.root = root;
  t.positions.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::string_view block = bits.substr(2 * k, 2);
    // T_{k+1} is Obtuse exactly when its own block starts with 1.
    const HalfKind parent = k + 1 == n ? root : (bits[2 * k + 2] == '1' ? HalfKind::Obtuse : HalfKind::Acute);
    int pos = -1;
    for (int p = 0; p < robinson::child_count(parent); ++p) {
      if (block == block_for(parent, p)) pos = p;
    }
    if (pos < 0) {
      throw Error(ErrorCode::InvalidTower,
                  "block " + std::string(block) + " has no child in an " + robinson::to_string(parent) + " parent");
    }
    t.positions[k] = pos;
  }
  return t;
}

std::vector<Tower> enumerate_towers(HalfKind root, int depth) {
  if (depth < 0) throw Error(ErrorCode::InvalidArgument, "negative tower depth");
  // Built top-down: positions[depth-1] is chosen first.
  std::vector<std::pair<HalfKind, std::vector<int>>> frontier{{root, {}}};
  for (int level = 0; level < depth; ++level) {
    std::vector<std::pair<HalfKind, std::vector<int>>> next;
    for (const auto& [kind, pos] : frontier) {
      for (int p = 0; p < robinson::child_count(kind); ++p) {
        auto q = pos;
        q.push_back(p);
        next.push_back({robinson::child_kind(kind, p), std::move(q)});
      }
    }
    frontier = std::move(next);
  }
  std::vector<Tower> out;
  out.reserve(frontier.size());
  for (auto& [kind, pos] : frontier) {
    std::reverse(pos.begin(), pos.end());
    out.push_back(Tower{root, std::move(pos)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t tower_count(HalfKind root, int depth) {
  return fib(root == HalfKind::Acute ? 2 * depth + 2 : 2 * depth + 1);
}

std::vector<robinson::HalfTile> realize(const Tower& t, const robinson::HalfTile& top) {
  if (top.kind != t.root) throw Error(ErrorCode::InvalidTower, "top tile kind does not match the tower root");
  std::vector<robinson::HalfTile> chain(t.depth() + 1);
  chain[t.depth()] = top;
  for (std::size_t k = t.depth(); k-- > 0;) {
    check_position(chain[k + 1].kind, t.positions[k]);
    chain[k] = robinson::subdivide(chain[k + 1])[static_cast<std::size_t>(t.positions[k])];
  }
  return chain;
}

// ---------------------------------------------------------------------------
// Bratteli data

std::pair<std::uint64_t, std::uint64_t> bratteli_dimensions(int n) {
  if (n < 0 || n > 90) throw Error(ErrorCode::InvalidArgument, "bratteli_dimensions needs 0 <= n <= 90");
  return {fib(n + 2), fib(n + 1)};
}

std::pair<GoldenNumber, GoldenNumber> trace_weights(int n) {
  if (n < 0 || n > 90) throw Error(ErrorCode::InvalidArgument, "trace_weights needs 0 <= n <= 90");
  return {GoldenNumber::phi_power(-(n + 1)), GoldenNumber::phi_power(-(n + 2))};
}

}  // namespace penrose::tilingspace
