#pragma once

// Index sequences, towers of half-tiles through the inflation hierarchy, and
// the Bratteli dimension/trace data that go with them.
//
// One geometric inflation is two sequence digits. A tower step (child position
// inside its parent) is written as a two-bit block:
//   Acute parent:  acute child 0 -> 00, acute child 1 -> 01, obtuse child -> 10
//   Obtuse parent: acute child   -> 00, obtuse child  -> 10
// Blocks are concatenated from T0 upward. A block ends in 1 only under an
// Acute parent, and the next block starts with 1 only when that parent is
// itself an Obtuse child, so "11" never occurs.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "penrose/exact.hpp"
#include "penrose/robinson.hpp"

namespace penrose::tilingspace {

bool is_admissible(std::string_view bits);

/// Admissible strings of length n (F(n+2)); n <= 64.
std::uint64_t count_admissible(int n);

/// Eventually periodic sequence prefix + period^infinity. An empty period
/// means the sequence continues with zeros.
class IndexSequence {
 public:
  IndexSequence() = default;
  /// Throws InvalidArgument on characters other than 0/1.
  IndexSequence(std::string prefix, std::string period);

  const std::string& prefix() const { return prefix_; }
  const std::string& period() const { return period_; }

  int at(std::size_t n) const;
  std::string head(std::size_t n) const;
  /// Admissible everywhere, including the prefix/period and period/period seams.
  bool admissible() const;

  std::string to_string() const;
  friend bool operator==(const IndexSequence&, const IndexSequence&) = default;

 private:
  const std::string& cycle() const;

  std::string prefix_;
  std::string period_;
};

bool tails_equivalent(const IndexSequence& x, const IndexSequence& y);

/// 2^-n for the first index n < horizon where x and y differ; 0 if none.
double cantor_distance(const IndexSequence& x, const IndexSequence& y, std::size_t horizon);

/// p + "0" + the tail of y: starts with p and is tail equivalent to y.
/// Throws Inadmissible if p or y is not admissible.
IndexSequence with_prefix(std::string_view p, const IndexSequence& y);

/// positions[k] is the child index of T_k inside T_{k+1}; `root` is the kind of
/// the top tile T_n.
struct Tower {
  robinson::HalfKind root = robinson::HalfKind::Acute;
  std::vector<int> positions;

  std::size_t depth() const { return positions.size(); }
  /// Kind of T_k, k in 0..depth. Throws InvalidTower.
  robinson::HalfKind kind_at(std::size_t k) const;
  friend bool operator==(const Tower&, const Tower&) = default;
  friend auto operator<=>(const Tower&, const Tower&) = default;
};

/// Throws InvalidTower if a position is out of range for its parent.
std::string tower_to_sequence(const Tower& t);
/// Throws Inadmissible, OddLength, or InvalidTower (an 01 block under an
/// Obtuse parent; only possible for the top block with root Obtuse).
Tower sequence_to_tower(std::string_view bits, robinson::HalfKind root = robinson::HalfKind::Acute);

/// All towers of the given depth, in lexicographic position order.
std::vector<Tower> enumerate_towers(robinson::HalfKind root, int depth);
/// F(2n+2) for an Acute root, F(2n+1) for an Obtuse one.
std::uint64_t tower_count(robinson::HalfKind root, int depth);

/// The chain T0..Tn obtained by subdividing `top` along the tower; element k
/// is T_k. `top` must have kind t.root.
std::vector<robinson::HalfTile> realize(const Tower& t, const robinson::HalfTile& top);

/// (d_A, d_O) with (d_A, d_O)(n+1) = (d_A + d_O, d_A)(n) and base (1, 1); n <= 90.
std::pair<std::uint64_t, std::uint64_t> bratteli_dimensions(int n);

/// (phi^-(n+1), phi^-(n+2)), the normalized trace weights; n <= 90.
std::pair<GoldenNumber, GoldenNumber> trace_weights(int n);

}  // namespace penrose::tilingspace
