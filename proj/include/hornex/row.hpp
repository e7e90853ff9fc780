#ifndef HORNEX_ROW_HPP
#define HORNEX_ROW_HPP

#include "hornex/bigcount.hpp"
#include "hornex/varset.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hornex {

/// Explicit field-by-field description of a {0,1,2,n}-valued row. Bubbles
/// may come in any order; canonicalize() sorts them.
struct RowParts {
  std::size_t w = 0;
  VarSet zeros;
  VarSet ones;
  VarSet twos;
  std::vector<VarSet> bubbles;

  friend bool operator==(const RowParts&, const RowParts&) = default;
};

/// A {0,1,2,n}-valued row over {1, ..., w}. It stands for the family of all
/// X with X disjoint from zeros(), ones() a subset of X, and no n-bubble
/// wholly inside X.
///
/// Rows are always canonical: bubbles are numbered 0, 1, ... by ascending
/// minimum element, so structural equality is semantic equality of the
/// representation.
class Row {
 public:
  // Position labels. Bubble i (0-based, canonical) carries kFirstBubble + i.
  static constexpr std::uint32_t kZero = 0;
  static constexpr std::uint32_t kOne = 1;
  static constexpr std::uint32_t kTwo = 2;
  static constexpr std::uint32_t kFirstBubble = 3;
  static constexpr std::size_t kNoBubble = static_cast<std::size_t>(-1);

  /// The powerset of {1, ..., w}.
  static Row all_twos(std::size_t w);

  /// Builds a row from per-position labels (index v-1 for variable v).
  /// Labels >= kFirstBubble name bubbles by arbitrary keys; equal keys form
  /// one bubble. Throws RowError if a bubble has fewer than two positions.
  static Row from_labels(std::vector<std::uint32_t> labels);

  /// Parses whitespace-separated tokens `0`, `1`, `2`, `n` or `n<i>`.
  /// Every `n<i>` with the same i is one bubble; all bare `n` tokens form one
  /// more bubble, distinct from the numbered ones.
  static Row parse(std::string_view text);

  std::size_t w() const { return labels_.size(); }
  std::uint32_t label(Var v) const { return labels_[v - 1]; }
  bool is_zero(Var v) const { return label(v) == kZero; }
  bool is_one(Var v) const { return label(v) == kOne; }
  bool is_two(Var v) const { return label(v) == kTwo; }
  std::size_t bubble_of(Var v) const {
    return label(v) >= kFirstBubble ? label(v) - kFirstBubble : kNoBubble;
  }
  const std::vector<std::uint32_t>& labels() const { return labels_; }

  std::size_t num_zeros() const { return counts_[kZero]; }
  std::size_t num_ones() const { return counts_[kOne]; }
  std::size_t num_twos() const { return counts_[kTwo]; }
  std::size_t num_bubbles() const { return bubble_sizes_.size(); }
  std::size_t bubble_size(std::size_t i) const { return bubble_sizes_[i]; }
  const std::vector<std::size_t>& bubble_sizes() const { return bubble_sizes_; }

  VarSet zeros() const;
  VarSet ones() const;
  VarSet twos() const;
  VarSet bubble(std::size_t i) const;
  std::vector<VarSet> bubbles() const;
  RowParts parts() const;

  /// Membership test: X misses zeros, contains ones, covers no bubble.
  bool contains(const VarSet& x) const;

  /// `0 2 1 n1 n1 2` style rendering, bubbles numbered from 1.
  std::string render() const;

  friend bool operator==(const Row& a, const Row& b) { return a.labels_ == b.labels_; }

 private:
  Row() = default;
  void index();

  std::vector<std::uint32_t> labels_;
  std::vector<std::size_t> bubble_sizes_;
  std::size_t counts_[3] = {0, 0, 0};
};

/// Validates `parts` and produces the canonical row. Throws RowError when the
/// fields do not partition {1, ..., w} or a bubble has fewer than two
/// elements.
Row canonicalize(const RowParts& parts);

/// |r| = 2^gamma * prod_i (2^nu_i - 1).
BigCount cardinality(const Row& r);

/// Number of members of size exactly k.
BigCount card_k(const Row& r, std::size_t k);
BigCount card_le_k(const Row& r, std::size_t k);
BigCount card_ge_k(const Row& r, std::size_t k);

/// card_k(r, k) for all k = 0..w in one pass.
std::vector<BigCount> card_profile(const Row& r);

/// Streams the members of r (or only those of size `size` when given) to
/// `emit`, which may return false to stop early. Returns false iff stopped.
///
/// Order: ones are fixed; every other position is a binary digit. Twos are
/// the least significant digits (ascending position = ascending weight),
/// followed by the elements of bubble 1, bubble 2, ... in canonical order.
/// Members are produced in increasing counter value, skipping patterns that
/// fill a bubble. For (0,1,0,n,m,m,1,n) this gives {2,7}, {2,4,7}, {2,7,8},
/// {2,5,7}, ...
bool for_each_member(const Row& r, std::optional<std::size_t> size,
                     const std::function<bool(const VarSet&)>& emit);

std::vector<VarSet> enumerate(const Row& r);
std::vector<VarSet> enumerate_k(const Row& r, std::size_t k);

}  // namespace hornex

#endif  // HORNEX_ROW_HPP
