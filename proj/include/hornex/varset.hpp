#ifndef HORNEX_VARSET_HPP
#define HORNEX_VARSET_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hornex {

/// A variable is a 1-based index into the universe {1, ..., w}.
using Var = std::uint32_t;

/// Ordered set of variables. Members are kept sorted ascending without
/// duplicates, so iteration order is always ascending.
class VarSet {
 public:
  using const_iterator = std::vector<Var>::const_iterator;

  VarSet() = default;
  VarSet(std::initializer_list<Var> vars);
  explicit VarSet(std::vector<Var> vars);

  // Caller guarantees `vars` is strictly ascending.
  static VarSet from_sorted(std::vector<Var> vars);

  // {1, ..., w}
  static VarSet range(Var first, Var last);

  std::size_t size() const { return vars_.size(); }
  bool empty() const { return vars_.empty(); }
  const_iterator begin() const { return vars_.begin(); }
  const_iterator end() const { return vars_.end(); }
  Var front() const { return vars_.front(); }
  Var back() const { return vars_.back(); }
  std::span<const Var> view() const { return vars_; }

  bool contains(Var v) const;
  bool is_subset_of(const VarSet& other) const;
  bool intersects(const VarSet& other) const;

  VarSet united(const VarSet& other) const;
  VarSet minus(const VarSet& other) const;
  VarSet intersected(const VarSet& other) const;

  void insert(Var v);

  /// Renders as `{1,3,4}`; the empty set renders as `{}`.
  std::string to_string() const;

  friend bool operator==(const VarSet&, const VarSet&) = default;
  friend std::strong_ordering operator<=>(const VarSet& a, const VarSet& b) {
    return a.vars_ <=> b.vars_;
  }

 private:
  std::vector<Var> vars_;
};

}  // namespace hornex

#endif  // HORNEX_VARSET_HPP
