#ifndef HORNEX_INSTANCE_HPP
#define HORNEX_INSTANCE_HPP

#include "hornex/varset.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace hornex {

/// A -> B: every model containing the premise contains the conclusion.
/// Normalized form has premise and conclusion disjoint and a nonempty
/// conclusion; the premise may be empty.
struct Implication {
  VarSet premise;
  VarSet conclusion;

  bool is_unit() const { return conclusion.size() == 1; }
  friend bool operator==(const Implication&, const Implication&) = default;
};

/// A*: no model contains the whole body. The body is never empty.
struct NegativeClause {
  VarSet body;

  friend bool operator==(const NegativeClause&, const NegativeClause&) = default;
};

using Constraint = std::variant<Implication, NegativeClause>;

/// Constraint as read from input, before range checks and normalization.
/// Variables are signed so that 0 and negative indices can be diagnosed.
struct RawConstraint {
  enum class Kind { kImplication, kNegativeClause };
  Kind kind = Kind::kImplication;
  std::vector<std::int64_t> premise;  // body for negative clauses
  std::vector<std::int64_t> conclusion;
  std::size_t line = 0;
};

/// Horn formula over {1, ..., w}: an ordered list mixing implications and
/// negative clauses. Immutable after construction.
class HornInstance {
 public:
  /// Throws InputError if a constraint is not normalized or mentions a
  /// variable outside 1..w.
  HornInstance(std::size_t w, std::vector<Constraint> constraints);

  std::size_t w() const { return w_; }
  std::size_t h() const { return constraints_.size(); }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const Constraint& operator[](std::size_t i) const { return constraints_[i]; }

  /// Implications in input order.
  std::vector<Implication> sigma() const;
  /// Negative clauses in input order.
  std::vector<NegativeClause> theta() const;

  bool has_implications() const;
  bool has_negative_clauses() const;
  bool all_units() const;

  friend bool operator==(const HornInstance&, const HornInstance&) = default;

 private:
  std::size_t w_;
  std::vector<Constraint> constraints_;
};

/// Range-checks and normalizes raw constraints: sets are deduplicated, the
/// premise is removed from each conclusion, and implications whose
/// conclusion becomes empty are dropped. Order is otherwise preserved.
/// Throws InputError on an out-of-range index and UnsatisfiableInput on an
/// empty negative clause.
HornInstance normalize(const std::vector<RawConstraint>& raw, std::size_t w);

/// Normalizes already-typed constraints (same rules as above).
HornInstance normalize(std::vector<Constraint> constraints, std::size_t w);

/// Unites the conclusions of implications sharing a premise. The merged
/// implication sits at the position of the first occurrence; negative
/// clauses keep their relative positions.
HornInstance merge_premises(const HornInstance& inst);

/// Replaces each A -> B by the unit implications A -> {b}, b in B, in
/// ascending b order.
HornInstance split_units(const HornInstance& inst);

/// Stable sort by premise (resp. body) size, ascending.
HornInstance reorder_by_size(const HornInstance& inst);

/// Definition-level check that X satisfies c.
bool satisfies(const VarSet& x, const Constraint& c);

}  // namespace hornex

#endif  // HORNEX_INSTANCE_HPP
