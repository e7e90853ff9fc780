#ifndef HORNEX_IMPOSE_HPP
#define HORNEX_IMPOSE_HPP

#include "hornex/instance.hpp"
#include "hornex/row.hpp"

#include <optional>
#include <vector>

namespace hornex {

enum class Outcome {
  kUnchanged,   // every member already satisfies the constraint
  kTrivialSon,  // the satisfying members form a single row
  kSplit,       // disjoint sons, at least one
  kDeleted,     // no member satisfies the constraint
};

const char* to_string(Outcome o);

struct ImpositionResult {
  Outcome outcome = Outcome::kUnchanged;
  std::vector<Row> sons;
};

/// Imposes A -> B on r. The sons are pairwise disjoint, canonical, and their
/// union is exactly the set of members of r satisfying A -> B.
///
/// When r has to be split, the members violating the premise come first,
/// one son per bubble meeting A in canonical order: the q-th son keeps the
/// parts of A in bubbles 1..q-1 set to 1 and forbids the part in bubble q.
/// Then, if A meets twos(r), one son with every bubble part set to 1 and
/// A's twos forbidden. Last comes the son with A and B all set to 1, unless
/// that family is empty.
ImpositionResult impose_implication(const Row& r, const Implication& imp);

/// Imposes A* on r. Splitting uses the same premise-violating sons as
/// impose_implication with A = body and no final "all ones" son.
ImpositionResult impose_negative_clause(const Row& r, const NegativeClause& nc);

ImpositionResult impose(const Row& r, const Constraint& c);

/// Every member of r satisfies c.
bool satisfies_all_members(const Row& r, const Constraint& c);
/// Some member of r satisfies c.
bool satisfies_some_member(const Row& r, const Constraint& c);

/// The sub-row {X in r : force_in subset of X, X disjoint from force_out},
/// or nullopt if that family is empty. Forcing 1 inside a bubble leaves the
/// remnant as a bubble, or as a 0 when a single position remains; forcing 0
/// inside a bubble frees the rest of it to 2.
std::optional<Row> restrict_row(const Row& r, const VarSet& force_in, const VarSet& force_out);

}  // namespace hornex

#endif  // HORNEX_IMPOSE_HPP
