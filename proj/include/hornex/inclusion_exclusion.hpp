#ifndef HORNEX_INCLUSION_EXCLUSION_HPP
#define HORNEX_INCLUSION_EXCLUSION_HPP

#include "hornex/bigcount.hpp"
#include "hornex/instance.hpp"
#include "hornex/row.hpp"

#include <optional>
#include <span>

namespace hornex {

/// Members of r violating every constraint in `subset`, as a single row.
/// Violating A -> {b} means A inside X and b outside X; violating A* means
/// A* inside X. nullopt stands for the empty family (a contradiction).
/// Throws PolicyError on a non-unit implication.
std::optional<Row> force_violations(const Row& r, std::span<const Constraint> subset);

/// Exact number of members X of r that satisfy every constraint in
/// `constraints` and, when `k` is given, have |X| = k. All implications must
/// be unit.
///
/// Computed by inclusion-exclusion over the violated constraints: for each
/// subset S the forced row r0(S) contributes (-1)^|S| |r0(S)|, and when k is
/// given the terms that also violate |X| = k contribute
/// (-1)^(|S|+1) (|r0(S)| - card_k(r0(S), k)). Once a forced row becomes a
/// contradiction, every superset of S does too and is skipped.
BigCount ie_model_count(const Row& r, std::span<const Constraint> constraints,
                        std::optional<std::size_t> k);

/// Same over all constraints of `inst` (which must have unit Sigma).
BigCount ie_model_count(const Row& r, const HornInstance& inst, std::optional<std::size_t> k);

}  // namespace hornex

#endif  // HORNEX_INCLUSION_EXCLUSION_HPP
