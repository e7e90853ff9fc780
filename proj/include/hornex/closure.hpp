#ifndef HORNEX_CLOSURE_HPP
#define HORNEX_CLOSURE_HPP

#include "hornex/instance.hpp"
#include "hornex/row.hpp"

#include <optional>
#include <span>
#include <vector>

namespace hornex {

/// Sigma-closure in time O(|Sigma| + w), where |Sigma| is the total size of
/// all premises and conclusions. Each implication keeps a counter of premise
/// elements not yet derived; when it drops to zero the conclusion fires.
class ClosureOperator {
 public:
  ClosureOperator(std::span<const Implication> sigma, std::size_t w);

  std::size_t w() const { return w_; }

  /// Smallest superset of `u` closed under every implication.
  VarSet close(const VarSet& u) const;

  /// Same as close(), returned as a 0/1 membership vector indexed v - 1.
  std::vector<char> close_mask(std::span<const Var> u) const;

 private:
  std::size_t w_;
  std::vector<std::uint32_t> premise_size_;
  // CSR layout: implications watching variable v are
  // watch_[watch_start_[v - 1] .. watch_start_[v]).
  std::vector<std::uint32_t> watch_start_;
  std::vector<std::uint32_t> watch_;
  std::vector<std::uint32_t> conclusion_start_;
  std::vector<Var> conclusion_;
  std::vector<std::uint32_t> unconditional_;  // implications with empty premise
};

VarSet close(std::span<const Implication> sigma, const VarSet& u, std::size_t w);

/// Feasibility tests against a fixed instance. Construction is linear in the
/// instance size; each test is linear again.
class FeasibilityOracle {
 public:
  explicit FeasibilityOracle(const HornInstance& inst);

  /// True iff r contains a model. Checks that the closure Y of ones(r) is a
  /// noncover of every negative clause, misses zeros(r), and covers no
  /// bubble of r.
  bool feasible(const Row& r) const;

  /// True iff r contains a model with at most k elements.
  bool extra_feasible_le(const Row& r, std::size_t k) const;

  bool satisfiable() const;

 private:
  // Returns |Y| if the three conditions hold, nullopt otherwise.
  std::optional<std::size_t> closed_witness(const Row& r) const;

  std::size_t w_;
  ClosureOperator closure_;
  std::vector<NegativeClause> theta_;
};

bool satisfiable(const HornInstance& inst);
bool feasible(const HornInstance& inst, const Row& r);
bool extra_feasible_le(const HornInstance& inst, const Row& r, std::size_t k);

/// Existence of a k-element noncover inside r for negative-clause-only
/// instances: true iff no pending body lies inside ones(r) and
/// |ones(r)| <= k. `pending` holds the bodies not yet imposed on r.
///
/// Exact when h <= w, k <= w - h, and r was produced by imposing the other
/// clauses on the all-twos row (so that zeros plus bubbles of r number at
/// most the imposed clauses). Throws PolicyError when h > w or k > w - h.
bool extra_feasible_eq_noncover(std::span<const NegativeClause> theta, const Row& r,
                                std::size_t k, std::span<const NegativeClause> pending);

}  // namespace hornex

#endif  // HORNEX_CLOSURE_HPP
