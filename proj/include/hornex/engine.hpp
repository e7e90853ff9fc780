#ifndef HORNEX_ENGINE_HPP
#define HORNEX_ENGINE_HPP

#include "hornex/bigcount.hpp"
#include "hornex/impose.hpp"
#include "hornex/instance.hpp"
#include "hornex/row.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hornex {

/// Which members of the model set a count or enumeration refers to.
struct CardinalityFilter {
  enum class Kind { kAll, kLe, kGe, kEq };
  Kind kind = Kind::kAll;
  std::size_t k = 0;

  static CardinalityFilter all() { return {}; }
  static CardinalityFilter le(std::size_t k) { return {Kind::kLe, k}; }
  static CardinalityFilter ge(std::size_t k) { return {Kind::kGe, k}; }
  static CardinalityFilter eq(std::size_t k) { return {Kind::kEq, k}; }

  bool admits(std::size_t size) const;
  /// Number of members of r that pass the filter.
  BigCount count(const Row& r) const;
  /// `all`, `le`, `ge` or `eq`.
  std::string name() const;

  friend bool operator==(const CardinalityFilter&, const CardinalityFilter&) = default;
};

/// Rows failing the policy test are dropped as soon as they are created.
/// Every policy only drops rows without a member that the corresponding
/// count needs, so answers never depend on the policy.
struct PrunePolicy {
  enum class Kind {
    kNone,             // only rows emptied by an imposition disappear
    kWeak,             // each pending constraint is met by some member
    kFeasible,         // the row contains a model
    kExtraLe,          // ... a model with at most k elements
    kExtraEqNoncover,  // ... a k-element model; Sigma empty, h <= w, k <= w - h
    kExtraEqIE,        // ... a k-element model, by inclusion-exclusion; unit Sigma
  };
  Kind kind = Kind::kNone;
  std::size_t k = 0;

  static PrunePolicy none() { return {}; }
  static PrunePolicy weak() { return {Kind::kWeak, 0}; }
  static PrunePolicy feasible() { return {Kind::kFeasible, 0}; }
  static PrunePolicy extra_le(std::size_t k) { return {Kind::kExtraLe, k}; }
  static PrunePolicy extra_eq_noncover(std::size_t k) { return {Kind::kExtraEqNoncover, k}; }
  static PrunePolicy extra_eq_ie(std::size_t k) { return {Kind::kExtraEqIE, k}; }

  std::string name() const;
};

/// A row with the 0-based index of its next constraint. All constraints
/// before `pc` hold for every member; pc == h means the row is final.
struct StackFrame {
  Row row;
  std::size_t pc = 0;
};

struct EngineStats {
  std::uint64_t impositions = 0;
  std::uint64_t deletions = 0;  // impositions with no son at all
  std::uint64_t pruned = 0;     // sons dropped by the policy
  std::uint64_t max_stack_depth = 0;
  std::uint64_t s_max = 0;      // largest number of sons of one imposition
  std::uint64_t final_rows = 0;
  std::int64_t max_bubble_growth = 0;  // max over sons of bubbles(son) - bubbles(parent)

  EngineStats& operator+=(const EngineStats& other);
};

/// Receives final rows in emission order. Returning false stops the run.
class RowSink {
 public:
  virtual ~RowSink() = default;
  virtual bool accept(const Row& r) = 0;
};

class CollectRows final : public RowSink {
 public:
  bool accept(const Row& r) override;
  const std::vector<Row>& rows() const { return rows_; }
  std::vector<Row> take() { return std::move(rows_); }

 private:
  std::vector<Row> rows_;
};

/// Sums per-row counts and drops the rows.
class CountOnly final : public RowSink {
 public:
  explicit CountOnly(CardinalityFilter filter = {}, bool with_profile = false);
  bool accept(const Row& r) override;
  const BigCount& total() const { return total_; }
  /// Per-size totals, index 0..w; empty unless requested.
  const std::vector<BigCount>& profile() const { return profile_; }

 private:
  CardinalityFilter filter_;
  bool with_profile_;
  BigCount total_ = 0;
  std::vector<BigCount> profile_;
};

/// Streams the members of each final row that pass `filter`, up to `limit`
/// models in total.
class EnumerateModels final : public RowSink {
 public:
  using Emit = std::function<void(const VarSet&)>;
  EnumerateModels(Emit emit, CardinalityFilter filter = {},
                  std::optional<std::uint64_t> limit = std::nullopt);
  bool accept(const Row& r) override;
  std::uint64_t emitted() const { return emitted_; }

 private:
  Emit emit_;
  CardinalityFilter filter_;
  std::optional<std::uint64_t> limit_;
  std::uint64_t emitted_ = 0;
};

/// State after one imposition (or the initial state, with no constraint).
struct TraceStep {
  std::size_t step = 0;
  std::optional<std::size_t> constraint;  // 0-based index of the imposed constraint
  std::optional<Outcome> outcome;
  std::vector<StackFrame> stack;  // top first
  std::size_t final_rows = 0;     // final rows delivered so far
};

using TraceObserver = std::function<void(const TraceStep&)>;

/// Depth-first driver. Starts from the all-twos row with pc = 0; repeatedly
/// pops the top frame, imposes its pending constraint, and pushes the sons
/// that pass the policy so that the first son is processed next. Sons of
/// the last constraint go straight to the sink, in emission order.
///
/// The final rows are pairwise disjoint and their union is the model set,
/// minus rows the policy proved useless for its count.
///
/// Throws PolicyError when the policy's preconditions do not hold.
EngineStats run(const HornInstance& inst, const PrunePolicy& policy, RowSink& sink,
                const TraceObserver& observer = {});

/// run() recording every step.
std::vector<TraceStep> trace(const HornInstance& inst, const PrunePolicy& policy);

/// Checks `policy` against `inst` without running. Throws PolicyError.
void check_policy(const HornInstance& inst, const PrunePolicy& policy);

class EnumerationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Counts first and refuses (EnumerationCapExceeded) when more than `cap`
/// models would be written; otherwise streams them. Returns the number of
/// models written.
std::uint64_t enumerate_models(const HornInstance& inst, const PrunePolicy& policy,
                               CardinalityFilter filter, std::optional<std::uint64_t> limit,
                               std::uint64_t cap, const EnumerateModels::Emit& emit);

}  // namespace hornex

#endif  // HORNEX_ENGINE_HPP
