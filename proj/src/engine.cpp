#include "hornex/engine.hpp"

#include "hornex/closure.hpp"
#include "hornex/errors.hpp"
#include "hornex/inclusion_exclusion.hpp"

#include <algorithm>

namespace hornex {

bool CardinalityFilter::admits(std::size_t size) const {
  switch (kind) {
    case Kind::kAll: return true;
    case Kind::kLe: return size <= k;
    case Kind::kGe: return size >= k;
    case Kind::kEq: return size == k;
  }
  return false;
}

BigCount CardinalityFilter::count(const Row& r) const {
  switch (kind) {
    case Kind::kAll: return cardinality(r);
    case Kind::kLe: return card_le_k(r, k);
    case Kind::kGe: return card_ge_k(r, k);
    case Kind::kEq: return card_k(r, k);
  }
  return 0;
}

std::string CardinalityFilter::name() const {
  switch (kind) {
    case Kind::kAll: return "all";
    case Kind::kLe: return "le";
    case Kind::kGe: return "ge";
    case Kind::kEq: return "eq";
  }
  return "?";
}

std::string PrunePolicy::name() const {
  switch (kind) {
    case Kind::kNone: return "none";
    case Kind::kWeak: return "weak";
    case Kind::kFeasible: return "feasible";
    case Kind::kExtraLe: return "extra-le(" + std::to_string(k) + ")";
    case Kind::kExtraEqNoncover: return "noncover-eq(" + std::to_string(k) + ")";
    case Kind::kExtraEqIE: return "ie-eq(" + std::to_string(k) + ")";
  }
  return "?";
}

EngineStats& EngineStats::operator+=(const EngineStats& other) {
  impositions += other.impositions;
  deletions += other.deletions;
  pruned += other.pruned;
  final_rows += other.final_rows;
  max_stack_depth = std::max(max_stack_depth, other.max_stack_depth);
  s_max = std::max(s_max, other.s_max);
  max_bubble_growth = std::max(max_bubble_growth, other.max_bubble_growth);
  return *this;
}

bool CollectRows::accept(const Row& r) {
  rows_.push_back(r);
  return true;
}

CountOnly::CountOnly(CardinalityFilter filter, bool with_profile)
    : filter_(filter), with_profile_(with_profile) {}

bool CountOnly::accept(const Row& r) {
  if (with_profile_) {
    auto profile = card_profile(r);
    if (profile_.size() < profile.size()) profile_.resize(profile.size());
    for (std::size_t j = 0; j < profile.size(); ++j) {
      profile_[j] += profile[j];
      if (filter_.admits(j)) total_ += profile[j];
    }
  } else {
    total_ += filter_.count(r);
  }
  return true;
}

EnumerateModels::EnumerateModels(Emit emit, CardinalityFilter filter,
                                 std::optional<std::uint64_t> limit)
    : emit_(std::move(emit)), filter_(filter), limit_(limit) {}

bool EnumerateModels::accept(const Row& r) {
  auto one = [&](const VarSet& x) {
    if (limit_ && emitted_ >= *limit_) return false;
    emit_(x);
    ++emitted_;
    return true;
  };
  if (filter_.kind == CardinalityFilter::Kind::kAll) return for_each_member(r, std::nullopt, one);
  for (std::size_t size = r.num_ones(); size <= r.w(); ++size) {
    if (!filter_.admits(size)) continue;
    if (!for_each_member(r, size, one)) return false;
  }
  return !limit_ || emitted_ < *limit_;
}

void check_policy(const HornInstance& inst, const PrunePolicy& policy) {
  switch (policy.kind) {
    case PrunePolicy::Kind::kExtraEqNoncover:
      if (inst.has_implications()) {
        throw PolicyError("noncover-eq pruning needs an instance without implications");
      }
      if (inst.h() > inst.w() || policy.k > inst.w() - inst.h()) {
        throw PolicyError("noncover-eq pruning needs h <= w and k <= w - h (h = " +
                          std::to_string(inst.h()) + ", w = " + std::to_string(inst.w()) +
                          ", k = " + std::to_string(policy.k) + ")");
      }
      break;
    case PrunePolicy::Kind::kExtraEqIE:
      if (!inst.all_units()) {
        throw PolicyError("ie-eq pruning needs unit implications; split them first");
      }
      break;
    default:
      break;
  }
}

namespace {

class Pruner {
 public:
  Pruner(const HornInstance& inst, const PrunePolicy& policy)
      : inst_(inst), policy_(policy), oracle_(inst), theta_(inst.theta()) {}

  bool keep(const Row& r, std::size_t pc) const {
    switch (policy_.kind) {
      case PrunePolicy::Kind::kNone:
        return true;
      case PrunePolicy::Kind::kWeak:
        for (std::size_t i = pc; i < inst_.h(); ++i) {
          if (!satisfies_some_member(r, inst_[i])) return false;
        }
        return true;
      case PrunePolicy::Kind::kFeasible:
        return oracle_.feasible(r);
      case PrunePolicy::Kind::kExtraLe:
        return oracle_.extra_feasible_le(r, policy_.k);
      case PrunePolicy::Kind::kExtraEqNoncover: {
        // Sigma is empty, so constraint i is theta_[i].
        std::span<const NegativeClause> pending(theta_);
        return extra_feasible_eq_noncover(theta_, r, policy_.k, pending.subspan(pc));
      }
      case PrunePolicy::Kind::kExtraEqIE: {
        std::span<const Constraint> pending(inst_.constraints());
        return ie_model_count(r, pending.subspan(pc), policy_.k) > 0;
      }
    }
    return true;
  }

 private:
  const HornInstance& inst_;
  PrunePolicy policy_;
  FeasibilityOracle oracle_;
  std::vector<NegativeClause> theta_;
};

}  // namespace

EngineStats run(const HornInstance& inst, const PrunePolicy& policy, RowSink& sink,
                const TraceObserver& observer) {
  check_policy(inst, policy);
  Pruner pruner(inst, policy);
  const std::size_t h = inst.h();
  EngineStats stats;
  std::vector<StackFrame> stack;
  std::size_t step = 0;

  auto report = [&](std::optional<std::size_t> constraint, std::optional<Outcome> outcome) {
    if (!observer) return;
    TraceStep ts;
    ts.step = step;
    ts.constraint = constraint;
    ts.outcome = outcome;
    ts.stack.assign(stack.rbegin(), stack.rend());
    ts.final_rows = stats.final_rows;
    observer(ts);
  };
  auto deliver = [&](const Row& r) {
    ++stats.final_rows;
    return sink.accept(r);
  };

  Row root = Row::all_twos(inst.w());
  if (!pruner.keep(root, 0)) {
    report(std::nullopt, std::nullopt);
    return stats;
  }
  if (h == 0) {
    deliver(root);
    report(std::nullopt, std::nullopt);
    return stats;
  }
  stack.push_back({std::move(root), 0});
  stats.max_stack_depth = 1;
  report(std::nullopt, std::nullopt);

  bool stopped = false;
  while (!stack.empty() && !stopped) {
    StackFrame frame = std::move(stack.back());
    stack.pop_back();
    const std::size_t pc = frame.pc;
    ImpositionResult result = impose(frame.row, inst[pc]);
    ++step;
    ++stats.impositions;
    if (result.outcome == Outcome::kDeleted) ++stats.deletions;
    stats.s_max = std::max<std::uint64_t>(stats.s_max, result.sons.size());

    const auto parent_bubbles = static_cast<std::int64_t>(frame.row.num_bubbles());
    std::vector<Row> kept;
    kept.reserve(result.sons.size());
    for (auto& son : result.sons) {
      stats.max_bubble_growth = std::max(
          stats.max_bubble_growth, static_cast<std::int64_t>(son.num_bubbles()) - parent_bubbles);
      if (pruner.keep(son, pc + 1)) {
        kept.push_back(std::move(son));
      } else {
        ++stats.pruned;
      }
    }
    if (pc + 1 == h) {
      for (const auto& son : kept) {
        if (!deliver(son)) {
          stopped = true;
          break;
        }
      }
    } else {
      for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
        stack.push_back({std::move(*it), pc + 1});
      }
      stats.max_stack_depth = std::max<std::uint64_t>(stats.max_stack_depth, stack.size());
    }
    report(pc, result.outcome);
  }
  return stats;
}

std::vector<TraceStep> trace(const HornInstance& inst, const PrunePolicy& policy) {
  std::vector<TraceStep> steps;
  CollectRows sink;
  run(inst, policy, sink, [&](const TraceStep& s) { steps.push_back(s); });
  return steps;
}

std::uint64_t enumerate_models(const HornInstance& inst, const PrunePolicy& policy,
                               CardinalityFilter filter, std::optional<std::uint64_t> limit,
                               std::uint64_t cap, const EnumerateModels::Emit& emit) {
  CountOnly counter(filter);
  run(inst, policy, counter);
  BigCount planned = counter.total();
  if (limit && planned > *limit) planned = *limit;
  if (planned > cap) {
    throw EnumerationCapExceeded("refusing to enumerate " + to_decimal(planned) +
                                 " models (cap " + std::to_string(cap) + ")");
  }
  EnumerateModels sink(emit, filter, limit);
  run(inst, policy, sink);
  return sink.emitted();
}

}  // namespace hornex
