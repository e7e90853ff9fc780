#include "hornex/count.hpp"

#include "hornex/errors.hpp"

namespace hornex {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::kDirect: return "direct";
    case Strategy::kDifference: return "difference";
    case Strategy::kNoncoverEq: return "noncover-eq";
    case Strategy::kIeEq: return "ie-eq";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  if (name == "direct") return Strategy::kDirect;
  if (name == "difference") return Strategy::kDifference;
  if (name == "noncover-eq") return Strategy::kNoncoverEq;
  if (name == "ie-eq") return Strategy::kIeEq;
  return std::nullopt;
}

namespace {

using Kind = CardinalityFilter::Kind;

PrunePolicy default_policy(const CardinalityFilter& filter) {
  return filter.kind == Kind::kLe ? PrunePolicy::extra_le(filter.k) : PrunePolicy::feasible();
}

}  // namespace

void check_compatible(const PrunePolicy& policy, const CardinalityFilter& filter,
                      std::size_t w) {
  switch (policy.kind) {
    case PrunePolicy::Kind::kNone:
    case PrunePolicy::Kind::kWeak:
    case PrunePolicy::Kind::kFeasible:
      return;
    case PrunePolicy::Kind::kExtraLe: {
      bool ok = (filter.kind == Kind::kLe || filter.kind == Kind::kEq) ? policy.k >= filter.k
                                                                       : policy.k >= w;
      if (!ok) throw PolicyError(policy.name() + " pruning would lose " + filter.name() + " models");
      return;
    }
    case PrunePolicy::Kind::kExtraEqNoncover:
    case PrunePolicy::Kind::kExtraEqIE:
      if (filter.kind != Kind::kEq || filter.k != policy.k) {
        throw PolicyError(policy.name() + " pruning only applies to counting exactly " +
                          std::to_string(policy.k) + "-element models");
      }
      return;
  }
}

namespace {

CountReport run_count(const HornInstance& inst, CardinalityFilter filter,
                      const PrunePolicy& policy, bool with_f_vector, std::string strategy) {
  CountOnly sink(filter, with_f_vector);
  CountReport report;
  report.stats = run(inst, policy, sink);
  report.n = sink.total();
  report.filter = filter;
  report.strategy = std::move(strategy);
  if (with_f_vector) {
    std::vector<BigCount> f(inst.w() + 1);
    const auto& profile = sink.profile();
    for (std::size_t j = 0; j < profile.size() && j < f.size(); ++j) {
      if (filter.admits(j)) f[j] = profile[j];
    }
    report.f_vector = std::move(f);
  }
  return report;
}

void require_eq(const CardinalityFilter& filter, Strategy s) {
  if (filter.kind != Kind::kEq) {
    throw PolicyError("strategy " + to_string(s) + " only counts exactly-k models");
  }
}

}  // namespace

CountReport count(const HornInstance& inst, CardinalityFilter filter, Strategy strategy,
                  const CountOptions& options) {
  switch (strategy) {
    case Strategy::kDirect: {
      PrunePolicy policy = options.policy.value_or(default_policy(filter));
      check_compatible(policy, filter, inst.w());
      return run_count(inst, filter, policy, options.with_f_vector,
                       "direct/" + policy.name());
    }
    case Strategy::kDifference: {
      require_eq(filter, strategy);
      auto upper = run_count(inst, CardinalityFilter::le(filter.k),
                             PrunePolicy::extra_le(filter.k), false, "");
      CountReport report;
      report.filter = filter;
      report.n = upper.n;
      report.stats = upper.stats;
      if (filter.k > 0) {
        auto lower = run_count(inst, CardinalityFilter::le(filter.k - 1),
                               PrunePolicy::extra_le(filter.k - 1), false, "");
        report.n -= lower.n;
        report.stats += lower.stats;
      }
      // Level monotonicity is not checked.
      report.strategy = "difference (levels not checked)";
      return report;
    }
    case Strategy::kNoncoverEq: {
      require_eq(filter, strategy);
      auto policy = PrunePolicy::extra_eq_noncover(filter.k);
      check_policy(inst, policy);
      return run_count(inst, filter, policy, options.with_f_vector, "noncover-eq");
    }
    case Strategy::kIeEq: {
      require_eq(filter, strategy);
      HornInstance units = split_units(inst);
      if (units.h() > kMaxIeConstraints) {
        throw PolicyError("ie-eq needs at most " + std::to_string(kMaxIeConstraints) +
                          " unit constraints, instance has " + std::to_string(units.h()));
      }
      return run_count(units, filter, PrunePolicy::extra_eq_ie(filter.k), options.with_f_vector,
                       "ie-eq");
    }
  }
  throw PolicyError("unknown strategy");
}

std::vector<BigCount> f_vector(const HornInstance& inst) {
  CountOptions options;
  options.with_f_vector = true;
  return *count(inst, CardinalityFilter::all(), Strategy::kDirect, options).f_vector;
}

}  // namespace hornex
