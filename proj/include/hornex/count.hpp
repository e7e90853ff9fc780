#ifndef HORNEX_COUNT_HPP
#define HORNEX_COUNT_HPP

#include "hornex/engine.hpp"
#include "hornex/inclusion_exclusion.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hornex {

enum class Strategy {
  kDirect,      // one run, per-row Card over the final rows
  kDifference,  // Eq(k) as Le(k) - Le(k-1)
  kNoncoverEq,  // Eq(k) with noncover pruning; Sigma empty, h <= w, k <= w - h
  kIeEq,        // Eq(k) with inclusion-exclusion pruning on unit-split Sigma
};

std::string to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

/// Largest constraint count (after unit splitting) accepted by kIeEq.
inline constexpr std::size_t kMaxIeConstraints = 20;

struct CountReport {
  BigCount n = 0;
  CardinalityFilter filter;
  std::optional<std::vector<BigCount>> f_vector;
  EngineStats stats;
  std::string strategy;
};

struct CountOptions {
  /// Overrides the pruning policy of kDirect. Must not drop rows holding
  /// counted models: none, weak, feasible, or an extra policy matching the
  /// filter.
  std::optional<PrunePolicy> policy;
  bool with_f_vector = false;
};

/// Throws PolicyError when `policy` could drop rows holding models that
/// `filter` admits.
void check_compatible(const PrunePolicy& policy, const CardinalityFilter& filter, std::size_t w);

/// Exact count of the models passing `filter`. Throws PolicyError when the
/// strategy does not apply to the filter or the instance.
CountReport count(const HornInstance& inst, CardinalityFilter filter,
                  Strategy strategy = Strategy::kDirect, const CountOptions& options = {});

/// f_k = number of k-element models, k = 0..w.
std::vector<BigCount> f_vector(const HornInstance& inst);

}  // namespace hornex

#endif  // HORNEX_COUNT_HPP
