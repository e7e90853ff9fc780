#ifndef HORNEX_ORACLE_HPP
#define HORNEX_ORACLE_HPP

#include "hornex/bigcount.hpp"
#include "hornex/instance.hpp"

#include <optional>
#include <vector>

namespace hornex::oracle {

// Exhaustive reference answers: every subset of {1, ..., w} is tested
// against every constraint by definition. Shares nothing with the row
// machinery. Throws std::invalid_argument when w exceeds kMaxUniverse.

inline constexpr std::size_t kMaxUniverse = 24;

enum class SizeFilter { kAll, kLe, kGe, kEq };

bool is_model(const HornInstance& inst, const VarSet& x);

/// All models, ordered by their 0/1 characteristic vector read as a binary
/// number with variable 1 as the lowest bit.
std::vector<VarSet> models(const HornInstance& inst);

BigCount count(const HornInstance& inst, SizeFilter filter = SizeFilter::kAll, std::size_t k = 0);

std::vector<BigCount> f_vector(const HornInstance& inst);

}  // namespace hornex::oracle

#endif  // HORNEX_ORACLE_HPP
