#include "hornex/inclusion_exclusion.hpp"

#include "hornex/detail/overloaded.hpp"
#include "hornex/errors.hpp"
#include "hornex/impose.hpp"

namespace hornex {

namespace {

void require_unit(std::span<const Constraint> constraints) {
  for (const auto& c : constraints) {
    if (auto* i = std::get_if<Implication>(&c); i && !i->is_unit()) {
      throw PolicyError("inclusion-exclusion needs unit implications, got conclusion " +
                        i->conclusion.to_string());
    }
  }
}

std::optional<Row> force_one(const Row& r, const Constraint& c) {
  return std::visit(
      detail::Overloaded{
          [&](const Implication& i) { return restrict_row(r, i.premise, i.conclusion); },
          [&](const NegativeClause& n) { return restrict_row(r, n.body, VarSet{}); }},
      c);
}

class Summation {
 public:
  Summation(std::span<const Constraint> constraints, std::optional<std::size_t> k)
      : constraints_(constraints), k_(k) {}

  BigCount run(const Row& r) {
    visit(r, 0, false);
    return total_;
  }

 private:
  void visit(const Row& forced, std::size_t next, bool odd) {
    BigCount size = cardinality(forced);
    BigCount term = size;
    if (k_) {
      // Pair with the same subset plus "|X| != k".
      term -= size - card_k(forced, *k_);
    }
    if (odd) {
      total_ -= term;
    } else {
      total_ += term;
    }
    for (std::size_t j = next; j < constraints_.size(); ++j) {
      if (auto deeper = force_one(forced, constraints_[j])) visit(*deeper, j + 1, !odd);
    }
  }

  std::span<const Constraint> constraints_;
  std::optional<std::size_t> k_;
  BigCount total_ = 0;
};

}  // namespace

std::optional<Row> force_violations(const Row& r, std::span<const Constraint> subset) {
  require_unit(subset);
  VarSet in;
  VarSet out;
  for (const auto& c : subset) {
    std::visit(detail::Overloaded{[&](const Implication& i) {
                                    in = in.united(i.premise);
                                    out = out.united(i.conclusion);
                                  },
                                  [&](const NegativeClause& n) { in = in.united(n.body); }},
               c);
  }
  return restrict_row(r, in, out);
}

BigCount ie_model_count(const Row& r, std::span<const Constraint> constraints,
                        std::optional<std::size_t> k) {
  require_unit(constraints);
  return Summation(constraints, k).run(r);
}

BigCount ie_model_count(const Row& r, const HornInstance& inst, std::optional<std::size_t> k) {
  return ie_model_count(r, inst.constraints(), k);
}

}  // namespace hornex
