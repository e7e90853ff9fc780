#include "hornex/instance.hpp"

#include "hornex/detail/overloaded.hpp"
#include "hornex/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace hornex {

namespace {

using detail::Overloaded;

void check_range(const VarSet& s, std::size_t w) {
  if (!s.empty() && (s.front() < 1 || s.back() > w)) {
    throw InputError("variable index out of range 1.." + std::to_string(w) + " in " +
                     s.to_string());
  }
}

VarSet to_varset(const std::vector<std::int64_t>& vars, std::size_t w, std::size_t line) {
  std::vector<Var> out;
  out.reserve(vars.size());
  for (auto v : vars) {
    if (v < 1 || static_cast<std::uint64_t>(v) > w) {
      throw InputError("variable " + std::to_string(v) + " out of range 1.." + std::to_string(w),
                       line);
    }
    out.push_back(static_cast<Var>(v));
  }
  return VarSet(std::move(out));
}

std::size_t leading_size(const Constraint& c) {
  return std::visit(Overloaded{[](const Implication& i) { return i.premise.size(); },
                               [](const NegativeClause& n) { return n.body.size(); }},
                    c);
}

}  // namespace

HornInstance::HornInstance(std::size_t w, std::vector<Constraint> constraints)
    : w_(w), constraints_(std::move(constraints)) {
  if (w_ == 0) throw InputError("universe size must be positive");
  for (const auto& c : constraints_) {
    std::visit(Overloaded{[&](const Implication& i) {
                            check_range(i.premise, w_);
                            check_range(i.conclusion, w_);
                            if (i.conclusion.empty()) {
                              throw InputError("implication with empty conclusion");
                            }
                            if (i.premise.intersects(i.conclusion)) {
                              throw InputError("implication premise meets its conclusion");
                            }
                          },
                          [&](const NegativeClause& n) {
                            check_range(n.body, w_);
                            if (n.body.empty()) throw UnsatisfiableInput("empty negative clause");
                          }},
               c);
  }
}

std::vector<Implication> HornInstance::sigma() const {
  std::vector<Implication> out;
  for (const auto& c : constraints_) {
    if (auto* i = std::get_if<Implication>(&c)) out.push_back(*i);
  }
  return out;
}

std::vector<NegativeClause> HornInstance::theta() const {
  std::vector<NegativeClause> out;
  for (const auto& c : constraints_) {
    if (auto* n = std::get_if<NegativeClause>(&c)) out.push_back(*n);
  }
  return out;
}

bool HornInstance::has_implications() const {
  return std::any_of(constraints_.begin(), constraints_.end(),
                     [](const Constraint& c) { return std::holds_alternative<Implication>(c); });
}

bool HornInstance::has_negative_clauses() const {
  return std::any_of(constraints_.begin(), constraints_.end(), [](const Constraint& c) {
    return std::holds_alternative<NegativeClause>(c);
  });
}

bool HornInstance::all_units() const {
  return std::all_of(constraints_.begin(), constraints_.end(), [](const Constraint& c) {
    auto* i = std::get_if<Implication>(&c);
    return !i || i->is_unit();
  });
}

HornInstance normalize(const std::vector<RawConstraint>& raw, std::size_t w) {
  if (w == 0) throw InputError("universe size must be positive");
  std::vector<Constraint> out;
  out.reserve(raw.size());
  for (const auto& rc : raw) {
    VarSet first = to_varset(rc.premise, w, rc.line);
    if (rc.kind == RawConstraint::Kind::kNegativeClause) {
      if (first.empty()) throw UnsatisfiableInput("empty negative clause", rc.line);
      out.emplace_back(NegativeClause{std::move(first)});
      continue;
    }
    VarSet conclusion = to_varset(rc.conclusion, w, rc.line).minus(first);
    if (conclusion.empty()) continue;
    out.emplace_back(Implication{std::move(first), std::move(conclusion)});
  }
  return HornInstance(w, std::move(out));
}

HornInstance normalize(std::vector<Constraint> constraints, std::size_t w) {
  std::vector<Constraint> out;
  out.reserve(constraints.size());
  for (auto& c : constraints) {
    if (auto* i = std::get_if<Implication>(&c)) {
      i->conclusion = i->conclusion.minus(i->premise);
      if (i->conclusion.empty()) continue;
    }
    out.push_back(std::move(c));
  }
  return HornInstance(w, std::move(out));
}

HornInstance merge_premises(const HornInstance& inst) {
  std::vector<Constraint> out;
  std::map<VarSet, std::size_t> slot;
  for (const auto& c : inst.constraints()) {
    auto* i = std::get_if<Implication>(&c);
    if (!i) {
      out.push_back(c);
      continue;
    }
    auto [it, fresh] = slot.try_emplace(i->premise, out.size());
    if (fresh) {
      out.push_back(c);
    } else {
      auto& merged = std::get<Implication>(out[it->second]);
      merged.conclusion = merged.conclusion.united(i->conclusion);
    }
  }
  return HornInstance(inst.w(), std::move(out));
}

HornInstance split_units(const HornInstance& inst) {
  std::vector<Constraint> out;
  for (const auto& c : inst.constraints()) {
    auto* i = std::get_if<Implication>(&c);
    if (!i) {
      out.push_back(c);
      continue;
    }
    for (Var b : i->conclusion) out.emplace_back(Implication{i->premise, VarSet{b}});
  }
  return HornInstance(inst.w(), std::move(out));
}

HornInstance reorder_by_size(const HornInstance& inst) {
  std::vector<Constraint> out = inst.constraints();
  std::stable_sort(out.begin(), out.end(), [](const Constraint& a, const Constraint& b) {
    return leading_size(a) < leading_size(b);
  });
  return HornInstance(inst.w(), std::move(out));
}

bool satisfies(const VarSet& x, const Constraint& c) {
  return std::visit(Overloaded{[&](const Implication& i) {
                                 return !i.premise.is_subset_of(x) || i.conclusion.is_subset_of(x);
                               },
                               [&](const NegativeClause& n) { return !n.body.is_subset_of(x); }},
                    c);
}

}  // namespace hornex
