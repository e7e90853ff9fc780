#include "hornex/closure.hpp"

#include "hornex/errors.hpp"

namespace hornex {

ClosureOperator::ClosureOperator(std::span<const Implication> sigma, std::size_t w)
    : w_(w), premise_size_(sigma.size()), watch_start_(w + 1, 0) {
  conclusion_start_.reserve(sigma.size() + 1);
  conclusion_start_.push_back(0);
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    premise_size_[j] = static_cast<std::uint32_t>(sigma[j].premise.size());
    if (sigma[j].premise.empty()) unconditional_.push_back(static_cast<std::uint32_t>(j));
    for (Var a : sigma[j].premise) ++watch_start_[a];
    for (Var b : sigma[j].conclusion) conclusion_.push_back(b);
    conclusion_start_.push_back(static_cast<std::uint32_t>(conclusion_.size()));
  }
  for (std::size_t v = 1; v <= w; ++v) watch_start_[v] += watch_start_[v - 1];
  watch_.resize(watch_start_[w]);
  std::vector<std::uint32_t> fill(watch_start_.begin(), watch_start_.end() - 1);
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    for (Var a : sigma[j].premise) watch_[fill[a - 1]++] = static_cast<std::uint32_t>(j);
  }
}

std::vector<char> ClosureOperator::close_mask(std::span<const Var> u) const {
  std::vector<char> in(w_, 0);
  std::vector<std::uint32_t> missing = premise_size_;
  std::vector<Var> queue;
  queue.reserve(w_);
  auto add = [&](Var v) {
    if (!in[v - 1]) {
      in[v - 1] = 1;
      queue.push_back(v);
    }
  };
  auto fire = [&](std::uint32_t j) {
    for (auto p = conclusion_start_[j]; p < conclusion_start_[j + 1]; ++p) add(conclusion_[p]);
  };
  for (Var v : u) add(v);
  for (auto j : unconditional_) fire(j);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Var v = queue[head];
    for (auto p = watch_start_[v - 1]; p < watch_start_[v]; ++p) {
      auto j = watch_[p];
      if (--missing[j] == 0) fire(j);
    }
  }
  return in;
}

VarSet ClosureOperator::close(const VarSet& u) const {
  auto in = close_mask(u.view());
  std::vector<Var> out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i]) out.push_back(static_cast<Var>(i + 1));
  }
  return VarSet::from_sorted(std::move(out));
}

VarSet close(std::span<const Implication> sigma, const VarSet& u, std::size_t w) {
  return ClosureOperator(sigma, w).close(u);
}

namespace {

ClosureOperator make_closure(const HornInstance& inst) {
  auto sigma = inst.sigma();
  return ClosureOperator(sigma, inst.w());
}

}  // namespace

FeasibilityOracle::FeasibilityOracle(const HornInstance& inst)
    : w_(inst.w()), closure_(make_closure(inst)), theta_(inst.theta()) {}

std::optional<std::size_t> FeasibilityOracle::closed_witness(const Row& r) const {
  auto ones = r.ones();
  auto y = closure_.close_mask(ones.view());
  std::size_t size = 0;
  std::vector<std::size_t> bubble_hits(r.num_bubbles(), 0);
  for (Var v = 1; v <= w_; ++v) {
    if (!y[v - 1]) continue;
    ++size;
    if (r.is_zero(v)) return std::nullopt;
    if (auto b = r.bubble_of(v); b != Row::kNoBubble) {
      if (++bubble_hits[b] == r.bubble_size(b)) return std::nullopt;
    }
  }
  for (const auto& nc : theta_) {
    bool covered = true;
    for (Var a : nc.body) {
      if (!y[a - 1]) {
        covered = false;
        break;
      }
    }
    if (covered) return std::nullopt;
  }
  return size;
}

bool FeasibilityOracle::feasible(const Row& r) const { return closed_witness(r).has_value(); }

bool FeasibilityOracle::extra_feasible_le(const Row& r, std::size_t k) const {
  auto size = closed_witness(r);
  return size && *size <= k;
}

bool FeasibilityOracle::satisfiable() const { return feasible(Row::all_twos(w_)); }

bool satisfiable(const HornInstance& inst) { return FeasibilityOracle(inst).satisfiable(); }

bool feasible(const HornInstance& inst, const Row& r) {
  return FeasibilityOracle(inst).feasible(r);
}

bool extra_feasible_le(const HornInstance& inst, const Row& r, std::size_t k) {
  return FeasibilityOracle(inst).extra_feasible_le(r, k);
}

bool extra_feasible_eq_noncover(std::span<const NegativeClause> theta, const Row& r,
                                std::size_t k, std::span<const NegativeClause> pending) {
  const std::size_t w = r.w();
  const std::size_t h = theta.size();
  if (h > w || k > w - h) {
    throw PolicyError("noncover test needs h <= w and k <= w - h (h = " + std::to_string(h) +
                      ", w = " + std::to_string(w) + ", k = " + std::to_string(k) + ")");
  }
  if (r.num_ones() > k) return false;
  for (const auto& nc : pending) {
    bool inside = true;
    for (Var a : nc.body) {
      if (!r.is_one(a)) {
        inside = false;
        break;
      }
    }
    if (inside) return false;
  }
  return true;
}

}  // namespace hornex
