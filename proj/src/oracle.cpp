#include "hornex/oracle.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hornex::oracle {

namespace {

struct MaskConstraint {
  std::uint32_t lhs;  // premise or body
  std::uint32_t rhs;  // conclusion; 0 marks a negative clause
};

std::uint32_t mask_of(const VarSet& s) {
  std::uint32_t m = 0;
  for (Var v : s) m |= std::uint32_t{1} << (v - 1);
  return m;
}

std::vector<MaskConstraint> compile(const HornInstance& inst) {
  if (inst.w() > kMaxUniverse) {
    throw std::invalid_argument("oracle limited to w <= " + std::to_string(kMaxUniverse) +
                                ", got " + std::to_string(inst.w()));
  }
  std::vector<MaskConstraint> out;
  for (const auto& c : inst.constraints()) {
    if (auto* i = std::get_if<Implication>(&c)) {
      out.push_back({mask_of(i->premise), mask_of(i->conclusion)});
    } else {
      out.push_back({mask_of(std::get<NegativeClause>(c).body), 0});
    }
  }
  return out;
}

bool holds(const std::vector<MaskConstraint>& cs, std::uint32_t x) {
  for (const auto& c : cs) {
    bool premise_in = (c.lhs & x) == c.lhs;
    if (!premise_in) continue;
    if (c.rhs == 0) return false;            // A* inside X
    if ((c.rhs & x) != c.rhs) return false;  // A inside X, B not
  }
  return true;
}

VarSet to_varset(std::uint32_t x) {
  std::vector<Var> out;
  for (Var v = 1; x; ++v, x >>= 1) {
    if (x & 1u) out.push_back(v);
  }
  return VarSet::from_sorted(std::move(out));
}

template <class Fn>
void scan(const HornInstance& inst, Fn&& fn) {
  auto cs = compile(inst);
  const std::uint64_t end = std::uint64_t{1} << inst.w();
  for (std::uint64_t x = 0; x < end; ++x) {
    auto m = static_cast<std::uint32_t>(x);
    if (holds(cs, m)) fn(m);
  }
}

}  // namespace

bool is_model(const HornInstance& inst, const VarSet& x) {
  for (const auto& c : inst.constraints()) {
    if (!satisfies(x, c)) return false;
  }
  return true;
}

std::vector<VarSet> models(const HornInstance& inst) {
  std::vector<VarSet> out;
  scan(inst, [&](std::uint32_t m) { out.push_back(to_varset(m)); });
  return out;
}

BigCount count(const HornInstance& inst, SizeFilter filter, std::size_t k) {
  std::uint64_t n = 0;
  scan(inst, [&](std::uint32_t m) {
    auto size = static_cast<std::size_t>(std::popcount(m));
    bool pass = filter == SizeFilter::kAll || (filter == SizeFilter::kLe && size <= k) ||
                (filter == SizeFilter::kGe && size >= k) || (filter == SizeFilter::kEq && size == k);
    if (pass) ++n;
  });
  return BigCount(n);
}

std::vector<BigCount> f_vector(const HornInstance& inst) {
  std::vector<std::uint64_t> f(inst.w() + 1, 0);
  scan(inst, [&](std::uint32_t m) { ++f[std::popcount(m)]; });
  return {f.begin(), f.end()};
}

}  // namespace hornex::oracle
