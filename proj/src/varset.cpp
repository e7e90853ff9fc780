#include "hornex/varset.hpp"

#include <algorithm>
#include <iterator>

namespace hornex {

VarSet::VarSet(std::initializer_list<Var> vars) : VarSet(std::vector<Var>(vars)) {}

VarSet::VarSet(std::vector<Var> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

VarSet VarSet::from_sorted(std::vector<Var> vars) {
  VarSet s;
  s.vars_ = std::move(vars);
  return s;
}

VarSet VarSet::range(Var first, Var last) {
  std::vector<Var> vars;
  if (first <= last) {
    vars.reserve(last - first + 1);
    for (Var v = first; v <= last; ++v) vars.push_back(v);
  }
  return from_sorted(std::move(vars));
}

bool VarSet::contains(Var v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

bool VarSet::is_subset_of(const VarSet& other) const {
  return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end());
}

bool VarSet::intersects(const VarSet& other) const {
  auto a = vars_.begin();
  auto b = other.vars_.begin();
  while (a != vars_.end() && b != other.vars_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      return true;
    }
  }
  return false;
}

VarSet VarSet::united(const VarSet& other) const {
  std::vector<Var> out;
  out.reserve(size() + other.size());
  std::set_union(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(),
                 std::back_inserter(out));
  return from_sorted(std::move(out));
}

VarSet VarSet::minus(const VarSet& other) const {
  std::vector<Var> out;
  std::set_difference(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(),
                      std::back_inserter(out));
  return from_sorted(std::move(out));
}

VarSet VarSet::intersected(const VarSet& other) const {
  std::vector<Var> out;
  std::set_intersection(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(),
                        std::back_inserter(out));
  return from_sorted(std::move(out));
}

void VarSet::insert(Var v) {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || *it != v) vars_.insert(it, v);
}

std::string VarSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(vars_[i]);
  }
  s += '}';
  return s;
}

}  // namespace hornex
