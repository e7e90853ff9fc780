#include "fixtures.hpp"

#include <algorithm>
#include <numeric>

namespace hornex::testing {

HornInstance intro_instance() {
  return HornInstance(6, {Implication{{1, 2, 3}, {5, 6}}, Implication{{3, 4, 5}, {6}},
                          NegativeClause{{1, 3, 6}}});
}

const char* intro_dimacs() {
  return "c intro example\n"
         "p cnf 6 4\n"
         "-1 -2 -3 5 0\n"
         "-1 -2 -3 6 0\n"
         "-3 -4 -5 6 0\n"
         "-1 -3 -6 0\n";
}

Row four_bubble_row() { return Row::parse("2 2 n1 n1 n2 n3 n3 n4 n1 n2 n3 n3 n4 n4"); }

Row ie_example_row() { return Row::parse("0 n1 n1 n1 n2 n2 1 2 n3 n3 n3 n3 1"); }

namespace {

VarSet random_subset(std::mt19937_64& rng, std::size_t w, std::size_t size) {
  std::vector<Var> all(w);
  std::iota(all.begin(), all.end(), Var{1});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(size, w));
  return VarSet(std::move(all));
}

}  // namespace

HornInstance random_instance(std::mt19937_64& rng, const RandomSpec& spec) {
  std::uniform_int_distribution<std::size_t> w_dist(spec.min_w, spec.max_w);
  const std::size_t w = w_dist(rng);
  std::uniform_int_distribution<std::size_t> h_dist(0, spec.max_h);
  const std::size_t h = h_dist(rng);
  std::bernoulli_distribution implication(spec.implication_share);
  std::vector<Constraint> cs;
  for (std::size_t i = 0; i < h; ++i) {
    if (implication(rng)) {
      std::uniform_int_distribution<std::size_t> lhs(0, std::min(spec.max_lhs, w - 1));
      std::uniform_int_distribution<std::size_t> rhs(1, spec.max_conclusion);
      VarSet premise = random_subset(rng, w, lhs(rng));
      VarSet conclusion = random_subset(rng, w, rhs(rng)).minus(premise);
      if (conclusion.empty()) continue;
      cs.emplace_back(Implication{premise, conclusion});
    } else {
      std::uniform_int_distribution<std::size_t> body(1, std::min(spec.max_lhs, w));
      cs.emplace_back(NegativeClause{random_subset(rng, w, body(rng))});
    }
  }
  return HornInstance(w, std::move(cs));
}

Row random_row(std::mt19937_64& rng, std::size_t w, std::size_t max_bubbles) {
  std::uniform_int_distribution<std::uint32_t> pick(0, 2 + static_cast<std::uint32_t>(max_bubbles));
  std::vector<std::uint32_t> labels(w);
  for (auto& l : labels) l = pick(rng);
  // Lone bubble positions become 2.
  for (std::uint32_t key = Row::kFirstBubble; key < Row::kFirstBubble + max_bubbles; ++key) {
    if (std::count(labels.begin(), labels.end(), key) == 1) {
      std::replace(labels.begin(), labels.end(), key, Row::kTwo);
    }
  }
  return Row::from_labels(std::move(labels));
}

std::vector<VarSet> all_subsets(std::size_t w) {
  std::vector<VarSet> out;
  out.reserve(std::size_t{1} << w);
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << w); ++m) {
    std::vector<Var> vs;
    for (Var v = 1; v <= w; ++v) {
      if (m & (std::uint32_t{1} << (v - 1))) vs.push_back(v);
    }
    out.push_back(VarSet::from_sorted(std::move(vs)));
  }
  return out;
}

bool member_by_definition(const RowParts& parts, const VarSet& x) {
  if (x.intersects(parts.zeros)) return false;
  if (!parts.ones.is_subset_of(x)) return false;
  for (const auto& b : parts.bubbles) {
    if (b.is_subset_of(x)) return false;
  }
  return true;
}

std::set<VarSet> members_by_definition(const Row& r) {
  auto parts = r.parts();
  std::set<VarSet> out;
  for (const auto& x : all_subsets(r.w())) {
    if (member_by_definition(parts, x)) out.insert(x);
  }
  return out;
}

}  // namespace hornex::testing
