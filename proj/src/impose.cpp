#include "hornex/impose.hpp"

#include "hornex/detail/overloaded.hpp"

namespace hornex {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::kUnchanged: return "unchanged";
    case Outcome::kTrivialSon: return "trivial-son";
    case Outcome::kSplit: return "split";
    case Outcome::kDeleted: return "deleted";
  }
  return "?";
}

namespace {

// How a set S sits relative to a row.
struct Footprint {
  bool meets_zeros = false;
  bool inside_ones = true;
  bool covers_bubble = false;
};

Footprint footprint(const Row& r, const VarSet& s) {
  Footprint f;
  std::vector<std::size_t> hits(r.num_bubbles(), 0);
  for (Var v : s) {
    auto l = r.label(v);
    if (l != Row::kOne) f.inside_ones = false;
    if (l == Row::kZero) f.meets_zeros = true;
    if (l >= Row::kFirstBubble) {
      auto b = l - Row::kFirstBubble;
      if (++hits[b] == r.bubble_size(b)) f.covers_bubble = true;
    }
  }
  return f;
}

// Mutable label vector used while building sons. Bubble labels are keys;
// Row::from_labels renumbers them canonically.
class SonBuilder {
 public:
  explicit SonBuilder(const Row& r)
      : labels_(r.labels()), members_(r.bubbles()),
        next_key_(Row::kFirstBubble + static_cast<std::uint32_t>(r.num_bubbles())) {}

  std::vector<std::uint32_t>& labels() { return labels_; }
  const std::vector<VarSet>& members() const { return members_; }

  std::uint32_t fresh_key() { return next_key_++; }

  // Sets `part` (a nonempty proper subset of bubble b, all still carrying
  // b's key) to 1 and turns the remnant into a 0 if it is a single position.
  static void force_part(std::vector<std::uint32_t>& labels, const VarSet& bubble,
                         const VarSet& part) {
    for (Var v : part) labels[v - 1] = Row::kOne;
    if (bubble.size() - part.size() == 1) {
      for (Var v : bubble) {
        if (labels[v - 1] != Row::kOne) labels[v - 1] = Row::kZero;
      }
    }
  }

  // Forbids `part` (nonempty): a fresh bubble, or a 0 if it is a singleton.
  void forbid(std::vector<std::uint32_t>& labels, const VarSet& part) {
    if (part.size() == 1) {
      labels[part.front() - 1] = Row::kZero;
      return;
    }
    auto key = fresh_key();
    for (Var v : part) labels[v - 1] = key;
  }

 private:
  std::vector<std::uint32_t> labels_;
  std::vector<VarSet> members_;
  std::uint32_t next_key_;
};

// Members of r with a not wholly inside X. Requires a disjoint from zeros,
// covering no bubble, and not inside ones.
std::vector<Row> premise_violating_sons(const Row& r, const VarSet& a) {
  SonBuilder builder(r);
  const auto& bubbles = builder.members();
  std::vector<Row> sons;

  std::vector<std::pair<std::size_t, VarSet>> parts;  // (bubble, bubble & a)
  std::vector<Var> twos_part;
  {
    std::vector<std::vector<Var>> per_bubble(r.num_bubbles());
    for (Var v : a) {
      if (auto b = r.bubble_of(v); b != Row::kNoBubble) {
        per_bubble[b].push_back(v);
      } else if (r.is_two(v)) {
        twos_part.push_back(v);
      }
    }
    for (std::size_t b = 0; b < per_bubble.size(); ++b) {
      if (!per_bubble[b].empty()) parts.emplace_back(b, VarSet::from_sorted(std::move(per_bubble[b])));
    }
  }

  // `prefix` has the parts of the bubbles handled so far set to 1.
  auto& prefix = builder.labels();
  for (const auto& [b, part] : parts) {
    auto son = prefix;
    builder.forbid(son, part);
    for (Var v : bubbles[b]) {
      if (!part.contains(v)) son[v - 1] = Row::kTwo;
    }
    sons.push_back(Row::from_labels(std::move(son)));
    SonBuilder::force_part(prefix, bubbles[b], part);
  }
  if (!twos_part.empty()) {
    auto son = prefix;
    builder.forbid(son, VarSet::from_sorted(std::move(twos_part)));
    sons.push_back(Row::from_labels(std::move(son)));
  }
  return sons;
}

ImpositionResult unchanged(const Row& r) { return {Outcome::kUnchanged, {r}}; }
ImpositionResult deleted() { return {Outcome::kDeleted, {}}; }

}  // namespace

std::optional<Row> restrict_row(const Row& r, const VarSet& force_in, const VarSet& force_out) {
  auto labels = r.labels();
  const std::size_t t = r.num_bubbles();
  std::vector<std::size_t> in_hits(t, 0);
  std::vector<char> out_hit(t, 0);
  for (Var v : force_out) {
    auto l = r.label(v);
    if (l == Row::kOne) return std::nullopt;
    if (l >= Row::kFirstBubble) out_hit[l - Row::kFirstBubble] = 1;
    labels[v - 1] = Row::kZero;
  }
  for (Var v : force_in) {
    auto l = r.label(v);
    if (l == Row::kZero || labels[v - 1] == Row::kZero) return std::nullopt;
    if (l >= Row::kFirstBubble) ++in_hits[l - Row::kFirstBubble];
    labels[v - 1] = Row::kOne;
  }
  for (std::size_t b = 0; b < t; ++b) {
    if (!out_hit[b] && in_hits[b] == 0) continue;
    const auto key = Row::kFirstBubble + static_cast<std::uint32_t>(b);
    if (out_hit[b]) {
      // A forced 0 already keeps the bubble from filling up.
      for (auto& l : labels) {
        if (l == key) l = Row::kTwo;
      }
      continue;
    }
    std::size_t remnant = r.bubble_size(b) - in_hits[b];
    if (remnant == 0) return std::nullopt;
    if (remnant == 1) {
      for (auto& l : labels) {
        if (l == key) l = Row::kZero;
      }
    }
  }
  return Row::from_labels(std::move(labels));
}

ImpositionResult impose_implication(const Row& r, const Implication& imp) {
  const Footprint a = footprint(r, imp.premise);
  const Footprint b = footprint(r, imp.conclusion);
  if (a.meets_zeros || a.covers_bubble || b.inside_ones) return unchanged(r);
  if (a.inside_ones) {
    if (b.meets_zeros || b.covers_bubble) return deleted();
    auto son = restrict_row(r, imp.conclusion, {});
    return {Outcome::kTrivialSon, {std::move(*son)}};
  }
  ImpositionResult result{Outcome::kSplit, premise_violating_sons(r, imp.premise)};
  if (auto easy = restrict_row(r, imp.premise.united(imp.conclusion), {})) {
    result.sons.push_back(std::move(*easy));
  }
  return result;
}

ImpositionResult impose_negative_clause(const Row& r, const NegativeClause& nc) {
  const Footprint a = footprint(r, nc.body);
  if (a.meets_zeros || a.covers_bubble) return unchanged(r);
  if (a.inside_ones) return deleted();
  return {Outcome::kSplit, premise_violating_sons(r, nc.body)};
}

ImpositionResult impose(const Row& r, const Constraint& c) {
  return std::visit(
      detail::Overloaded{[&](const Implication& i) { return impose_implication(r, i); },
                         [&](const NegativeClause& n) { return impose_negative_clause(r, n); }},
      c);
}

bool satisfies_all_members(const Row& r, const Constraint& c) {
  return std::visit(detail::Overloaded{[&](const Implication& i) {
                                         auto a = footprint(r, i.premise);
                                         return a.meets_zeros || a.covers_bubble ||
                                                footprint(r, i.conclusion).inside_ones;
                                       },
                                       [&](const NegativeClause& n) {
                                         auto a = footprint(r, n.body);
                                         return a.meets_zeros || a.covers_bubble;
                                       }},
                    c);
}

bool satisfies_some_member(const Row& r, const Constraint& c) {
  return std::visit(detail::Overloaded{[&](const Implication& i) {
                                         if (satisfies_all_members(r, c)) return true;
                                         if (!footprint(r, i.premise).inside_ones) return true;
                                         auto b = footprint(r, i.conclusion);
                                         return !(b.meets_zeros || b.covers_bubble);
                                       },
                                       [&](const NegativeClause& n) {
                                         return !footprint(r, n.body).inside_ones;
                                       }},
                    c);
}

}  // namespace hornex
