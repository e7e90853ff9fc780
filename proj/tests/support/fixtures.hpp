#ifndef HORNEX_TESTS_FIXTURES_HPP
#define HORNEX_TESTS_FIXTURES_HPP

#include "hornex/instance.hpp"
#include "hornex/row.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace hornex::testing {

// Sigma = {123 -> 56, 345 -> 6}, Theta = {136*} on w = 6, in this order.
HornInstance intro_instance();

// The same formula as four CNF clauses, before premise merging.
const char* intro_dimacs();

// 14-position row with four bubbles and two twos.
Row four_bubble_row();

// 13-position row with three bubbles, used for forcing violations.
Row ie_example_row();

struct RandomSpec {
  std::size_t min_w = 1;
  std::size_t max_w = 12;
  std::size_t max_h = 8;
  std::size_t max_lhs = 4;         // premise / body size
  std::size_t max_conclusion = 2;
  double implication_share = 0.5;  // 0 gives noncover-only, 1 implication-only
};

HornInstance random_instance(std::mt19937_64& rng, const RandomSpec& spec);

// Uniformly labelled row on w positions with up to `max_bubbles` bubbles.
Row random_row(std::mt19937_64& rng, std::size_t w, std::size_t max_bubbles = 3);

// All subsets of {1..w} in increasing bitmask order. w <= 20.
std::vector<VarSet> all_subsets(std::size_t w);

// Membership straight from the field definition, via RowParts only.
bool member_by_definition(const RowParts& parts, const VarSet& x);

std::set<VarSet> members_by_definition(const Row& r);

}  // namespace hornex::testing

#endif  // HORNEX_TESTS_FIXTURES_HPP
