#include "fixtures.hpp"
#include "hornex/impose.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace hornex;

namespace {

std::vector<Row> rows(std::initializer_list<const char*> texts) {
  std::vector<Row> out;
  for (const char* t : texts) out.push_back(Row::parse(t));
  return out;
}

const Implication kFourBubbleImp{VarSet::range(1, 8), {12, 13}};

// One son per bubble meeting the premise, the twos son, then the easy son.
const std::vector<const char*> kFourBubbleSons = {
    "2 2 n n n2 n3 n3 n4 2 n2 n3 n3 n4 n4", "2 2 1 1 0 n3 n3 n4 0 2 n3 n3 n4 n4",
    "2 2 1 1 1 n n n4 0 0 2 2 n4 n4",       "2 2 1 1 1 1 1 0 0 0 n3 n3 2 2",
    "n n 1 1 1 1 1 1 0 0 n3 n3 n4 n4",      "1 1 1 1 1 1 1 1 0 0 0 1 1 0",
};

std::set<VarSet> satisfying_members(const Row& r, const Constraint& c) {
  std::set<VarSet> out;
  for (const auto& x : testing::members_by_definition(r)) {
    if (satisfies(x, c)) out.insert(x);
  }
  return out;
}

Constraint random_constraint(std::mt19937_64& rng, std::size_t w) {
  std::vector<Var> a, b;
  for (Var v = 1; v <= w; ++v) {
    auto roll = rng() % 6;
    if (roll < 2) a.push_back(v);
    else if (roll == 2) b.push_back(v);
  }
  if (rng() % 3 == 0 || b.empty()) {
    if (a.empty()) a.push_back(static_cast<Var>(1 + rng() % w));
    return NegativeClause{VarSet(a)};
  }
  return Implication{VarSet(a), VarSet(b)};
}

}  // namespace

TEST_CASE("splitting a row with four bubbles", "[impose]") {
  auto result = impose_implication(testing::four_bubble_row(), kFourBubbleImp);
  CHECK(result.outcome == Outcome::kSplit);
  std::vector<Row> expected;
  for (const char* t : kFourBubbleSons) expected.push_back(Row::parse(t));
  CHECK(result.sons == expected);
  REQUIRE(result.sons.size() == 6);
  CHECK(result.sons[0].render() == "2 2 n1 n1 n2 n3 n3 n4 2 n2 n3 n3 n4 n4");
  CHECK(result.sons[5].render() == "1 1 1 1 1 1 1 1 0 0 0 1 1 0");
}

TEST_CASE("four-bubble row: conclusion fills a bubble", "[impose]") {
  auto result = impose_implication(testing::four_bubble_row(), {VarSet::range(1, 8), {13, 14}});
  std::vector<Row> expected;
  for (std::size_t i = 0; i < 5; ++i) expected.push_back(Row::parse(kFourBubbleSons[i]));
  CHECK(result.sons == expected);
}

TEST_CASE("four-bubble row: ones in the premise are copied", "[impose]") {
  auto r = Row::parse("2 2 n1 n1 n2 n3 n3 n4 n1 n2 n3 n3 n4 n4 1");
  auto premise = VarSet::range(1, 8).united(VarSet{15});
  auto result = impose_implication(r, {premise, {12, 13}});
  REQUIRE(result.sons.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(result.sons[i] == Row::parse(std::string(kFourBubbleSons[i]) + " 1"));
  }
}

TEST_CASE("four-bubble row: premise inside bubbles", "[impose]") {
  auto result = impose_implication(testing::four_bubble_row(), {VarSet::range(3, 8), {12, 13}});
  CHECK(result.sons == rows({kFourBubbleSons[0], kFourBubbleSons[1], kFourBubbleSons[2], kFourBubbleSons[3],
                             "2 2 1 1 1 1 1 1 0 0 0 1 1 0"}));
}

TEST_CASE("four-bubble row: premise inside twos", "[impose]") {
  auto result = impose_implication(testing::four_bubble_row(), {{1, 2}, {12, 13}});
  CHECK(result.sons == rows({"n n n1 n1 n2 n3 n3 n4 n1 n2 n3 n3 n4 n4",
                             "1 1 n1 n1 n2 n3 n3 n4 n1 n2 n3 1 1 n4"}));
}

TEST_CASE("premise inside ones gives a single son", "[impose]") {
  auto result = impose_implication(Row::parse("1 n1 n1 1 2 n2 n2 n2 1"), {{1, 9}, {3, 4, 5, 6}});
  CHECK(result.outcome == Outcome::kTrivialSon);
  CHECK(result.sons == rows({"1 0 1 1 1 1 n n 1"}));
}

TEST_CASE("unchanged and deleted outcomes", "[impose]") {
  auto zero_in_premise = impose_implication(Row::parse("0 2 2"), {{1}, {2}});
  CHECK(zero_in_premise.outcome == Outcome::kUnchanged);
  CHECK(zero_in_premise.sons == rows({"0 2 2"}));

  auto conclusion_on = impose_implication(Row::parse("2 1 2"), {{1}, {2}});
  CHECK(conclusion_on.outcome == Outcome::kUnchanged);

  auto conclusion_off = impose_implication(Row::parse("1 0 2"), {{1}, {2}});
  CHECK(conclusion_off.outcome == Outcome::kDeleted);
  CHECK(conclusion_off.sons.empty());

  // The premise cannot be fully present.
  CHECK(impose_negative_clause(Row::parse("n n 2"), {{1, 2}}).outcome == Outcome::kUnchanged);
  CHECK(impose_negative_clause(Row::parse("1 1 1 2 1 1"), {{1, 3, 6}}).outcome == Outcome::kDeleted);
}

TEST_CASE("negative clauses on the introductory rows", "[impose]") {
  auto result = impose_negative_clause(Row::parse("n1 n1 1 n2 n2 2"), {{1, 3, 6}});
  CHECK(result.outcome == Outcome::kSplit);
  CHECK(result.sons == rows({"0 2 1 n1 n1 2", "1 0 1 n1 n1 0"}));

  auto single = impose_negative_clause(Row::parse("2 2"), {{2}});
  CHECK(single.sons == rows({"2 0"}));
  CHECK(single.outcome == Outcome::kSplit);
}

TEST_CASE("first implication on the all-twos row", "[impose]") {
  auto inst = testing::intro_instance();
  auto result = impose(Row::all_twos(6), inst[0]);
  CHECK(result.outcome == Outcome::kSplit);
  CHECK(result.sons == rows({"n n n 2 2 2", "1 1 1 2 1 1"}));
}

TEST_CASE("satisfies_all_members and satisfies_some_member", "[impose]") {
  Constraint c = Implication{{1}, {2, 3}};
  CHECK_FALSE(satisfies_some_member(Row::parse("1 0 2"), c));
  CHECK(satisfies_some_member(Row::all_twos(3), c));
  CHECK(satisfies_all_members(Row::parse("0 2 2"), c));
  CHECK_FALSE(satisfies_all_members(Row::all_twos(3), c));
  Constraint four = kFourBubbleImp;
  CHECK_FALSE(satisfies_all_members(testing::four_bubble_row(), four));
  CHECK(satisfies_some_member(testing::four_bubble_row(), four));
  CHECK_FALSE(satisfies_some_member(Row::parse("1 1 2"), Constraint{NegativeClause{{1, 2}}}));
}

TEST_CASE("restrict_row", "[impose]") {
  auto r = Row::parse("n1 n1 n1 2 n2 n2 1");
  CHECK(restrict_row(r, {1}, {}) == Row::parse("1 n n 2 n2 n2 1"));
  CHECK(restrict_row(r, {1, 2}, {}) == Row::parse("1 1 0 2 n2 n2 1"));
  CHECK_FALSE(restrict_row(r, {1, 2, 3}, {}).has_value());
  CHECK(restrict_row(r, {}, {1}) == Row::parse("0 2 2 2 n2 n2 1"));
  CHECK(restrict_row(r, {4}, {5}) == Row::parse("n1 n1 n1 1 0 2 1"));
  CHECK_FALSE(restrict_row(r, {}, {7}).has_value());
  CHECK_FALSE(restrict_row(r, {4}, {4}).has_value());
  CHECK(restrict_row(r, {}, {}) == r);
}

TEST_CASE("impositions split exactly the satisfying members", "[impose][property]") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1500; ++i) {
    std::size_t w = 1 + rng() % 9;
    auto r = testing::random_row(rng, w, 3);
    auto c = random_constraint(rng, w);
    auto result = impose(r, c);
    auto expected = satisfying_members(r, c);

    std::set<VarSet> covered;
    std::size_t total = 0;
    for (const auto& son : result.sons) {
      CHECK(canonicalize(son.parts()) == son);
      CHECK(son.num_bubbles() <= r.num_bubbles() + 1);
      auto members = testing::members_by_definition(son);
      CHECK_FALSE(members.empty());
      total += members.size();
      covered.insert(members.begin(), members.end());
    }
    CHECK(total == covered.size());  // pairwise disjoint
    CHECK(covered == expected);

    CHECK(satisfies_all_members(r, c) == (expected.size() == cardinality(r)));
    CHECK(satisfies_some_member(r, c) == !expected.empty());
    switch (result.outcome) {
      case Outcome::kUnchanged:
        CHECK(result.sons == std::vector<Row>{r});
        break;
      case Outcome::kDeleted:
        CHECK(expected.empty());
        break;
      case Outcome::kTrivialSon:
        CHECK(result.sons.size() == 1);
        CHECK(expected.size() < cardinality(r));
        break;
      case Outcome::kSplit:
        CHECK(expected.size() < cardinality(r));
        break;
    }
  }
}
