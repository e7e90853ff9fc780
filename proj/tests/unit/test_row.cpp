#include "fixtures.hpp"
#include "hornex/errors.hpp"
#include "hornex/row.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace hornex;

namespace {

const char* kIntroRows[] = {"2 2 0 2 2 2", "0 2 1 n1 n1 2", "1 0 1 n1 n1 0", "0 2 1 1 1 1"};

std::vector<BigCount> big(std::vector<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("parse and render", "[row]") {
  for (const char* text : kIntroRows) CHECK(Row::parse(text).render() == text);
  CHECK(Row::parse("n2 n2 n1 n1").render() == "n1 n1 n2 n2");
  CHECK(Row::parse("n n 1 n1 n1").render() == "n1 n1 1 n2 n2");
  CHECK(Row::parse("n5 2 n5").render() == "n1 2 n1");
  CHECK_THROWS_AS(Row::parse("n1 2 2"), RowError);
  CHECK_THROWS_AS(Row::parse("0 3"), RowError);
  CHECK(Row::all_twos(3).render() == "2 2 2");
}

TEST_CASE("row fields", "[row]") {
  auto r = Row::parse("0 n1 n1 n1 n2 n2 1 2 n3 n3 n3 n3 1");
  CHECK(r.w() == 13);
  CHECK(r.zeros() == VarSet{1});
  CHECK(r.ones() == VarSet{7, 13});
  CHECK(r.twos() == VarSet{8});
  CHECK(r.num_bubbles() == 3);
  CHECK(r.bubble(0) == VarSet{2, 3, 4});
  CHECK(r.bubble(1) == VarSet{5, 6});
  CHECK(r.bubble(2) == VarSet{9, 10, 11, 12});
  CHECK(r.bubble_of(10) == 2);
  CHECK(r.bubble_of(8) == Row::kNoBubble);
  CHECK(r.bubble_size(2) == 4);
  CHECK(r.num_zeros() == 1);
  CHECK(r.num_ones() == 2);
  CHECK(r.num_twos() == 1);
}

TEST_CASE("canonicalize sorts bubbles and validates the partition", "[row]") {
  RowParts parts{10, {1, 2, 6, 7, 8}, {}, {}, {{5, 10}, {3, 4, 9}}};
  auto r = canonicalize(parts);
  CHECK(r.bubbles() == std::vector<VarSet>{{3, 4, 9}, {5, 10}});
  CHECK(canonicalize(r.parts()) == r);
  CHECK(r.parts().bubbles == std::vector<VarSet>{{3, 4, 9}, {5, 10}});

  CHECK_THROWS_AS(canonicalize({8, {1, 2, 3, 4, 5, 6, 8}, {}, {}, {{7}}}), RowError);
  CHECK_THROWS_AS(canonicalize({3, {1}, {1}, {2, 3}, {}}), RowError);
  CHECK_THROWS_AS(canonicalize({3, {1}, {}, {2}, {}}), RowError);
  CHECK_THROWS_AS(canonicalize({3, {1}, {}, {2, 4}, {}}), RowError);
}

TEST_CASE("membership", "[row]") {
  auto rho3 = Row::parse(kIntroRows[2]);
  CHECK(rho3.contains(VarSet{1, 3, 4}));
  CHECK_FALSE(rho3.contains(VarSet{1, 3, 4, 5}));
  CHECK_FALSE(rho3.contains(VarSet{1, 2, 3}));
  CHECK_FALSE(rho3.contains(VarSet{3, 4}));
  auto full = Row::all_twos(6);
  for (const auto& x : testing::all_subsets(6)) CHECK(full.contains(x));
}

TEST_CASE("cardinalities of the introductory final rows", "[row]") {
  CHECK(cardinality(Row::parse(kIntroRows[0])) == 32);
  CHECK(cardinality(Row::parse(kIntroRows[1])) == 12);
  CHECK(cardinality(Row::parse(kIntroRows[2])) == 3);
  CHECK(cardinality(Row::parse(kIntroRows[3])) == 2);
  CHECK(cardinality(Row::all_twos(6)) == 64);
  CHECK(cardinality(Row::parse("0 n1 n1 1 1 0 1 1 0 2 2 1 1")) == 12);
  CHECK(cardinality(Row::all_twos(200)) == pow2(200));

  CHECK(card_profile(Row::parse(kIntroRows[0])) == big({1, 5, 10, 10, 5, 1, 0}));
  CHECK(card_profile(Row::parse(kIntroRows[1])) == big({0, 1, 4, 5, 2, 0, 0}));
  CHECK(card_profile(Row::parse(kIntroRows[2])) == big({0, 0, 1, 2, 0, 0, 0}));
  CHECK(card_profile(Row::parse(kIntroRows[3])) == big({0, 0, 0, 0, 1, 1, 0}));
}

TEST_CASE("card_k", "[row]") {
  CHECK(card_k(Row::parse("0 n1 n1 1 1 0 1 1 0 2 2 1 1"), 8) == 5);
  CHECK(card_k(Row::all_twos(6), 3) == 20);
  CHECK(card_k(Row::parse(kIntroRows[0]), 4) == 5);
  CHECK(card_k(Row::parse(kIntroRows[0]), 7) == 0);
  CHECK(card_k(Row::parse(kIntroRows[3]), 3) == 0);
  CHECK(card_le_k(Row::parse(kIntroRows[1]), 3) == 10);
  CHECK(card_ge_k(Row::parse(kIntroRows[1]), 3) == 7);
  CHECK(card_ge_k(Row::parse(kIntroRows[1]), 0) == 12);
  CHECK(card_le_k(Row::parse(kIntroRows[1]), 100) == 12);
}

TEST_CASE("enumeration order", "[row]") {
  auto r = Row::parse("0 1 0 n1 n2 n2 1 n1");
  auto all = enumerate(r);
  REQUIRE(all.size() == 9);
  CHECK(all[0] == VarSet{2, 7});
  CHECK(all[1] == VarSet{2, 4, 7});
  CHECK(all[2] == VarSet{2, 7, 8});
  CHECK(all[3] == VarSet{2, 5, 7});

  // Twos are the low digits.
  CHECK(enumerate(Row::parse("2 2")) == std::vector<VarSet>{{}, {1}, {2}, {1, 2}});
  CHECK(enumerate_k(Row::parse(kIntroRows[3]), 4) == std::vector<VarSet>{{3, 4, 5, 6}});
  CHECK(enumerate_k(Row::all_twos(3), 0) == std::vector<VarSet>{{}});
  CHECK(enumerate_k(Row::parse("1 1 2"), 1).empty());
  CHECK(enumerate_k(Row::parse("2 2"), 5).empty());

  int seen = 0;
  bool finished = for_each_member(Row::all_twos(4), std::nullopt, [&](const VarSet&) {
    return ++seen < 3;
  });
  CHECK_FALSE(finished);
  CHECK(seen == 3);
}

TEST_CASE("size-k enumeration keeps the full order", "[row]") {
  auto r = Row::parse("2 n1 n1 n1 2 n2 n2 1 2");
  auto all = enumerate(r);
  for (std::size_t k = 0; k <= r.w(); ++k) {
    std::vector<VarSet> expected;
    for (const auto& x : all) {
      if (x.size() == k) expected.push_back(x);
    }
    CHECK(enumerate_k(r, k) == expected);
  }
}

TEST_CASE("rows agree with the field definition", "[row][property]") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 400; ++i) {
    std::size_t w = 1 + rng() % 10;
    auto r = testing::random_row(rng, w, 3);
    auto expected = testing::members_by_definition(r);

    auto listed = enumerate(r);
    std::set<VarSet> as_set(listed.begin(), listed.end());
    REQUIRE(as_set.size() == listed.size());
    CHECK(as_set == expected);
    CHECK(cardinality(r) == expected.size());

    auto profile = card_profile(r);
    REQUIRE(profile.size() == w + 1);
    std::vector<std::size_t> by_size(w + 1, 0);
    for (const auto& x : expected) ++by_size[x.size()];
    for (std::size_t k = 0; k <= w; ++k) {
      CHECK(profile[k] == by_size[k]);
      CHECK(card_k(r, k) == by_size[k]);
      CHECK(enumerate_k(r, k).size() == by_size[k]);
    }
    for (const auto& x : testing::all_subsets(w)) {
      CHECK(r.contains(x) == static_cast<bool>(expected.count(x)));
    }
  }
}
