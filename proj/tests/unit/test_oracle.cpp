#include "fixtures.hpp"
#include "hornex/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace hornex;

TEST_CASE("oracle on the introductory formula", "[oracle]") {
  auto inst = testing::intro_instance();
  CHECK(oracle::is_model(inst, VarSet{1, 3, 4}));
  CHECK_FALSE(oracle::is_model(inst, VarSet{1, 3, 6}));
  CHECK(oracle::count(inst) == 49);
  CHECK(oracle::count(inst, oracle::SizeFilter::kEq, 3) == 17);
  CHECK(oracle::count(inst, oracle::SizeFilter::kEq, 4) == 8);
  CHECK(oracle::f_vector(inst) == std::vector<BigCount>{1, 6, 15, 17, 8, 2, 0});
  auto models = oracle::models(inst);
  REQUIRE(models.size() == 49);
  CHECK(models[0] == VarSet{});
  CHECK(models[1] == VarSet{1});
  CHECK(models[2] == VarSet{2});
  CHECK(models[3] == VarSet{1, 2});
}

TEST_CASE("oracle guards the universe size", "[oracle]") {
  CHECK_THROWS_AS(oracle::count(HornInstance(25, {})), std::invalid_argument);
  CHECK(oracle::count(HornInstance(20, {})) == BigCount(1) << 20);
}

TEST_CASE("structure of model families", "[oracle][property]") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    testing::RandomSpec spec;
    spec.max_w = 9;
    spec.implication_share = (i % 2 == 0) ? 1.0 : 0.0;
    auto inst = testing::random_instance(rng, spec);
    auto list = oracle::models(inst);
    std::set<VarSet> models(list.begin(), list.end());
    for (const auto& x : list) CHECK(oracle::is_model(inst, x));
    CHECK(models.size() == list.size());
    if (!inst.has_negative_clauses()) {
      // Closed under intersection, contains the whole universe.
      CHECK(models.count(VarSet::range(1, static_cast<Var>(inst.w()))));
      for (const auto& x : list) {
        for (const auto& y : list) CHECK(models.count(x.intersected(y)));
      }
    }
    if (!inst.has_implications()) {
      // Closed under subsets, contains the empty set.
      CHECK(models.count(VarSet{}));
      for (const auto& x : list) {
        for (Var v : x) CHECK(models.count(x.minus(VarSet{v})));
      }
    }
  }
}
