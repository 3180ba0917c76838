#include <random>

#include "doctest.h"
#include "granule/approximation.hpp"
#include "support/fixtures.hpp"
#include "support/properties.hpp"

using namespace granule;
using fixtures::objects;

namespace {

std::vector<std::pair<ObjectSet, std::string>> listed(const Approximation& a, const Vocabulary& vocab) {
  std::vector<std::pair<ObjectSet, std::string>> out;
  for (const auto& g : a.granules) out.emplace_back(g.granule, g.description ? render(*g.description, vocab) : "");
  return out;
}

}  // namespace

TEST_CASE("lower conjunctive approximation on the li20 table") {
  auto ctx = fixtures::context("li20.cxt");
  auto a = lower_wedge(ctx, objects(6, {4, 5, 6}));
  CHECK_FALSE(a.exact);
  auto got = listed(a, vocabulary_of(ctx));
  REQUIRE(got.size() == 2);
  CHECK(got[0] == std::pair{objects(6, {4, 5}), std::string("a2 ∧ a3")});
  CHECK(got[1] == std::pair{objects(6, {4, 6}), std::string("a2 ∧ a5")});
}

TEST_CASE("upper conjunctive approximation") {
  auto li = fixtures::context("li20.cxt");
  auto got = listed(upper_wedge(li, objects(6, {4, 5, 6})), vocabulary_of(li));
  CHECK(got == decltype(got){{objects(6, {2, 4, 5, 6}), "a2"}});

  auto ctx = fixtures::context("table1.cxt");
  got = listed(upper_wedge(ctx, objects(7, {1, 2})), vocabulary_of(ctx));
  CHECK(got == decltype(got){{objects(7, {1, 2, 7}), "a2"}});
  auto exact = upper_wedge(ctx, objects(7, {2, 7}));
  CHECK(exact.exact);
  CHECK(exact.granules[0].granule == objects(7, {2, 7}));
  CHECK(upper_wedge(ctx, ctx.all_objects()).inapplicable == Reason::EmptyIntent);
}

TEST_CASE("lower conjunctive approximation is strict") {
  auto ctx = fixtures::context("table1.cxt");
  auto a = lower_wedge(ctx, objects(7, {2, 7}));
  CHECK(a.exact);
  for (const auto& g : a.granules) CHECK(g.granule.is_proper_subset_of(objects(7, {2, 7})));
  CHECK_THROWS_AS(lower_wedge(ctx, ctx.all_objects()), std::invalid_argument);
}

TEST_CASE("three-way approximations on table 3") {
  auto cctx = appose_negation(fixtures::context("table1.cxt"));
  auto up = upper_three_way(cctx, objects(7, {2, 7}));
  CHECK(up.exact);
  CHECK(up.granules[0].granule == objects(7, {2, 7}));
  auto closed = upper_three_way(cctx, objects(7, {1, 2}));
  CHECK(closed.granules[0].granule == compound_extent(cctx, compound_intent(cctx, objects(7, {1, 2}))));
  CHECK(upper_three_way(cctx, cctx.a_block().no_objects()).granules[0].granule.empty());
  auto down = lower_three_way(cctx, objects(7, {2, 3, 7}));
  for (const auto& g : down.granules) CHECK(g.granule.is_proper_subset_of(objects(7, {2, 3, 7})));
}

TEST_CASE("disjunctive approximations on table 1") {
  auto ctx = fixtures::context("table1.cxt");
  auto vocab = vocabulary_of(ctx);
  auto lv = lower_vee(ctx, objects(7, {1, 4, 5, 6, 7}));
  CHECK(lv.exact);
  CHECK(listed(lv, vocab)[0].second == "a3 ∨ a4 ∨ a5");
  lv = lower_vee(ctx, objects(7, {1, 2}));
  CHECK(lv.granules[0].granule.empty());
  CHECK_FALSE(lv.granules[0].description);
  CHECK(lower_vee(ctx, ctx.all_objects()).granules[0].granule.is_full());

  auto got = listed(upper_vee(ctx, objects(7, {1, 2})), vocab);
  REQUIRE_FALSE(got.empty());
  CHECK(got[0] == std::pair{objects(7, {1, 2, 7}), std::string("a2")});
  got = listed(upper_vee(ctx, objects(7, {4})), vocab);
  CHECK(got == decltype(got){{objects(7, {4, 5, 6}), "a5"}});
  CHECK(upper_vee(ctx, objects(7, {1, 4, 5, 6, 7})).exact);
}

TEST_CASE("upper common-and-necessary approximation") {
  auto cctx = fixtures::table5();
  auto a = upper_cn(cctx, objects(7, {2, 3}));
  CHECK(a.exact);
  CHECK(a.granules[0].granule == objects(7, {2, 3}));
  a = upper_cn(cctx, objects(7, {2, 7}));
  REQUIRE(a.granules.size() == 1);
  CHECK(a.granules[0].granule == cn_extent(cctx, cn_intent(cctx, objects(7, {2, 7}))));
  CHECK(objects(7, {2, 7}).is_subset_of(a.granules[0].granule));
}

TEST_CASE("approximations are optimal against brute force") {
  std::mt19937_64 rng(9);
  properties::Tally tally;
  for (int k = 0; k < 30; ++k) {
    auto ctx = oracle::random_context(rng, 1 + k % 6, 1 + k % 5, 0.2 + 0.3 * (k % 3));
    auto b = oracle::random_context(rng, ctx.object_count(), 1 + k % 4, 0.4, "b");
    properties::approximations(ctx, b, tally);
  }
  for (const auto& note : tally.notes) MESSAGE(note);
  CHECK(tally.violations == 0);
}
