#include <random>

#include "doctest.h"
#include "granule/derivation.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace granule;
using fixtures::attrs;
using fixtures::objects;

TEST_CASE("table 1 derivations") {
  auto ctx = fixtures::context("table1.cxt");
  CHECK(intent(ctx, objects(7, {2, 7})) == attrs(ctx, {"a1", "a2"}));
  CHECK(intent(ctx, ctx.all_objects()).empty());
  CHECK(intent(ctx, ctx.no_objects()).is_full());
  CHECK(extent(ctx, attrs(ctx, {"a5"})) == objects(7, {4, 5, 6}));
  CHECK(extent(ctx, attrs(ctx, {"a2", "a3"})) == objects(7, {1, 7}));
  CHECK(extent(ctx, ctx.no_attributes()).is_full());
  CHECK(possibility(ctx, attrs(ctx, {"a3", "a4", "a5"})) == objects(7, {1, 4, 5, 6, 7}));
  CHECK(possibility(ctx, attrs(ctx, {"a2", "a3", "a4"})) == objects(7, {1, 2, 5, 6, 7}));
  CHECK(possibility(ctx, ctx.no_attributes()).empty());
  CHECK(necessity(ctx, objects(7, {1, 4, 5, 6, 7})) == attrs(ctx, {"a3", "a4", "a5"}));
}

TEST_CASE("table 3 compound derivations") {
  auto cctx = appose_negation(fixtures::context("table1.cxt"));
  const auto& flat = cctx.flattened();
  CHECK(compound_intent(cctx, objects(7, {2, 7})) == attrs(flat, {"a1", "a2", "not_a4", "not_a5"}));
  CHECK(compound_intent(cctx, objects(7, {2, 3})) == attrs(flat, {"a1", "not_a3", "not_a4", "not_a5"}));
  CHECK(compound_extent(cctx, attrs(flat, {"a1", "a2", "not_a3", "not_a4", "not_a5"})) == objects(7, {2}));
  CHECK(compound_extent(cctx, attrs(flat, {"a1", "not_a3", "not_a4", "not_a5"})) == objects(7, {2, 3}));
  CHECK_THROWS_AS(compound_intent(fixtures::table5(), objects(7, {1})), std::invalid_argument);
}

TEST_CASE("table 5 common-and-necessary derivations") {
  auto cctx = fixtures::table5();
  const auto& a = cctx.a_block();
  const auto& b = cctx.b_block();
  CHECK(cn_extent(cctx, {attrs(a, {"a1"}), attrs(b, {"b2", "b4"})}) == objects(7, {2, 3, 7}));
  CHECK(cn_extent(cctx, {attrs(a, {"a1"}), attrs(b, {"b3"})}) == objects(7, {2, 3}));

  auto e = cn_intent(cctx, objects(7, {2, 3, 7}));
  CHECK(e.has_b_cover);
  CHECK(e.a_part == attrs(a, {"a1"}));
  CHECK(e.b_part == attrs(b, {"b2", "b4"}));
  e = cn_intent(cctx, objects(7, {2, 3}));
  CHECK(e.a_part == attrs(a, {"a1"}));
  CHECK(e.b_part == attrs(b, {"b3"}));
  e = cn_intent(cctx, objects(7, {1, 6, 7}));
  CHECK(e.a_part == attrs(a, {"a3"}));
  CHECK(e.b_part == attrs(b, {"b1", "b2"}));
  CHECK_THROWS_AS(cn_intent(cctx, cctx.a_block().no_objects()), std::invalid_argument);
}

TEST_CASE("cn intent without a b cover") {
  auto a = FormalContext({"x", "y"}, {"a"}, {{true}, {true}});
  auto b = FormalContext({"x", "y"}, {"b"}, {{true}, {false}});
  auto e = cn_intent(make_cn_context(a, b), objects(2, {1, 2}));
  CHECK_FALSE(e.has_b_cover);
  CHECK(e.b_part.empty());
}

TEST_CASE("derivations agree with the bitmask oracle") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    auto ctx = oracle::random_context(rng, 1 + k % 8, 1 + k % 7, 0.2 + 0.3 * (k % 3));
    auto t = oracle::Table::of(ctx);
    for (oracle::Mask x = 0; x <= oracle::full(t.objects); ++x) {
      auto xs = oracle::set_of(x, t.objects);
      CHECK(oracle::mask_of(intent(ctx, xs)) == t.inten(x));
      CHECK(oracle::mask_of(necessity(ctx, xs)) == t.nec(x));
    }
    for (oracle::Mask b = 0; b <= oracle::full(t.attributes); ++b) {
      AttributeSet bs(ctx.attribute_count());
      for (int i = 0; i < t.attributes; ++i)
        if (b >> i & 1U) bs.insert(i);
      CHECK(oracle::mask_of(extent(ctx, bs)) == t.ext(b));
      CHECK(oracle::mask_of(possibility(ctx, bs)) == t.poss(b));
    }
  }
}
