#include <algorithm>
#include <random>
#include <set>
#include <utility>

#include "doctest.h"
#include "granule/lattice.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace granule;
using fixtures::attrs;
using fixtures::objects;

namespace {

bool has(const ConceptLattice& l, const ObjectSet& x, const AttributeSet& b) {
  return std::any_of(l.concepts.begin(), l.concepts.end(),
                     [&](const Concept& c) { return c.extent == x && c.intent == b; });
}

}  // namespace

TEST_CASE("table 1 formal concepts") {
  auto ctx = fixtures::context("table1.cxt");
  auto l = enumerate_formal(ctx);
  REQUIRE(l.concepts.size() == 11);
  CHECK(l.concepts[l.top()].extent.is_full());
  CHECK(l.concepts[l.top()].intent.empty());
  CHECK(l.concepts[l.bottom()].extent.empty());
  CHECK(l.concepts[l.bottom()].intent.is_full());
  CHECK(has(l, objects(7, {1, 6, 7}), attrs(ctx, {"a3"})));
  CHECK(has(l, objects(7, {4, 5, 6}), attrs(ctx, {"a5"})));
  CHECK(has(l, objects(7, {2, 7}), attrs(ctx, {"a1", "a2"})));
  CHECK(has(l, objects(7, {1, 7}), attrs(ctx, {"a2", "a3"})));
  for (const auto& c : l.concepts) {
    CHECK(intent(ctx, c.extent) == c.intent);
    CHECK(extent(ctx, c.intent) == c.extent);
  }
}

TEST_CASE("table 1 object-oriented concepts") {
  auto ctx = fixtures::context("table1.cxt");
  auto l = enumerate_object_oriented(ctx);
  CHECK(has(l, objects(7, {1, 4, 5, 6, 7}), attrs(ctx, {"a3", "a4", "a5"})));
  CHECK(has(l, objects(7, {1, 2, 5, 6, 7}), attrs(ctx, {"a2", "a3", "a4"})));
  for (const auto& c : l.concepts) {
    CHECK(necessity(ctx, c.extent) == c.intent);
    CHECK(possibility(ctx, c.intent) == c.extent);
  }
}

TEST_CASE("table 3 three-way concepts") {
  auto cctx = appose_negation(fixtures::context("table1.cxt"));
  const auto& flat = cctx.flattened();
  auto l = enumerate_three_way(cctx);
  CHECK(has(l, objects(7, {2, 7}), attrs(flat, {"a1", "a2", "not_a4", "not_a5"})));
  CHECK(has(l, objects(7, {2}), attrs(flat, {"a1", "a2", "not_a3", "not_a4", "not_a5"})));
  CHECK(enumerate_three_way(fixtures::context("table1.cxt")).concepts == l.concepts);
}

TEST_CASE("table 5 common-and-necessary concepts") {
  auto cctx = fixtures::table5();
  auto cs = enumerate_cn(cctx);
  auto find = [&](const ObjectSet& x) {
    return std::find_if(cs.begin(), cs.end(), [&](const CnConcept& c) { return c.extent == x; });
  };
  const auto& a = cctx.a_block();
  const auto& b = cctx.b_block();
  auto it = find(objects(7, {2, 3, 7}));
  REQUIRE(it != cs.end());
  CHECK(it->intent == CnIntent{attrs(a, {"a1"}), attrs(b, {"b2", "b4"})});
  it = find(objects(7, {2, 3}));
  REQUIRE(it != cs.end());
  CHECK(it->intent == CnIntent{attrs(a, {"a1"}), attrs(b, {"b3"})});
  it = find(objects(7, {1, 6, 7}));
  REQUIRE(it != cs.end());
  CHECK(it->intent == CnIntent{attrs(a, {"a3"}), attrs(b, {"b1", "b2"})});
  for (const auto& c : cs) CHECK(cn_extent(cctx, cn_intent(cctx, c.extent)) == c.extent);
}

TEST_CASE("one by one context") {
  auto ctx = FormalContext({"x"}, {"a"}, {{true}});
  CHECK(enumerate_formal(ctx).concepts.size() == 1);
  auto empty = FormalContext({"x"}, {"a"}, {{false}});
  CHECK(enumerate_formal(empty).concepts.size() == 2);
}

TEST_CASE("size guards") {
  std::vector<std::string> names;
  for (int k = 0; k < 31; ++k) names.push_back("m" + std::to_string(k));
  auto wide = FormalContext({"x"}, names, {std::vector<bool>(31, true)});
  CHECK_THROWS_AS(enumerate_formal(wide), SizeGuardError);
  CHECK(enumerate_formal(wide, {true}).concepts.size() == 1);
  std::vector<std::string> sixteen(names.begin(), names.begin() + 16);
  auto half = FormalContext({"x"}, sixteen, {std::vector<bool>(16, true)});
  CHECK_NOTHROW(enumerate_formal(half));
  CHECK_THROWS_AS(enumerate_three_way(half), SizeGuardError);
}

TEST_CASE("lattice matches closed sets and covers on random contexts") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 60; ++k) {
    auto ctx = oracle::random_context(rng, 1 + k % 7, 1 + k % 6, 0.5);
    auto t = oracle::Table::of(ctx);
    std::set<std::pair<oracle::Mask, oracle::Mask>> expected;
    for (oracle::Mask x = 0; x <= oracle::full(t.objects); ++x) {
      auto closed = t.ext(t.inten(x));
      expected.insert({closed, t.inten(closed)});
    }
    auto l = enumerate_formal(ctx);
    std::set<std::pair<oracle::Mask, oracle::Mask>> got;
    for (const auto& c : l.concepts) got.insert({oracle::mask_of(c.extent), oracle::mask_of(c.intent)});
    CHECK(got == expected);
    CHECK(got.size() == l.concepts.size());

    for (std::size_t lo = 0; lo < l.concepts.size(); ++lo)
      for (std::size_t up = 0; up < l.concepts.size(); ++up) {
        auto x = oracle::mask_of(l.concepts[lo].extent), y = oracle::mask_of(l.concepts[up].extent);
        bool covers = x != y && oracle::subset(x, y);
        for (const auto& mid : l.concepts) {
          auto z = oracle::mask_of(mid.extent);
          if (z != x && z != y && oracle::subset(x, z) && oracle::subset(z, y)) covers = false;
        }
        bool listed = std::find(l.covers.begin(), l.covers.end(), std::pair{lo, up}) != l.covers.end();
        CHECK(covers == listed);
      }

    for (const auto& c1 : l.concepts)
      for (const auto& c2 : l.concepts) {
        auto m = meet(ctx, c1, c2);
        auto j = join(ctx, c1, c2);
        CHECK(leq(m, c1));
        CHECK(leq(m, c2));
        CHECK(leq(c1, j));
        CHECK(leq(c2, j));
        CHECK(extent(ctx, m.intent) == m.extent);
        CHECK(intent(ctx, j.extent) == j.intent);
      }
  }
}
