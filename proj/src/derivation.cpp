#include "granule/derivation.hpp"

#include <stdexcept>

#include "granule/cover.hpp"

namespace granule {

namespace {

void require_universe(std::size_t have, std::size_t want, const char* what) {
  if (have != want) throw std::invalid_argument(std::string(what) + " set does not belong to this context");
}

void require_flavor(const CompoundContext& cctx, Flavor want) {
  if (cctx.flavor() != want)
    throw std::invalid_argument(std::string("operation needs a ") + to_string(want) +
                                " compound context, got " + to_string(cctx.flavor()));
}

// Compares membership vectors (bit of object 0 first, absent < present).
bool membership_less(const ObjectSet& x, const ObjectSet& y) {
  auto diff = (x - y) | (y - x);
  if (diff.empty()) return false;
  return !x.contains(diff.members().front());
}

}  // namespace

AttributeSet intent(const FormalContext& ctx, const ObjectSet& objects) {
  require_universe(objects.universe(), ctx.object_count(), "object");
  auto out = ctx.all_attributes();
  objects.for_each([&](std::size_t o) { out &= ctx.row(o); });
  return out;
}

ObjectSet extent(const FormalContext& ctx, const AttributeSet& attributes) {
  require_universe(attributes.universe(), ctx.attribute_count(), "attribute");
  auto out = ctx.all_objects();
  attributes.for_each([&](std::size_t a) { out &= ctx.column(a); });
  return out;
}

ObjectSet possibility(const FormalContext& ctx, const AttributeSet& attributes) {
  require_universe(attributes.universe(), ctx.attribute_count(), "attribute");
  auto out = ctx.no_objects();
  attributes.for_each([&](std::size_t a) { out |= ctx.column(a); });
  return out;
}

AttributeSet necessity(const FormalContext& ctx, const ObjectSet& objects) {
  require_universe(objects.universe(), ctx.object_count(), "object");
  auto out = ctx.no_attributes();
  for (std::size_t a = 0; a < ctx.attribute_count(); ++a)
    if (ctx.column(a).is_subset_of(objects)) out.insert(a);
  return out;
}

AttributeSet compound_intent(const CompoundContext& cctx, const ObjectSet& objects) {
  require_flavor(cctx, Flavor::ThreeWay);
  return intent(cctx.flattened(), objects);
}

ObjectSet compound_extent(const CompoundContext& cctx, const AttributeSet& attributes) {
  require_flavor(cctx, Flavor::ThreeWay);
  return extent(cctx.flattened(), attributes);
}

ObjectSet cn_extent(const CompoundContext& cctx, const CnIntent& e) {
  require_flavor(cctx, Flavor::CommonNecessary);
  return extent(cctx.a_block(), e.a_part) & possibility(cctx.b_block(), e.b_part);
}

CnIntent cn_intent(const CompoundContext& cctx, const ObjectSet& objects) {
  require_flavor(cctx, Flavor::CommonNecessary);
  require_universe(objects.universe(), cctx.object_count(), "object");
  if (objects.empty()) throw std::invalid_argument("common-and-necessary intent of the empty granule");

  const auto& a = cctx.a_block();
  const auto& b = cctx.b_block();
  CnIntent out{intent(a, objects), b.no_attributes(), false};
  auto common = extent(a, out.a_part);

  CoverProblem problem{{}, objects, false};
  for (std::size_t k = 0; k < b.attribute_count(); ++k)
    if (!b.column(k).empty()) problem.candidates.push_back({k, b.column(k)});
  auto covers = enumerate_minimal_covers(problem);
  if (covers.empty()) return out;

  const Cover* best = nullptr;
  std::size_t best_kept = 0;
  for (const auto& c : covers) {
    auto kept = (common & c.unite).size();
    bool better = best == nullptr || kept < best_kept;
    if (!better && kept == best_kept) {
      if (c.unite.size() != best->unite.size())
        better = c.unite.size() < best->unite.size();
      else
        better = membership_less(c.unite, best->unite);
    }
    if (better) {
      best = &c;
      best_kept = kept;
    }
  }
  out.has_b_cover = true;
  out.b_part = AttributeSet::from_range(b.attribute_count(), best->ids);
  return out;
}

}  // namespace granule
