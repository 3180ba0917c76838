#include "granule/definability.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "granule/derivation.hpp"

namespace granule {

namespace {

constexpr std::size_t kMinimalSearchLimit = 20;

Verdict definable(Description d) { return {Status::Definable, std::move(d), std::nullopt, std::nullopt}; }
Verdict inapplicable(Reason r) { return {Status::Inapplicable, std::nullopt, r, std::nullopt}; }
Verdict indefinable(ObjectSet witness) {
  return {Status::Indefinable, std::nullopt, std::nullopt, std::move(witness)};
}

// A returned description must evaluate back to the granule.
template <class Ctx>
Verdict checked(const Ctx& ctx, Verdict v, const ObjectSet& expected) {
  if (v.status == Status::Definable && evaluate(ctx, *v.description) != expected)
    throw std::logic_error("synthesized description does not evaluate to its granule");
  return v;
}

// All inclusion-minimal nonempty masks over `n` pool bits accepted by `accepts`.
std::vector<std::uint32_t> minimal_masks(std::size_t n, const std::function<bool(std::uint32_t)>& accepts) {
  if (n > kMinimalSearchLimit) throw std::length_error("too many attributes for an exhaustive minimal search");
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](auto x, auto y) { return std::popcount(x) < std::popcount(y); });
  std::vector<std::uint32_t> found;
  for (auto m : masks) {
    if (std::any_of(found.begin(), found.end(), [m](auto f) { return (f & m) == f; })) continue;
    if (accepts(m)) found.push_back(m);
  }
  return found;
}

AttributeSet pick(const std::vector<std::size_t>& pool, std::uint32_t mask, std::size_t universe) {
  AttributeSet s(universe);
  for (std::size_t k = 0; k < pool.size(); ++k)
    if (mask >> k & 1U) s.insert(pool[k]);
  return s;
}

void sort_canonically(std::vector<Description>& ds) {
  std::sort(ds.begin(), ds.end(), [](const Description& x, const Description& y) {
    auto nx = x.atoms().size() + x.disjuncts().size();
    auto ny = y.atoms().size() + y.disjuncts().size();
    if (nx != ny) return nx < ny;
    if (x.atoms() != y.atoms()) return x.atoms() < y.atoms();
    return x.disjuncts() < y.disjuncts();
  });
}

}  // namespace

const char* to_string(Status status) {
  switch (status) {
    case Status::Definable: return "definable";
    case Status::Indefinable: return "indefinable";
    case Status::Inapplicable: return "inapplicable";
  }
  return "";
}

const char* to_string(Reason reason) {
  switch (reason) {
    case Reason::EmptyIntent: return "empty_intent";
    case Reason::NoBCover: return "no_b_cover";
    case Reason::EmptyAPart: return "empty_a_part";
    case Reason::Uncoverable: return "uncoverable";
    case Reason::NotDefinable: return "not_definable";
  }
  return "";
}

Verdict is_wedge_definable(const FormalContext& ctx, const ObjectSet& objects) {
  auto common = intent(ctx, objects);
  if (common.empty()) return inapplicable(Reason::EmptyIntent);
  auto closure = extent(ctx, common);
  if (closure != objects) return indefinable(std::move(closure));
  return checked(ctx, definable(Description::conj_of(common)), objects);
}

std::optional<ObjectSet> find_covering_elements(const FormalContext& ctx, const ObjectSet& objects) {
  auto common = intent(ctx, objects);
  if (common.empty()) return std::nullopt;
  auto out = ctx.no_objects();
  for (std::size_t y = 0; y < ctx.object_count(); ++y)
    if (!objects.contains(y) && common.is_subset_of(ctx.row(y))) out.insert(y);
  return out;
}

Verdict is_three_way_definable(const CompoundContext& cctx, const ObjectSet& objects) {
  auto common = compound_intent(cctx, objects);
  if (common.empty()) return inapplicable(Reason::EmptyIntent);
  auto closure = compound_extent(cctx, common);
  if (closure != objects) return indefinable(std::move(closure));
  return checked(cctx, definable(Description::three_way_conj_of(common, cctx.a_block().attribute_count())),
                 objects);
}

Verdict is_vee_definable(const FormalContext& ctx, const ObjectSet& objects) {
  auto inside = necessity(ctx, objects);
  if (inside.empty()) return inapplicable(Reason::EmptyIntent);
  auto reach = possibility(ctx, inside);
  if (reach != objects) return indefinable(std::move(reach));
  return checked(ctx, definable(Description::disj_of(inside)), objects);
}

Verdict is_vee_definable_by_complement(const FormalContext& ctx, const ObjectSet& objects) {
  auto negated = complement_context(ctx);
  auto outside = objects.complement();
  auto common = intent(negated, outside);
  if (common.empty()) return inapplicable(Reason::EmptyIntent);
  auto closure = extent(negated, common);
  if (closure != outside) return indefinable(closure.complement());
  // Column k of the complement context is attribute k negated, so the
  // conjunction over it is the disjunction over the originals.
  return checked(ctx, definable(Description::disj_of(common)), objects);
}

Verdict is_cn_definable(const CompoundContext& cctx, const ObjectSet& objects) {
  auto e = cn_intent(cctx, objects);
  if (e.a_part.empty()) return inapplicable(Reason::EmptyAPart);
  if (!e.has_b_cover) return inapplicable(Reason::NoBCover);
  auto closure = cn_extent(cctx, e);
  if (closure != objects) return indefinable(std::move(closure));
  return checked(cctx, definable(Description::conj_disj_of(e.a_part, e.b_part)), objects);
}

Verdict intersect_descriptions(const FormalContext& ctx, const ObjectSet& x, const ObjectSet& y) {
  if (is_wedge_definable(ctx, x).status != Status::Definable ||
      is_wedge_definable(ctx, y).status != Status::Definable)
    return inapplicable(Reason::NotDefinable);
  return checked(ctx, definable(Description::conj_of(intent(ctx, x) | intent(ctx, y))), x & y);
}

Verdict intersect_descriptions(const CompoundContext& cctx, const ObjectSet& x, const ObjectSet& y) {
  if (is_three_way_definable(cctx, x).status != Status::Definable ||
      is_three_way_definable(cctx, y).status != Status::Definable)
    return inapplicable(Reason::NotDefinable);
  auto both = compound_intent(cctx, x) | compound_intent(cctx, y);
  return checked(cctx, definable(Description::three_way_conj_of(both, cctx.a_block().attribute_count())), x & y);
}

Verdict union_vee_descriptions(const FormalContext& ctx, const ObjectSet& x, const ObjectSet& y) {
  if (is_vee_definable(ctx, x).status != Status::Definable ||
      is_vee_definable(ctx, y).status != Status::Definable)
    return inapplicable(Reason::NotDefinable);
  return checked(ctx, definable(Description::disj_of(necessity(ctx, x) | necessity(ctx, y))), x | y);
}

std::vector<Description> minimal_wedge_descriptions(const FormalContext& ctx, const ObjectSet& objects) {
  if (is_wedge_definable(ctx, objects).status != Status::Definable) return {};
  auto pool = intent(ctx, objects).members();
  std::vector<Description> out;
  for (auto m : minimal_masks(pool.size(), [&](std::uint32_t m) {
         return extent(ctx, pick(pool, m, ctx.attribute_count())) == objects;
       }))
    out.push_back(Description::conj_of(pick(pool, m, ctx.attribute_count())));
  sort_canonically(out);
  return out;
}

std::vector<Description> minimal_three_way_descriptions(const CompoundContext& cctx, const ObjectSet& objects) {
  if (is_three_way_definable(cctx, objects).status != Status::Definable) return {};
  auto width = cctx.flattened().attribute_count();
  auto pool = compound_intent(cctx, objects).members();
  std::vector<Description> out;
  for (auto m : minimal_masks(pool.size(), [&](std::uint32_t m) {
         return compound_extent(cctx, pick(pool, m, width)) == objects;
       }))
    out.push_back(Description::three_way_conj_of(pick(pool, m, width), cctx.a_block().attribute_count()));
  sort_canonically(out);
  return out;
}

std::vector<Description> minimal_vee_descriptions(const FormalContext& ctx, const ObjectSet& objects) {
  if (is_vee_definable(ctx, objects).status != Status::Definable) return {};
  auto pool = necessity(ctx, objects).members();
  std::vector<Description> out;
  for (auto m : minimal_masks(pool.size(), [&](std::uint32_t m) {
         return possibility(ctx, pick(pool, m, ctx.attribute_count())) == objects;
       }))
    out.push_back(Description::disj_of(pick(pool, m, ctx.attribute_count())));
  sort_canonically(out);
  return out;
}

std::vector<Description> minimal_cn_descriptions(const CompoundContext& cctx, const ObjectSet& objects) {
  if (is_cn_definable(cctx, objects).status != Status::Definable) return {};
  const auto& a = cctx.a_block();
  const auto& b = cctx.b_block();
  auto a_pool = intent(a, objects).members();
  std::vector<std::size_t> b_pool;
  for (std::size_t k = 0; k < b.attribute_count(); ++k)
    if (b.column(k).intersects(objects)) b_pool.push_back(k);
  const auto split = a_pool.size();
  const std::uint32_t a_mask = (std::uint32_t{1} << split) - 1;

  auto parts = [&](std::uint32_t m) {
    return std::pair{pick(a_pool, m & a_mask, a.attribute_count()),
                     pick(b_pool, m >> split, b.attribute_count())};
  };
  std::vector<Description> out;
  for (auto m : minimal_masks(split + b_pool.size(), [&](std::uint32_t m) {
         if ((m & a_mask) == 0 || (m >> split) == 0) return false;
         auto [c, d] = parts(m);
         return cn_extent(cctx, {c, d, true}) == objects;
       })) {
    auto [c, d] = parts(m);
    out.push_back(Description::conj_disj_of(c, d));
  }
  sort_canonically(out);
  return out;
}

}  // namespace granule
