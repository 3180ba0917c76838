#include "granule/approximation.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "granule/derivation.hpp"

namespace granule {

namespace {

Approximation refuse(Direction d, Mode m, Reason r) { return {d, m, {}, false, r}; }

void order(std::vector<ApproxGranule>& gs, Direction d) {
  std::sort(gs.begin(), gs.end(), [d](const ApproxGranule& x, const ApproxGranule& y) {
    if (x.granule.size() != y.granule.size())
      return d == Direction::Lower ? x.granule.size() > y.granule.size() : x.granule.size() < y.granule.size();
    return lex_less(x.granule, y.granule);
  });
}

template <class Ctx>
ApproxGranule described(const Ctx& ctx, ObjectSet granule, Description d) {
  if (evaluate(ctx, d) != granule)
    throw std::logic_error("approximation description does not evaluate to its granule");
  return {std::move(granule), std::move(d)};
}

// Largest conjunctively definable granules strictly inside X, found as the
// complements of the minimal unions of negated columns that properly contain
// U \ X.
std::vector<ObjectSet> maximal_conjunctive_subsets(const FormalContext& ctx, const ObjectSet& objects,
                                                   std::vector<std::vector<std::size_t>>& attribute_sets) {
  if (objects.is_full()) throw std::invalid_argument("lower approximation of the whole universe");
  auto outside = objects.complement();

  std::vector<CoverCandidate> all;
  auto inner = ctx.no_objects();
  for (std::size_t k = 0; k < ctx.attribute_count(); ++k) {
    auto negated = ctx.column(k).complement();
    if (negated.is_subset_of(outside)) inner |= negated;
    all.push_back({k, std::move(negated)});
  }
  // When U \ X is itself a union of negated columns, X is definable and the
  // strictly larger unions may need columns that miss U \ X entirely.
  bool x_definable = inner == outside;
  CoverProblem problem{x_definable ? all : meeting(all, outside), outside, true};

  std::vector<ObjectSet> out;
  for (auto& c : enumerate_minimal_covers(problem)) {
    out.push_back(c.unite.complement());
    attribute_sets.push_back(std::move(c.ids));
  }
  return out;
}

}  // namespace

const char* to_string(Direction direction) { return direction == Direction::Upper ? "upper" : "lower"; }

const char* to_string(Mode mode) {
  switch (mode) {
    case Mode::Wedge: return "wedge";
    case Mode::ThreeWay: return "three_way";
    case Mode::Vee: return "vee";
    case Mode::Cn: return "cn";
  }
  return "";
}

Approximation upper_wedge(const FormalContext& ctx, const ObjectSet& objects) {
  auto common = intent(ctx, objects);
  if (common.empty()) return refuse(Direction::Upper, Mode::Wedge, Reason::EmptyIntent);
  auto closure = extent(ctx, common);
  bool exact = closure == objects;
  return {Direction::Upper, Mode::Wedge, {described(ctx, std::move(closure), Description::conj_of(common))}, exact,
          std::nullopt};
}

Approximation lower_wedge(const FormalContext& ctx, const ObjectSet& objects) {
  std::vector<std::vector<std::size_t>> ids;
  auto subsets = maximal_conjunctive_subsets(ctx, objects, ids);
  Approximation out{Direction::Lower, Mode::Wedge, {}, is_wedge_definable(ctx, objects).status == Status::Definable,
                    std::nullopt};
  for (std::size_t k = 0; k < subsets.size(); ++k)
    out.granules.push_back(described(
        ctx, subsets[k], Description::conj_of(AttributeSet::from_range(ctx.attribute_count(), ids[k]))));
  order(out.granules, Direction::Lower);
  return out;
}

Approximation upper_three_way(const CompoundContext& cctx, const ObjectSet& objects) {
  auto common = compound_intent(cctx, objects);
  if (common.empty()) return refuse(Direction::Upper, Mode::ThreeWay, Reason::EmptyIntent);
  auto closure = compound_extent(cctx, common);
  bool exact = closure == objects;
  auto d = Description::three_way_conj_of(common, cctx.a_block().attribute_count());
  return {Direction::Upper, Mode::ThreeWay, {described(cctx, std::move(closure), std::move(d))}, exact,
          std::nullopt};
}

Approximation lower_three_way(const CompoundContext& cctx, const ObjectSet& objects) {
  if (cctx.flavor() != Flavor::ThreeWay) throw std::invalid_argument("lower_three_way needs a three-way compound");
  const auto& flat = cctx.flattened();
  std::vector<std::vector<std::size_t>> ids;
  auto subsets = maximal_conjunctive_subsets(flat, objects, ids);
  Approximation out{Direction::Lower, Mode::ThreeWay, {},
                    is_three_way_definable(cctx, objects).status == Status::Definable, std::nullopt};
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    auto d = Description::three_way_conj_of(AttributeSet::from_range(flat.attribute_count(), ids[k]),
                                            cctx.a_block().attribute_count());
    out.granules.push_back(described(cctx, subsets[k], std::move(d)));
  }
  order(out.granules, Direction::Lower);
  return out;
}

Approximation lower_vee(const FormalContext& ctx, const ObjectSet& objects) {
  auto inside = necessity(ctx, objects);
  auto reach = possibility(ctx, inside);
  bool exact = reach == objects;
  Approximation out{Direction::Lower, Mode::Vee, {}, exact, std::nullopt};
  if (inside.empty())
    out.granules.push_back({std::move(reach), std::nullopt});
  else
    out.granules.push_back(described(ctx, std::move(reach), Description::disj_of(inside)));
  return out;
}

Approximation upper_vee(const FormalContext& ctx, const ObjectSet& objects) {
  if (objects.empty()) throw std::invalid_argument("upper ∨ approximation of the empty granule");
  std::vector<CoverCandidate> cands;
  auto reach = ctx.no_objects();
  for (std::size_t k = 0; k < ctx.attribute_count(); ++k) {
    reach |= ctx.column(k);
    cands.push_back({k, ctx.column(k)});
  }
  if (!objects.is_subset_of(reach)) return refuse(Direction::Upper, Mode::Vee, Reason::Uncoverable);

  Approximation out{Direction::Upper, Mode::Vee, {}, false, std::nullopt};
  for (auto& c : enumerate_minimal_covers({meeting(cands, objects), objects, false})) {
    out.exact = out.exact || c.unite == objects;
    auto d = Description::disj_of(AttributeSet::from_range(ctx.attribute_count(), c.ids));
    out.granules.push_back(described(ctx, std::move(c.unite), std::move(d)));
  }
  order(out.granules, Direction::Upper);
  return out;
}

Approximation upper_cn(const CompoundContext& cctx, const ObjectSet& objects) {
  auto e = cn_intent(cctx, objects);
  if (e.a_part.empty()) return refuse(Direction::Upper, Mode::Cn, Reason::EmptyAPart);
  if (!e.has_b_cover) return refuse(Direction::Upper, Mode::Cn, Reason::NoBCover);
  auto closure = cn_extent(cctx, e);
  bool exact = closure == objects;
  return {Direction::Upper, Mode::Cn,
          {described(cctx, std::move(closure), Description::conj_disj_of(e.a_part, e.b_part))}, exact,
          std::nullopt};
}

}  // namespace granule
