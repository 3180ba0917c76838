#include "granule/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace granule {

namespace {

void guard(std::size_t have, std::size_t limit, const char* what, const EnumerationOptions& options) {
  if (!options.force && have > limit)
    throw SizeGuardError("refusing to enumerate: " + std::to_string(have) + " " + what + " exceeds the limit of " +
                         std::to_string(limit) + " (use --force to override)");
}

bool canonical_less(const ObjectSet& x, const ObjectSet& y) {
  if (x.size() != y.size()) return x.size() > y.size();
  return lex_less(x, y);
}

// Closed intents in lectic order (Ganter's NextClosure).
std::vector<AttributeSet> closed_intents(const FormalContext& ctx) {
  auto close = [&](const AttributeSet& b) { return intent(ctx, extent(ctx, b)); };
  const auto n = ctx.attribute_count();
  std::vector<AttributeSet> out;
  auto current = close(ctx.no_attributes());
  out.push_back(current);
  while (!current.is_full()) {
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      if (current.contains(i)) {
        current.erase(i);
        continue;
      }
      auto candidate = current;
      candidate.insert(i);
      candidate = close(candidate);
      // Canonicity: the closure adds nothing below i.
      bool canonical = true;
      for (std::size_t j = 0; j < i && canonical; ++j)
        if (candidate.contains(j) && !current.contains(j)) canonical = false;
      if (canonical) {
        current = std::move(candidate);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
    out.push_back(current);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> cover_relation(const std::vector<Concept>& cs) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t lo = 0; lo < cs.size(); ++lo) {
    std::vector<std::size_t> above;
    for (std::size_t up = 0; up < cs.size(); ++up)
      if (cs[lo].extent.is_proper_subset_of(cs[up].extent)) above.push_back(up);
    for (auto up : above) {
      bool direct = std::none_of(above.begin(), above.end(), [&](std::size_t mid) {
        return cs[mid].extent.is_proper_subset_of(cs[up].extent);
      });
      if (direct) edges.emplace_back(lo, up);
    }
  }
  std::sort(edges.begin(), edges.end(), [](auto x, auto y) {
    return std::pair{x.second, x.first} < std::pair{y.second, y.first};
  });
  return edges;
}

ConceptLattice finish(System system, std::vector<Concept> concepts) {
  std::sort(concepts.begin(), concepts.end(),
            [](const Concept& x, const Concept& y) { return canonical_less(x.extent, y.extent); });
  ConceptLattice out{system, std::move(concepts), {}};
  out.covers = cover_relation(out.concepts);
  return out;
}

ConceptLattice formal_concepts_as(const FormalContext& ctx, System system, const EnumerationOptions& options) {
  guard(ctx.attribute_count(), kMaxEnumeratedAttributes, "attributes", options);
  std::vector<Concept> cs;
  for (auto& b : closed_intents(ctx)) cs.push_back({extent(ctx, b), std::move(b), system});
  return finish(system, std::move(cs));
}

}  // namespace

const char* to_string(System system) {
  switch (system) {
    case System::Formal: return "formal";
    case System::ObjectOriented: return "object_oriented";
    case System::ThreeWayObject: return "three_way";
    case System::CommonNecessary: return "common_necessary";
  }
  return "";
}

std::size_t ConceptLattice::top() const {
  if (concepts.empty()) throw std::logic_error("empty lattice");
  return 0;
}

std::size_t ConceptLattice::bottom() const {
  if (concepts.empty()) throw std::logic_error("empty lattice");
  return concepts.size() - 1;
}

ConceptLattice enumerate_formal(const FormalContext& ctx, EnumerationOptions options) {
  return formal_concepts_as(ctx, System::Formal, options);
}

ConceptLattice enumerate_object_oriented(const FormalContext& ctx, EnumerationOptions options) {
  auto negated = complement_context(ctx);
  auto dual = formal_concepts_as(negated, System::ObjectOriented, options);
  std::vector<Concept> cs;
  for (auto& c : dual.concepts) cs.push_back({c.extent.complement(), std::move(c.intent), System::ObjectOriented});
  return finish(System::ObjectOriented, std::move(cs));
}

ConceptLattice enumerate_three_way(const FormalContext& ctx, EnumerationOptions options) {
  return enumerate_three_way(appose_negation(ctx), options);
}

ConceptLattice enumerate_three_way(const CompoundContext& cctx, EnumerationOptions options) {
  if (cctx.flavor() != Flavor::ThreeWay) throw std::invalid_argument("three-way enumeration needs a three-way compound");
  return formal_concepts_as(cctx.flattened(), System::ThreeWayObject, options);
}

std::vector<CnConcept> enumerate_cn(const CompoundContext& cctx, EnumerationOptions options) {
  if (cctx.flavor() != Flavor::CommonNecessary)
    throw std::invalid_argument("common-and-necessary enumeration needs a common_necessary compound");
  const auto n = cctx.object_count();
  guard(n, kMaxCnObjects, "objects", options);
  if (n >= 64) throw SizeGuardError("common-and-necessary enumeration is limited to 63 objects");

  std::vector<CnConcept> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    ObjectSet x(n);
    for (std::size_t o = 0; o < n; ++o)
      if (mask >> o & 1U) x.insert(o);
    auto e = cn_intent(cctx, x);
    if (!e.has_b_cover) continue;
    if (cn_extent(cctx, e) == x) out.push_back({std::move(x), std::move(e)});
  }
  std::sort(out.begin(), out.end(),
            [](const CnConcept& p, const CnConcept& q) { return canonical_less(p.extent, q.extent); });
  return out;
}

bool leq(const Concept& lower, const Concept& upper) {
  if (lower.system != upper.system) throw std::invalid_argument("concepts from different systems");
  return lower.extent.is_subset_of(upper.extent);
}

Concept meet(const FormalContext& ctx, const Concept& x, const Concept& y) {
  if (x.system != System::Formal || y.system != System::Formal)
    throw std::invalid_argument("meet is defined here for formal concepts");
  if (x.extent.universe() != ctx.object_count() || y.extent.universe() != ctx.object_count() ||
      x.intent.universe() != ctx.attribute_count() || y.intent.universe() != ctx.attribute_count())
    throw std::invalid_argument("concept does not belong to this context");
  auto common = x.extent & y.extent;
  auto b = intent(ctx, common);
  return {std::move(common), std::move(b), System::Formal};
}

Concept join(const FormalContext& ctx, const Concept& x, const Concept& y) {
  if (x.system != System::Formal || y.system != System::Formal)
    throw std::invalid_argument("join is defined here for formal concepts");
  if (x.extent.universe() != ctx.object_count() || y.extent.universe() != ctx.object_count() ||
      x.intent.universe() != ctx.attribute_count() || y.intent.universe() != ctx.attribute_count())
    throw std::invalid_argument("concept does not belong to this context");
  auto shared = x.intent & y.intent;
  auto a = extent(ctx, shared);
  return {std::move(a), std::move(shared), System::Formal};
}

}  // namespace granule
