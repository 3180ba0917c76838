#pragma once

#include "granule/context.hpp"
#include "granule/index_set.hpp"

namespace granule {

/// Attributes shared by every object of `objects`.  The empty set maps to
/// all attributes.
AttributeSet intent(const FormalContext& ctx, const ObjectSet& objects);

/// Objects having every attribute of `attributes`.  The empty set maps to
/// all objects.
ObjectSet extent(const FormalContext& ctx, const AttributeSet& attributes);

/// Objects having at least one attribute of `attributes` (the union of
/// their extents).
ObjectSet possibility(const FormalContext& ctx, const AttributeSet& attributes);

/// Attributes whose whole extent lies inside `objects`.
AttributeSet necessity(const FormalContext& ctx, const ObjectSet& objects);

// Three-way compound operators.  Attribute sets range over A followed by B
// (the flattened context).  Both throw std::invalid_argument on a
// CommonNecessary compound.
AttributeSet compound_intent(const CompoundContext& cctx, const ObjectSet& objects);
ObjectSet compound_extent(const CompoundContext& cctx, const AttributeSet& attributes);

/// Intent in a common-and-necessary compound: a conjunctive part over A and a
/// disjunctive part over B.
struct CnIntent {
  AttributeSet a_part;
  AttributeSet b_part;
  /// False when no union of B extents contains the granule; b_part is then empty.
  bool has_b_cover = true;

  friend bool operator==(const CnIntent&, const CnIntent&) = default;
};

/// extent(A-block, a_part) intersected with possibility(B-block, b_part).
ObjectSet cn_extent(const CompoundContext& cctx, const CnIntent& intent);

/// Canonical common-and-necessary intent of a nonempty granule X.
///
/// a_part is the largest A set whose extent contains X.  For the B part,
/// every inclusion-minimal union Y of nonempty B extents with Y ⊇ X is a
/// candidate; the one leaving the fewest objects in extent(a_part) ∩ Y wins,
/// then the smaller Y, then the lexicographically smaller Y.  b_part is every
/// B attribute with a nonempty extent inside the winner.
///
/// Throws std::invalid_argument for an empty X or a ThreeWay compound.
CnIntent cn_intent(const CompoundContext& cctx, const ObjectSet& objects);

}  // namespace granule
