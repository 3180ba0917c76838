#pragma once

#include <optional>
#include <vector>

#include "granule/context.hpp"
#include "granule/formula.hpp"
#include "granule/index_set.hpp"

namespace granule {

enum class Status { Definable, Indefinable, Inapplicable };

/// Why a check did not apply.
enum class Reason {
  EmptyIntent,  // no attribute is common to (or, for ∨, contained in) the granule
  NoBCover,     // no union of B extents contains the granule
  EmptyAPart,   // no A attribute has an extent containing the granule
  Uncoverable,  // some object of the granule has no attribute at all
  NotDefinable, // an input of a composition was not itself definable
};

struct Verdict {
  Status status = Status::Inapplicable;
  std::optional<Description> description;
  std::optional<Reason> reason;
  /// For Indefinable: the closure that differs from the granule.
  std::optional<ObjectSet> witness;
};

const char* to_string(Status status);
const char* to_string(Reason reason);

/// Conjunctive definability: X = extent(intent(X)), described by the full intent.
Verdict is_wedge_definable(const FormalContext& ctx, const ObjectSet& objects);

/// Objects y outside X with intent(X) ⊆ intent({y}).  nullopt when intent(X)
/// is empty (the check does not apply).
std::optional<ObjectSet> find_covering_elements(const FormalContext& ctx, const ObjectSet& objects);

/// Conjunction with negated atoms, decided on the three-way compound.
Verdict is_three_way_definable(const CompoundContext& cctx, const ObjectSet& objects);

/// Disjunctive definability through necessity/possibility.
Verdict is_vee_definable(const FormalContext& ctx, const ObjectSet& objects);

/// The same question asked the other way round: is U \ X closed in the
/// complement context?  Returns the same verdict as is_vee_definable.
Verdict is_vee_definable_by_complement(const FormalContext& ctx, const ObjectSet& objects);

/// Conjunction over A with one disjunction over B.  Throws
/// std::invalid_argument for an empty granule.
Verdict is_cn_definable(const CompoundContext& cctx, const ObjectSet& objects);

/// d(X ∩ Y) = ∧(intent(X) ∪ intent(Y)) for two ∧-definable granules.
Verdict intersect_descriptions(const FormalContext& ctx, const ObjectSet& x, const ObjectSet& y);
/// Same composition on a three-way compound.
Verdict intersect_descriptions(const CompoundContext& cctx, const ObjectSet& x, const ObjectSet& y);

/// d(X ∪ Y) = ∨(necessity(X) ∪ necessity(Y)) for two ∨-definable granules.
Verdict union_vee_descriptions(const FormalContext& ctx, const ObjectSet& x, const ObjectSet& y);

// Exhaustive searches for the inclusion-minimal descriptions of a granule.
// Each returns an empty list when the granule is not definable in that mode,
// and throws std::length_error above 20 candidate attributes.
std::vector<Description> minimal_wedge_descriptions(const FormalContext& ctx, const ObjectSet& objects);
std::vector<Description> minimal_three_way_descriptions(const CompoundContext& cctx, const ObjectSet& objects);
std::vector<Description> minimal_vee_descriptions(const FormalContext& ctx, const ObjectSet& objects);
std::vector<Description> minimal_cn_descriptions(const CompoundContext& cctx, const ObjectSet& objects);

}  // namespace granule
