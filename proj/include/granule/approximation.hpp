#pragma once

#include <optional>
#include <vector>

#include "granule/context.hpp"
#include "granule/cover.hpp"
#include "granule/definability.hpp"
#include "granule/formula.hpp"

namespace granule {

enum class Direction { Upper, Lower };
enum class Mode { Wedge, ThreeWay, Vee, Cn };

const char* to_string(Direction direction);
const char* to_string(Mode mode);

struct ApproxGranule {
  ObjectSet granule;
  /// Absent only for the empty lower bound when nothing describes ∅.
  std::optional<Description> description;
};

/// Approaching description of a granule X.
///
/// Upper results contain X, lower results are contained in it.  `exact` is
/// set when X itself is definable in the mode (upper) or is the result
/// (lower ∨).  When the mode's precondition on X fails, `inapplicable`
/// carries the reason and `granules` is empty.
struct Approximation {
  Direction direction;
  Mode mode;
  std::vector<ApproxGranule> granules;
  bool exact = false;
  std::optional<Reason> inapplicable;
};

/// extent(intent(X)): the smallest ∧-definable granule containing X.
Approximation upper_wedge(const FormalContext& ctx, const ObjectSet& objects);

/// Every inclusion-maximal ∧-definable granule strictly inside X.  Requires
/// X ≠ U (std::invalid_argument otherwise).
Approximation lower_wedge(const FormalContext& ctx, const ObjectSet& objects);

/// Three-way closure of X.
Approximation upper_three_way(const CompoundContext& cctx, const ObjectSet& objects);

/// Every inclusion-maximal three-way definable granule strictly inside X.
Approximation lower_three_way(const CompoundContext& cctx, const ObjectSet& objects);

/// possibility(necessity(X)): the largest ∨-definable granule inside X.
Approximation lower_vee(const FormalContext& ctx, const ObjectSet& objects);

/// Every inclusion-minimal union of attribute extents containing X.
/// Requires X ≠ ∅.
Approximation upper_vee(const FormalContext& ctx, const ObjectSet& objects);

/// cn_extent(cn_intent(X)).  Requires X ≠ ∅.
Approximation upper_cn(const CompoundContext& cctx, const ObjectSet& objects);

}  // namespace granule
