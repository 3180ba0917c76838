#pragma once

#include <cstddef>
#include <vector>

#include "granule/index_set.hpp"

namespace granule {

struct CoverCandidate {
  std::size_t id;
  ObjectSet extent;
};

/// Search instance: which unions of candidate extents contain `target`.
///
/// With `strict` set, a union equal to the target does not count; only
/// unions that properly contain it are achievable.
struct CoverProblem {
  std::vector<CoverCandidate> candidates;
  ObjectSet target;
  bool strict = false;
};

struct Cover {
  /// Every candidate id whose extent lies inside `unite`, ascending.
  std::vector<std::size_t> ids;
  ObjectSet unite;
};

/// All inclusion-minimal achievable unions containing the target.
///
/// Depth-first over the first uncovered target object, trying candidates in
/// descending order of new coverage.  A branch is cut as soon as its partial
/// union contains a union already found.  Output is ordered by union size,
/// then lexicographically, and holds no duplicates.
std::vector<Cover> enumerate_minimal_covers(const CoverProblem& problem);

/// Candidates whose extent meets `target`.
std::vector<CoverCandidate> meeting(const std::vector<CoverCandidate>& candidates,
                                    const ObjectSet& target);

}  // namespace granule
