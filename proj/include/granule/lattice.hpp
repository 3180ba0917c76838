#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "granule/context.hpp"
#include "granule/derivation.hpp"
#include "granule/index_set.hpp"

namespace granule {

enum class System { Formal, ObjectOriented, ThreeWayObject, CommonNecessary };

const char* to_string(System system);

struct Concept {
  ObjectSet extent;
  /// Attribute indices of the enumerated context.  Three-way intents range
  /// over the flattened A∪B columns.
  AttributeSet intent;
  System system = System::Formal;

  friend bool operator==(const Concept&, const Concept&) = default;
};

/// Concepts in canonical order (larger extents first, ties broken
/// lexicographically) with the cover relation of the extent order.
struct ConceptLattice {
  System system = System::Formal;
  std::vector<Concept> concepts;
  /// (lower, upper) index pairs: upper covers lower.
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  std::size_t top() const;
  std::size_t bottom() const;
};

struct CnConcept {
  ObjectSet extent;
  CnIntent intent;
};

/// Thrown when an enumeration would exceed its size guard.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxEnumeratedAttributes = 30;
inline constexpr std::size_t kMaxCnObjects = 20;

struct EnumerationOptions {
  /// Skip the size guards.
  bool force = false;
};

/// All formal concepts, generated as closed attribute sets in lectic order.
ConceptLattice enumerate_formal(const FormalContext& ctx, EnumerationOptions options = {});

/// Object-oriented concepts (X, B) with X□ = B and B⋄ = X, obtained from the
/// formal concepts of the complement context.
ConceptLattice enumerate_object_oriented(const FormalContext& ctx, EnumerationOptions options = {});

/// Formal concepts of the apposed context (A followed by its negation).
ConceptLattice enumerate_three_way(const FormalContext& ctx, EnumerationOptions options = {});
ConceptLattice enumerate_three_way(const CompoundContext& cctx, EnumerationOptions options = {});

/// Fixed points of cn_extent ∘ cn_intent over nonempty object sets, in
/// canonical order.  No order structure is attached.
std::vector<CnConcept> enumerate_cn(const CompoundContext& cctx, EnumerationOptions options = {});

bool leq(const Concept& lower, const Concept& upper);

/// (X1 ∩ X2, intent(X1 ∩ X2)).
Concept meet(const FormalContext& ctx, const Concept& x, const Concept& y);
/// (extent(B1 ∩ B2), B1 ∩ B2).
Concept join(const FormalContext& ctx, const Concept& x, const Concept& y);

}  // namespace granule
