#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "granule/index_set.hpp"

namespace granule {

/// Raised for any structural problem with a context (bad dimensions,
/// duplicate names, incompatible blocks).
class ContextError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised while reading CXT or JSON documents.  `line` is 1-based; zero
/// means the position is not tied to a line (JSON structural errors).
class ParseError : public ContextError {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Binary object x attribute table (U, A, I).
///
/// Immutable after construction.  Rows and columns are both kept as bit
/// sets so that derivations in either direction are word-parallel.
class FormalContext {
 public:
  FormalContext(std::vector<std::string> object_names,
                std::vector<std::string> attribute_names,
                const std::vector<std::vector<bool>>& incidence);

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t attribute_count() const noexcept { return attributes_.size(); }

  const std::vector<std::string>& object_names() const noexcept { return objects_; }
  const std::vector<std::string>& attribute_names() const noexcept { return attributes_; }

  bool incident(std::size_t object, std::size_t attribute) const {
    return rows_.at(object).contains(attribute);
  }

  /// Attributes of one object (xI).
  const AttributeSet& row(std::size_t object) const { return rows_.at(object); }
  /// Objects having one attribute (Ie).
  const ObjectSet& column(std::size_t attribute) const { return columns_.at(attribute); }

  ObjectSet all_objects() const { return ObjectSet::full(object_count()); }
  AttributeSet all_attributes() const { return AttributeSet::full(attribute_count()); }
  ObjectSet no_objects() const { return ObjectSet(object_count()); }
  AttributeSet no_attributes() const { return AttributeSet(attribute_count()); }

  std::vector<std::vector<bool>> incidence() const;

  friend bool operator==(const FormalContext& a, const FormalContext& b) {
    return a.objects_ == b.objects_ && a.attributes_ == b.attributes_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<AttributeSet> rows_;
  std::vector<ObjectSet> columns_;
};

enum class Flavor { ThreeWay, CommonNecessary };

/// Shared object universe with two attribute blocks (U, A, I, B, J).
///
/// ThreeWay: B is the negation of A column by column.  CommonNecessary: the
/// blocks are independent.  `flattened()` is the |A|+|B| column context with
/// A first, which is what the three-way derivation operators work on.
class CompoundContext {
 public:
  CompoundContext(FormalContext a_block, FormalContext b_block, Flavor flavor);

  const FormalContext& a_block() const noexcept { return a_; }
  const FormalContext& b_block() const noexcept { return b_; }
  const FormalContext& flattened() const noexcept { return flat_; }
  Flavor flavor() const noexcept { return flavor_; }

  std::size_t object_count() const noexcept { return a_.object_count(); }
  const std::vector<std::string>& object_names() const noexcept { return a_.object_names(); }
  ObjectSet all_objects() const { return a_.all_objects(); }

  friend bool operator==(const CompoundContext& x, const CompoundContext& y) {
    return x.flavor_ == y.flavor_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  FormalContext a_;
  FormalContext b_;
  FormalContext flat_;
  Flavor flavor_;
};

enum class ContextFormat { Cxt, Json };

inline constexpr std::string_view kDefaultNegationPrefix = "not_";

/// Reads CXT or JSON; the format is detected from the first non-blank
/// character ('{' selects JSON).
FormalContext parse_context(std::string_view text);
FormalContext parse_cxt(std::string_view text);
FormalContext parse_context_json(std::string_view text);

std::string serialize_context(const FormalContext& ctx, ContextFormat format);

/// Compound documents are JSON only.
CompoundContext parse_compound_json(std::string_view text);
std::string serialize_compound_json(const CompoundContext& cctx);

/// True when the JSON text carries the compound keys.
bool looks_like_compound_json(std::string_view text);

/// Same objects, every incidence bit flipped, attribute names prefixed.
FormalContext complement_context(const FormalContext& ctx,
                                 std::string_view prefix = kDefaultNegationPrefix);

/// (U, A, I) -> (U, A, I, B, J) with B the complemented copy of A.
CompoundContext appose_negation(const FormalContext& ctx,
                                std::string_view prefix = kDefaultNegationPrefix);

/// Pairs a frequently-used block with an infrequently-used one over the same
/// object list.
CompoundContext make_cn_context(const FormalContext& primary, const FormalContext& secondary);

const char* to_string(Flavor flavor);

}  // namespace granule
