#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "granule/context.hpp"
#include "granule/index_set.hpp"

namespace granule {

enum class Block { A, B };
enum class Polarity { Positive, Negated };

/// One attribute literal.  Ordering puts A before B and positive before
/// negated, then follows the attribute index.
struct Atom {
  Block block = Block::A;
  std::size_t index = 0;
  Polarity polarity = Polarity::Positive;

  friend auto operator<=>(const Atom& x, const Atom& y) {
    if (auto c = x.block <=> y.block; c != 0) return c;
    if (auto c = x.polarity <=> y.polarity; c != 0) return c;
    return x.index <=> y.index;
  }
  friend bool operator==(const Atom&, const Atom&) = default;
};

class FormulaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A granule description: a flat conjunction, a flat disjunction, or a
/// conjunction of A atoms with one parenthesized disjunction of B atoms.
class Description {
 public:
  enum class Kind { Conj, Disj, ConjDisj };

  /// Each factory sorts the atoms and rejects empty or duplicated lists.
  static Description conj(std::vector<Atom> atoms);
  static Description disj(std::vector<Atom> atoms);
  static Description conj_disj(std::vector<Atom> conj_atoms, std::vector<Atom> disj_atoms);

  /// Positive A-block atoms for every member.
  static Description conj_of(const AttributeSet& attributes);
  static Description disj_of(const AttributeSet& attributes);
  /// Over a flattened three-way attribute set of size 2n: index k < n is a_k,
  /// index n + k is ¬a_k.
  static Description three_way_conj_of(const AttributeSet& flattened, std::size_t a_count);
  static Description conj_disj_of(const AttributeSet& a_part, const AttributeSet& b_part);

  Kind kind() const noexcept { return kind_; }
  /// Conj atoms (Conj and ConjDisj) or disjuncts (Disj).
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  /// The parenthesized disjunction of a ConjDisj; empty otherwise.
  const std::vector<Atom>& disjuncts() const noexcept { return disjuncts_; }

  friend bool operator==(const Description&, const Description&) = default;

 private:
  Description(Kind kind, std::vector<Atom> atoms, std::vector<Atom> disjuncts);

  Kind kind_;
  std::vector<Atom> atoms_;
  std::vector<Atom> disjuncts_;
};

/// Attribute names for rendering and parsing.
struct Vocabulary {
  std::vector<std::string> a_names;
  std::vector<std::string> b_names;
  /// Three-way: B atoms are negations of A atoms and print as ¬a.
  bool b_negates_a = false;
};

Vocabulary vocabulary_of(const FormalContext& ctx);
Vocabulary vocabulary_of(const CompoundContext& cctx);

enum class Notation { Unicode, Ascii };

/// "a1 ∧ a2", "a3 ∨ a4", "a1 ∧ (b2 ∨ b4)", "a3 ∧ ¬a1".
/// ASCII notation uses '&', '|' and '!'.
std::string render(const Description& d, const Vocabulary& vocab, Notation notation = Notation::Unicode);

/// Parses a description against a context's attribute names.  Accepts both
/// notations.  In a three-way compound, B names and negated A names are the
/// same atom and parse to the negated A form.
Description parse_description(std::string_view text, const FormalContext& ctx);
Description parse_description(std::string_view text, const CompoundContext& cctx);

/// m(d): the objects satisfying the description.  A formal context accepts
/// positive A-block Conj and Disj; a three-way compound accepts Conj with
/// negations; a common-and-necessary compound accepts ConjDisj.
ObjectSet evaluate(const FormalContext& ctx, const Description& d);
ObjectSet evaluate(const CompoundContext& cctx, const Description& d);

}  // namespace granule
