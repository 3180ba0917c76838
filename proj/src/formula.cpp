#include "granule/formula.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

#include "granule/derivation.hpp"

namespace granule {

namespace {

void normalize(std::vector<Atom>& atoms, const char* what) {
  if (atoms.empty()) throw FormulaError(std::string(what) + " needs at least one atom");
  std::sort(atoms.begin(), atoms.end());
  if (std::adjacent_find(atoms.begin(), atoms.end()) != atoms.end())
    throw FormulaError(std::string("duplicate atom in ") + what);
}

void require_positive(const std::vector<Atom>& atoms, Block block, const char* what) {
  for (const auto& a : atoms)
    if (a.polarity != Polarity::Positive || a.block != block)
      throw FormulaError(std::string(what) + " admits only positive " +
                         (block == Block::A ? "A" : "B") + "-block atoms");
}

const std::string& name_of(const Vocabulary& v, const Atom& atom) {
  const auto& names = (atom.block == Block::A) ? v.a_names : v.b_names;
  if (atom.index >= names.size()) throw FormulaError("atom index outside the vocabulary");
  return names[atom.index];
}

std::string atom_text(const Vocabulary& v, const Atom& atom, Notation n) {
  if (atom.polarity == Polarity::Negated) return (n == Notation::Ascii ? "!" : "¬") + name_of(v, atom);
  return name_of(v, atom);
}

std::string join(const std::vector<Atom>& atoms, const Vocabulary& v, std::string_view sep, Notation n) {
  std::string out;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if (k) out += sep;
    out += atom_text(v, atoms[k], n);
  }
  return out;
}

// ---- parsing -------------------------------------------------------------

enum class Tok { Name, And, Or, Not, LParen, RParen };

struct Token {
  Tok kind;
  std::string text;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view sym) { return s.substr(i, sym.size()) == sym; };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
    } else if (c == '&') {
      out.push_back({Tok::And, "&"}), ++i;
    } else if (c == '|') {
      out.push_back({Tok::Or, "|"}), ++i;
    } else if (c == '!') {
      out.push_back({Tok::Not, "!"}), ++i;
    } else if (c == '(') {
      out.push_back({Tok::LParen, "("}), ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")"}), ++i;
    } else if (starts("∧")) {
      out.push_back({Tok::And, "∧"}), i += std::string_view("∧").size();
    } else if (starts("∨")) {
      out.push_back({Tok::Or, "∨"}), i += std::string_view("∨").size();
    } else if (starts("¬")) {
      out.push_back({Tok::Not, "¬"}), i += std::string_view("¬").size();
    } else {
      std::size_t j = i;
      while (j < s.size() && std::string_view(" \t\r\n&|!()").find(s[j]) == std::string_view::npos) {
        auto rest = s.substr(j);
        if (rest.starts_with("∧") || rest.starts_with("∨") || rest.starts_with("¬")) break;
        ++j;
      }
      out.push_back({Tok::Name, std::string(s.substr(i, j - i))});
      i = j;
    }
  }
  return out;
}

class Resolver {
 public:
  explicit Resolver(const Vocabulary& v) : v_(v) {
    for (std::size_t k = 0; k < v.a_names.size(); ++k) a_[v.a_names[k]] = k;
    for (std::size_t k = 0; k < v.b_names.size(); ++k) b_[v.b_names[k]] = k;
  }

  Atom resolve(const std::string& name, bool negated) const {
    Atom atom;
    if (auto it = a_.find(name); it != a_.end()) {
      atom = {Block::A, it->second, Polarity::Positive};
    } else if (auto jt = b_.find(name); jt != b_.end()) {
      atom = {Block::B, jt->second, Polarity::Positive};
      if (v_.b_negates_a) atom = {Block::A, jt->second, Polarity::Negated};
    } else {
      throw FormulaError("unknown attribute '" + name + "'");
    }
    if (negated) {
      if (!v_.b_negates_a) throw FormulaError("negation needs a three-way compound context");
      atom.polarity = atom.polarity == Polarity::Positive ? Polarity::Negated : Polarity::Positive;
    }
    return atom;
  }

 private:
  const Vocabulary& v_;
  std::unordered_map<std::string, std::size_t> a_;
  std::unordered_map<std::string, std::size_t> b_;
};

// Grammar:
//   description := term (AND term)* | literal (OR literal)+
//   term        := literal | '(' literal (OR literal)* ')'
//   literal     := NOT? NAME
// At most one parenthesized group.
Description parse_with(std::string_view text, const Vocabulary& vocab) {
  auto toks = tokenize(text);
  if (toks.empty()) throw FormulaError("empty description");
  Resolver res(vocab);
  std::size_t pos = 0;

  auto peek = [&]() -> std::optional<Tok> {
    if (pos < toks.size()) return toks[pos].kind;
    return std::nullopt;
  };
  auto literal = [&]() {
    bool neg = false;
    if (peek() == Tok::Not) neg = true, ++pos;
    if (peek() != Tok::Name) throw FormulaError("expected an attribute name");
    return res.resolve(toks[pos++].text, neg);
  };
  auto group = [&]() {
    ++pos;  // '('
    std::vector<Atom> g{literal()};
    while (peek() == Tok::Or) ++pos, g.push_back(literal());
    if (peek() == Tok::And) throw FormulaError("mixed connectives inside parentheses");
    if (peek() != Tok::RParen) throw FormulaError("expected ')'");
    ++pos;
    return g;
  };

  std::vector<Atom> conj;
  std::optional<std::vector<Atom>> disj;
  std::optional<Tok> connective;

  for (;;) {
    if (peek() == Tok::LParen) {
      if (disj) throw FormulaError("at most one parenthesized disjunction is allowed");
      disj = group();
    } else {
      conj.push_back(literal());
    }
    auto next = peek();
    if (!next) break;
    if (next != Tok::And && next != Tok::Or) throw FormulaError("expected a connective");
    if (connective && *connective != *next)
      throw FormulaError("mixed connectives: parenthesize the disjunction");
    connective = next;
    ++pos;
  }

  if (connective == Tok::Or) {
    if (disj) throw FormulaError("a parenthesized group cannot be a disjunct");
    for (const auto& a : conj)
      if (a.polarity == Polarity::Negated) throw FormulaError("negated atoms cannot appear in a disjunction");
    return Description::disj(std::move(conj));
  }
  if (disj) {
    if (conj.empty()) {
      if (disj->size() == 1) return Description::conj(std::move(*disj));
      return Description::disj(std::move(*disj));
    }
    return Description::conj_disj(std::move(conj), std::move(*disj));
  }
  return Description::conj(std::move(conj));
}

AttributeSet positive_set(const std::vector<Atom>& atoms, std::size_t universe) {
  AttributeSet s(universe);
  for (const auto& a : atoms) s.insert(a.index);
  return s;
}

}  // namespace

Description::Description(Kind kind, std::vector<Atom> atoms, std::vector<Atom> disjuncts)
    : kind_(kind), atoms_(std::move(atoms)), disjuncts_(std::move(disjuncts)) {}

Description Description::conj(std::vector<Atom> atoms) {
  normalize(atoms, "conjunction");
  return Description(Kind::Conj, std::move(atoms), {});
}

Description Description::disj(std::vector<Atom> atoms) {
  normalize(atoms, "disjunction");
  for (const auto& a : atoms)
    if (a.polarity != Polarity::Positive) throw FormulaError("disjunction admits only positive atoms");
  return Description(Kind::Disj, std::move(atoms), {});
}

Description Description::conj_disj(std::vector<Atom> conj_atoms, std::vector<Atom> disj_atoms) {
  normalize(conj_atoms, "conjunctive part");
  normalize(disj_atoms, "disjunctive part");
  require_positive(conj_atoms, Block::A, "conjunctive part");
  require_positive(disj_atoms, Block::B, "disjunctive part");
  return Description(Kind::ConjDisj, std::move(conj_atoms), std::move(disj_atoms));
}

Description Description::conj_of(const AttributeSet& attributes) {
  std::vector<Atom> atoms;
  attributes.for_each([&](std::size_t k) { atoms.push_back({Block::A, k, Polarity::Positive}); });
  return conj(std::move(atoms));
}

Description Description::disj_of(const AttributeSet& attributes) {
  std::vector<Atom> atoms;
  attributes.for_each([&](std::size_t k) { atoms.push_back({Block::A, k, Polarity::Positive}); });
  return disj(std::move(atoms));
}

Description Description::three_way_conj_of(const AttributeSet& flattened, std::size_t a_count) {
  std::vector<Atom> atoms;
  flattened.for_each([&](std::size_t k) {
    if (k < a_count)
      atoms.push_back({Block::A, k, Polarity::Positive});
    else
      atoms.push_back({Block::A, k - a_count, Polarity::Negated});
  });
  return conj(std::move(atoms));
}

Description Description::conj_disj_of(const AttributeSet& a_part, const AttributeSet& b_part) {
  std::vector<Atom> c, d;
  a_part.for_each([&](std::size_t k) { c.push_back({Block::A, k, Polarity::Positive}); });
  b_part.for_each([&](std::size_t k) { d.push_back({Block::B, k, Polarity::Positive}); });
  return conj_disj(std::move(c), std::move(d));
}

Vocabulary vocabulary_of(const FormalContext& ctx) { return {ctx.attribute_names(), {}, false}; }

Vocabulary vocabulary_of(const CompoundContext& cctx) {
  return {cctx.a_block().attribute_names(), cctx.b_block().attribute_names(),
          cctx.flavor() == Flavor::ThreeWay};
}

std::string render(const Description& d, const Vocabulary& vocab, Notation notation) {
  const bool ascii = notation == Notation::Ascii;
  std::string_view and_sep = ascii ? " & " : " ∧ ";
  std::string_view or_sep = ascii ? " | " : " ∨ ";
  switch (d.kind()) {
    case Description::Kind::Conj:
      return join(d.atoms(), vocab, and_sep, notation);
    case Description::Kind::Disj:
      return join(d.atoms(), vocab, or_sep, notation);
    case Description::Kind::ConjDisj:
      return join(d.atoms(), vocab, and_sep, notation) + std::string(and_sep) + "(" +
             join(d.disjuncts(), vocab, or_sep, notation) + ")";
  }
  return {};
}

Description parse_description(std::string_view text, const FormalContext& ctx) {
  return parse_with(text, vocabulary_of(ctx));
}

Description parse_description(std::string_view text, const CompoundContext& cctx) {
  return parse_with(text, vocabulary_of(cctx));
}

ObjectSet evaluate(const FormalContext& ctx, const Description& d) {
  if (d.kind() == Description::Kind::ConjDisj)
    throw FormulaError("a conjunction with a disjunctive part needs a common-and-necessary compound");
  require_positive(d.atoms(), Block::A, "a formal context");
  for (const auto& a : d.atoms())
    if (a.index >= ctx.attribute_count()) throw FormulaError("atom index outside the context");
  auto set = positive_set(d.atoms(), ctx.attribute_count());
  return d.kind() == Description::Kind::Conj ? extent(ctx, set) : possibility(ctx, set);
}

ObjectSet evaluate(const CompoundContext& cctx, const Description& d) {
  const auto& a = cctx.a_block();
  const auto& b = cctx.b_block();
  if (cctx.flavor() == Flavor::ThreeWay) {
    if (d.kind() != Description::Kind::Conj)
      throw FormulaError("a three-way compound evaluates conjunctions only");
    AttributeSet flat(a.attribute_count() + b.attribute_count());
    for (const auto& atom : d.atoms()) {
      std::size_t limit = atom.block == Block::A ? a.attribute_count() : b.attribute_count();
      if (atom.index >= limit) throw FormulaError("atom index outside the context");
      bool b_side = (atom.block == Block::B) != (atom.polarity == Polarity::Negated);
      flat.insert(b_side ? a.attribute_count() + atom.index : atom.index);
    }
    return compound_extent(cctx, flat);
  }
  if (d.kind() != Description::Kind::ConjDisj)
    throw FormulaError("a common-and-necessary compound evaluates a conjunction with one disjunctive part");
  for (const auto& atom : d.atoms())
    if (atom.index >= a.attribute_count()) throw FormulaError("atom index outside the context");
  for (const auto& atom : d.disjuncts())
    if (atom.index >= b.attribute_count()) throw FormulaError("atom index outside the context");
  return cn_extent(cctx, {positive_set(d.atoms(), a.attribute_count()),
                          positive_set(d.disjuncts(), b.attribute_count()), true});
}

}  // namespace granule
