#include "granule/report.hpp"

#include <sstream>

namespace granule {

namespace {

using nlohmann::json;

std::string braced(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += ",";
    out += items[k];
  }
  return out + "}";
}

template <class Tag>
std::vector<std::string> names_of(const IndexSet<Tag>& s, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  s.for_each([&](std::size_t i) { out.push_back(names.at(i)); });
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string cn_intent_text(const CnIntent& e, const CompoundContext& cctx) {
  return "(" + braced(names_of(e.a_part, cctx.a_block().attribute_names())) + ", " +
         braced(names_of(e.b_part, cctx.b_block().attribute_names())) + ")";
}

}  // namespace

json objects_json(const ObjectSet& objects) {
  json out = json::array();
  objects.for_each([&](std::size_t o) { out.push_back(o + 1); });
  return out;
}

std::string objects_text(const ObjectSet& objects, const std::vector<std::string>& names) {
  return braced(names_of(objects, names));
}

std::string attributes_text(const AttributeSet& attributes, const std::vector<std::string>& names) {
  return braced(names_of(attributes, names));
}

json description_json(const Description& d, const Vocabulary& vocab) {
  json conj = json::array(), disj = json::array(), negated = json::array();
  auto name = [&](const Atom& a) {
    return a.block == Block::A ? vocab.a_names.at(a.index) : vocab.b_names.at(a.index);
  };
  auto& primary = d.kind() == Description::Kind::Disj ? disj : conj;
  for (const auto& a : d.atoms()) (a.polarity == Polarity::Negated ? negated : primary).push_back(name(a));
  for (const auto& a : d.disjuncts()) disj.push_back(name(a));
  return {{"conj", conj}, {"disj", disj}, {"negated", negated}};
}

json verdict_json(const Verdict& v, const Vocabulary& vocab) {
  json out;
  out["status"] = to_string(v.status);
  out["description"] = v.description ? description_json(*v.description, vocab) : json(nullptr);
  out["reason"] = v.reason ? json(to_string(*v.reason)) : json(nullptr);
  out["witness"] = v.witness ? objects_json(*v.witness) : json(nullptr);
  if (v.description) out["formula"] = render(*v.description, vocab);
  return out;
}

json approximation_json(const Approximation& a, const Vocabulary& vocab) {
  json results = json::array();
  for (const auto& g : a.granules)
    results.push_back({{"granule", objects_json(g.granule)},
                       {"description", g.description ? json(render(*g.description, vocab)) : json(nullptr)}});
  json out{{"direction", to_string(a.direction)},
           {"mode", to_string(a.mode)},
           {"exact", a.exact},
           {"results", results}};
  out["reason"] = a.inapplicable ? json(to_string(*a.inapplicable)) : json(nullptr);
  return out;
}

json lattice_json(const ConceptLattice& lattice, const std::vector<std::string>& attribute_names) {
  json out = json::array();
  for (const auto& c : lattice.concepts)
    out.push_back({{"extent", objects_json(c.extent)},
                   {"intent", names_of(c.intent, attribute_names)},
                   {"system", to_string(c.system)}});
  return out;
}

json cn_concepts_json(const std::vector<CnConcept>& concepts, const CompoundContext& cctx) {
  json out = json::array();
  for (const auto& c : concepts) {
    auto intent = names_of(c.intent.a_part, cctx.a_block().attribute_names());
    auto b = names_of(c.intent.b_part, cctx.b_block().attribute_names());
    intent.insert(intent.end(), b.begin(), b.end());
    out.push_back({{"extent", objects_json(c.extent)},
                   {"intent", intent},
                   {"system", to_string(System::CommonNecessary)}});
  }
  return out;
}

std::string lattice_text(const ConceptLattice& lattice, const std::vector<std::string>& object_names,
                         const std::vector<std::string>& attribute_names) {
  std::ostringstream os;
  for (std::size_t k = 0; k < lattice.concepts.size(); ++k) {
    const auto& c = lattice.concepts[k];
    os << "C" << k << " = (" << objects_text(c.extent, object_names) << ", "
       << attributes_text(c.intent, attribute_names) << ")\n";
  }
  return os.str();
}

std::string cn_concepts_text(const std::vector<CnConcept>& concepts, const CompoundContext& cctx) {
  std::ostringstream os;
  for (std::size_t k = 0; k < concepts.size(); ++k)
    os << "C" << k << " = (" << objects_text(concepts[k].extent, cctx.object_names()) << ", "
       << cn_intent_text(concepts[k].intent, cctx) << ")\n";
  return os.str();
}

std::string lattice_dot(const ConceptLattice& lattice, const std::vector<std::string>& object_names,
                        const std::vector<std::string>& attribute_names) {
  std::ostringstream os;
  os << "digraph lattice {\n";
  os << "  node [shape=box];\n";
  for (std::size_t k = 0; k < lattice.concepts.size(); ++k) {
    const auto& c = lattice.concepts[k];
    os << "  c" << k << " [label=\""
       << dot_escape(objects_text(c.extent, object_names) + " | " + attributes_text(c.intent, attribute_names))
       << "\"];\n";
  }
  for (auto [lo, up] : lattice.covers) os << "  c" << up << " -> c" << lo << ";\n";
  os << "}\n";
  return os.str();
}

std::string verdict_text(const Verdict& v, const Vocabulary& vocab, const std::vector<std::string>& object_names) {
  std::string out = to_string(v.status);
  if (v.description) out += ": " + render(*v.description, vocab);
  if (v.reason) out += std::string(" (") + to_string(*v.reason) + ")";
  if (v.witness) out += ", closure " + objects_text(*v.witness, object_names);
  return out + "\n";
}

std::string approximation_text(const Approximation& a, const Vocabulary& vocab,
                               const std::vector<std::string>& object_names) {
  std::ostringstream os;
  os << to_string(a.direction) << " " << to_string(a.mode);
  if (a.inapplicable) {
    os << ": inapplicable (" << to_string(*a.inapplicable) << ")\n";
    return os.str();
  }
  os << (a.exact ? " (exact)" : "") << "\n";
  if (a.granules.empty()) os << "  {} (no description)\n";
  for (const auto& g : a.granules) {
    os << "  " << objects_text(g.granule, object_names) << " = ";
    os << (g.description ? render(*g.description, vocab) : std::string("(no description)")) << "\n";
  }
  return os.str();
}

}  // namespace granule
