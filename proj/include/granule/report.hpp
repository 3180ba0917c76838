#pragma once

#include <string>
#include <vector>

#include "granule/approximation.hpp"
#include "granule/definability.hpp"
#include "granule/formula.hpp"
#include "granule/lattice.hpp"
#include "json.hpp"

namespace granule {

// Objects are reported by 1-based position in JSON and by name in text.

nlohmann::json objects_json(const ObjectSet& objects);
std::string objects_text(const ObjectSet& objects, const std::vector<std::string>& names);
std::string attributes_text(const AttributeSet& attributes, const std::vector<std::string>& names);

/// {"conj":[...], "disj":[...], "negated":[...]}
nlohmann::json description_json(const Description& d, const Vocabulary& vocab);

/// {"status":..., "description":..., "reason":..., "witness":...}
nlohmann::json verdict_json(const Verdict& v, const Vocabulary& vocab);

/// {"direction":..., "mode":..., "exact":..., "results":[{"granule":[...], "description":"..."}]}
nlohmann::json approximation_json(const Approximation& a, const Vocabulary& vocab);

/// [{"extent":[...], "intent":[...], "system":"..."}] with intents as names.
nlohmann::json lattice_json(const ConceptLattice& lattice, const std::vector<std::string>& attribute_names);
nlohmann::json cn_concepts_json(const std::vector<CnConcept>& concepts, const CompoundContext& cctx);

/// One "Ck = ({...}, {...})" line per concept.
std::string lattice_text(const ConceptLattice& lattice, const std::vector<std::string>& object_names,
                         const std::vector<std::string>& attribute_names);
std::string cn_concepts_text(const std::vector<CnConcept>& concepts, const CompoundContext& cctx);

/// Graphviz digraph: one node per concept labelled "extent | intent", an
/// edge from each concept to the concepts it covers, top first.
std::string lattice_dot(const ConceptLattice& lattice, const std::vector<std::string>& object_names,
                        const std::vector<std::string>& attribute_names);

std::string verdict_text(const Verdict& v, const Vocabulary& vocab, const std::vector<std::string>& object_names);
std::string approximation_text(const Approximation& a, const Vocabulary& vocab,
                               const std::vector<std::string>& object_names);

}  // namespace granule
