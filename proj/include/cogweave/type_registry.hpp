#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cogweave/concept_tree.hpp"
#include "cogweave/ensemble.hpp"
#include "cogweave/network.hpp"
#include "cogweave/paths.hpp"

namespace cogweave {

// One entry per concept label across every level. Refs point into the
// stores the registry was rebuilt from; the snapshot is immutable, so a
// store mutation calls for a rebuild.
struct TypeEntry {
    std::string concept_label;
    std::vector<const EnsembleNode*> ensemble_refs;
    std::vector<std::string> ensemble_paths;  // parallel to ensemble_refs
    std::vector<const ConceptTreeNode*> tree_refs;
    std::vector<std::string> tree_paths;      // parallel to tree_refs
    const NetworkNode* network_ref = nullptr;
    std::string network_desc;
};

struct ActivationResult {
    std::string concept_label;  // resolved entry label
    bool known = false;
    std::vector<std::string> ensemble_instances;
    std::vector<std::string> tree_instances;
    std::string network_instance;  // empty when unhoused
};

struct HornQueryResult {
    std::vector<std::string> requested;  // resolved, input order, deduplicated
    std::vector<Cycle> covering_cycles;
    std::vector<ActivationResult> instance_bindings;
    bool complete = false;
};

class TypeRegistry {
public:
    // Snapshot over the given stores; network may be null. Network entries
    // are keyed by the concept's label, with a symbol alias for lookups.
    static TypeRegistry rebuild(const EnsembleStore& ensembles, const ConceptTreeStore& trees,
                                const SymNetwork* network);

    // Type-level fan-out: every instance of the label on every level.
    // Unknown labels come back flagged, never an error.
    ActivationResult activate(std::string_view concept_label) const;

    // Shortest cycles covering each network-housed requested concept, plus
    // instance bindings per concept. complete means every requested concept
    // is housed and covered.
    HornQueryResult query_horn(const SymNetwork* network,
                               const std::vector<std::string>& concepts) const;

    const std::map<std::string, TypeEntry>& entries() const { return entries_; }

private:
    std::map<std::string, TypeEntry> entries_;
    std::map<std::string, std::string> symbol_aliases_;

    const TypeEntry* resolve(std::string_view concept_label) const;
};

}  // namespace cogweave
