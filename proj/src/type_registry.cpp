#include "cogweave/type_registry.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "cogweave/error.hpp"

namespace cogweave {

namespace {

std::string joined(const std::vector<std::string>& path) {
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) out += '/';
        out += path[i];
    }
    return out;
}

}  // namespace

TypeRegistry TypeRegistry::rebuild(const EnsembleStore& ensembles, const ConceptTreeStore& trees,
                                   const SymNetwork* network) {
    TypeRegistry reg;
    std::vector<std::string> path;

    std::function<void(const EnsembleNode&)> walk_ensemble = [&](const EnsembleNode& node) {
        path.push_back(node.label);
        TypeEntry& entry = reg.entries_[node.label];
        entry.concept_label = node.label;
        entry.ensemble_refs.push_back(&node);
        entry.ensemble_paths.push_back(joined(path));
        for (const auto& child : node.children) walk_ensemble(*child);
        path.pop_back();
    };
    for (const auto& root : ensembles.roots()) walk_ensemble(*root);

    std::function<void(const ConceptTreeNode&)> walk_tree = [&](const ConceptTreeNode& node) {
        path.push_back(node.label);
        TypeEntry& entry = reg.entries_[node.label];
        entry.concept_label = node.label;
        entry.tree_refs.push_back(&node);
        entry.tree_paths.push_back(joined(path));
        for (const auto& child : node.children) walk_tree(*child);
        path.pop_back();
    };
    for (const auto& tree : trees.trees()) walk_tree(*tree);

    if (network) {
        for (const auto& node : network->nodes) {
            if (node.layer != 1 && node.layer != 3) continue;
            const ConceptSymbol& c = node.concepts[0];
            TypeEntry& entry = reg.entries_[c.label];
            entry.concept_label = c.label;
            entry.network_ref = &node;
            entry.network_desc = node.id + " (layer " + std::to_string(node.layer) + ")";
            reg.symbol_aliases_.emplace(c.symbol, c.label);
        }
    }
    return reg;
}

const TypeEntry* TypeRegistry::resolve(std::string_view concept_label) const {
    if (auto it = entries_.find(std::string(concept_label)); it != entries_.end())
        return &it->second;
    if (auto alias = symbol_aliases_.find(std::string(concept_label));
        alias != symbol_aliases_.end()) {
        if (auto it = entries_.find(alias->second); it != entries_.end()) return &it->second;
    }
    return nullptr;
}

ActivationResult TypeRegistry::activate(std::string_view concept_label) const {
    ActivationResult result;
    const TypeEntry* entry = resolve(concept_label);
    if (!entry) {
        result.concept_label = std::string(concept_label);
        return result;
    }
    result.concept_label = entry->concept_label;
    result.known = true;
    result.ensemble_instances = entry->ensemble_paths;
    result.tree_instances = entry->tree_paths;
    result.network_instance = entry->network_desc;
    return result;
}

HornQueryResult TypeRegistry::query_horn(const SymNetwork* network,
                                         const std::vector<std::string>& concepts) const {
    HornQueryResult result;
    for (const auto& raw : concepts) {
        const TypeEntry* entry = resolve(raw);
        std::string label = entry ? entry->concept_label : raw;
        if (std::find(result.requested.begin(), result.requested.end(), label) ==
            result.requested.end())
            result.requested.push_back(label);
    }

    std::vector<const NetworkNode*> housed(result.requested.size(), nullptr);
    if (network)
        for (std::size_t i = 0; i < result.requested.size(); ++i)
            housed[i] = node_for_concept(*network, result.requested[i]);

    // Greedy cover in request order: each uncovered concept contributes the
    // shortest cycle through it that reaches the most still-uncovered
    // requested nodes.
    std::set<std::string> covered;
    for (std::size_t i = 0; i < result.requested.size(); ++i) {
        if (!housed[i] || covered.count(housed[i]->id)) continue;
        auto candidates = shortest_cycles(*network, result.requested[i]);
        if (candidates.empty()) continue;
        auto uncovered_hits = [&](const Cycle& cycle) {
            std::size_t hits = 0;
            for (std::size_t j = 0; j < result.requested.size(); ++j)
                if (housed[j] && !covered.count(housed[j]->id) && cycle.contains(housed[j]->id))
                    ++hits;
            return hits;
        };
        const Cycle* best = &candidates.front();
        std::size_t best_hits = uncovered_hits(*best);
        for (const auto& cycle : candidates) {
            std::size_t hits = uncovered_hits(cycle);
            if (hits > best_hits) {
                best = &cycle;
                best_hits = hits;
            }
        }
        covered.insert(best->node_ids.begin(), best->node_ids.end());
        result.covering_cycles.push_back(*best);
    }

    for (const auto& label : result.requested)
        result.instance_bindings.push_back(activate(label));

    result.complete = !result.requested.empty();
    for (std::size_t i = 0; i < result.requested.size(); ++i)
        if (!housed[i] || !covered.count(housed[i]->id)) result.complete = false;
    return result;
}

}  // namespace cogweave
