#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cogweave/script_io.hpp"

namespace cogweave {

enum class NodeKind { RoleType, SharedConcept, TripleNode, UpperShared };
enum class Role { Objects, Effectors, Sources };

const char* to_string(NodeKind kind);
const char* to_string(Role role);

struct NetworkNode {
    std::string id;
    NodeKind kind = NodeKind::RoleType;
    int layer = 0;
    // Role nodes carry one entry per triple; concept nodes carry exactly
    // one; triple nodes carry three in object, effector, source order.
    std::vector<ConceptSymbol> concepts;
    std::optional<Role> role;

    friend bool operator==(const NetworkNode&, const NetworkNode&) = default;
};

struct SymNetwork {
    std::string script_ref;
    std::vector<NetworkNode> nodes;  // layer 0, 1, 2, 3 creation order
    // Undirected, stored normalized (lesser id first), sorted, unique.
    std::vector<std::pair<std::string, std::string>> edges;

    const NetworkNode* node(std::string_view id) const;
    std::vector<const NetworkNode*> layer_nodes(int layer) const;

    friend bool operator==(const SymNetwork&, const SymNetwork&) = default;
};

// Deterministic four-layer construction: role nodes, shared concepts
// (>= 2 distinct role sets), one node per triple, upper shared concepts
// (>= 2 distinct triples, not already shared). A triple node without a
// shared-concept edge links to its three role nodes instead.
// Throws DomainError for a script with no steps.
SymNetwork build_network(const CplScript& script);

// Structural soundness diagnostics; empty means sound.
std::vector<std::string> validate(const SymNetwork& network);

// The unique concept node housing the symbol or label; null when unhoused.
const NetworkNode* node_for_concept(const SymNetwork& network, std::string_view symbol_or_label);

}  // namespace cogweave
