#include "cogweave/network.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <set>

#include "cogweave/error.hpp"

namespace cogweave {

const char* to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::RoleType: return "role-type";
        case NodeKind::SharedConcept: return "shared-concept";
        case NodeKind::TripleNode: return "triple";
        case NodeKind::UpperShared: return "upper-shared";
    }
    return "unknown";
}

const char* to_string(Role role) {
    switch (role) {
        case Role::Objects: return "objects";
        case Role::Effectors: return "effectors";
        case Role::Sources: return "sources";
    }
    return "unknown";
}

const NetworkNode* SymNetwork::node(std::string_view id) const {
    for (const auto& n : nodes)
        if (n.id == id) return &n;
    return nullptr;
}

std::vector<const NetworkNode*> SymNetwork::layer_nodes(int layer) const {
    std::vector<const NetworkNode*> out;
    for (const auto& n : nodes)
        if (n.layer == layer) out.push_back(&n);
    return out;
}

namespace {

std::string triple_id(const Triple& t) { return t.object + t.effector + t.source; }

void add_edge(SymNetwork& net, const std::string& a, const std::string& b) {
    net.edges.push_back(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
}

}  // namespace

SymNetwork build_network(const CplScript& script) {
    if (script.triples.empty()) throw DomainError("script has no steps");
    SymNetwork net;
    net.script_ref = script.name;

    auto resolve = [&](const std::string& symbol) {
        const ConceptSymbol* s = script.find_symbol(symbol);
        assert(s);
        return *s;
    };

    constexpr std::array<Role, 3> kRoles = {Role::Objects, Role::Effectors, Role::Sources};
    const std::array<std::string, 3> role_ids = {"objects", "effectors", "sources"};
    std::array<std::vector<std::string>, 3> occurrences;
    for (const auto& t : script.triples) {
        occurrences[0].push_back(t.object);
        occurrences[1].push_back(t.effector);
        occurrences[2].push_back(t.source);
    }

    for (std::size_t r = 0; r < 3; ++r) {
        NetworkNode node{role_ids[r], NodeKind::RoleType, 0, {}, kRoles[r]};
        for (const auto& symbol : occurrences[r]) node.concepts.push_back(resolve(symbol));
        net.nodes.push_back(std::move(node));
    }

    std::array<std::set<std::string>, 3> role_sets;
    for (std::size_t r = 0; r < 3; ++r)
        role_sets[r].insert(occurrences[r].begin(), occurrences[r].end());

    std::vector<std::string> appearance;  // symbols in first-occurrence order
    std::map<std::string, int> triple_count;
    for (const auto& t : script.triples) {
        for (const auto& symbol : {t.object, t.effector, t.source}) {
            if (std::find(appearance.begin(), appearance.end(), symbol) == appearance.end())
                appearance.push_back(symbol);
            ++triple_count[symbol];
        }
    }

    std::set<std::string> shared;
    for (const auto& symbol : appearance) {
        int role_spread = 0;
        for (const auto& role_set : role_sets) role_spread += role_set.count(symbol) ? 1 : 0;
        if (role_spread < 2) continue;
        shared.insert(symbol);
        net.nodes.push_back({symbol, NodeKind::SharedConcept, 1, {resolve(symbol)}, {}});
        for (std::size_t r = 0; r < 3; ++r)
            if (role_sets[r].count(symbol)) add_edge(net, role_ids[r], symbol);
    }

    for (const auto& t : script.triples) {
        std::string id = triple_id(t);
        net.nodes.push_back(
            {id, NodeKind::TripleNode, 2, {resolve(t.object), resolve(t.effector), resolve(t.source)}, {}});
        for (const auto& symbol : {t.object, t.effector, t.source})
            if (shared.count(symbol)) add_edge(net, id, symbol);
    }

    for (const auto& symbol : appearance) {
        if (shared.count(symbol) || triple_count[symbol] < 2) continue;
        net.nodes.push_back({symbol, NodeKind::UpperShared, 3, {resolve(symbol)}, {}});
        for (const auto& t : script.triples)
            if (t.object == symbol || t.effector == symbol || t.source == symbol)
                add_edge(net, symbol, triple_id(t));
    }

    for (const auto& t : script.triples) {
        bool any_shared = shared.count(t.object) || shared.count(t.effector) ||
                          shared.count(t.source);
        if (!any_shared)
            for (const auto& role_id : role_ids) add_edge(net, triple_id(t), role_id);
    }

    std::sort(net.edges.begin(), net.edges.end());
    net.edges.erase(std::unique(net.edges.begin(), net.edges.end()), net.edges.end());
    return net;
}

std::vector<std::string> validate(const SymNetwork& net) {
    std::vector<std::string> issues;

    std::map<std::string, const NetworkNode*> by_id;
    for (const auto& n : net.nodes) {
        if (!by_id.emplace(n.id, &n).second)
            issues.push_back("duplicate node id " + n.id);
    }

    std::size_t role_nodes = 0;
    for (const auto& n : net.nodes) {
        if (n.layer < 0 || n.layer > 3)
            issues.push_back("node " + n.id + " sits outside the four layers");
        static const std::map<int, NodeKind> kLayerKind = {
            {0, NodeKind::RoleType},
            {1, NodeKind::SharedConcept},
            {2, NodeKind::TripleNode},
            {3, NodeKind::UpperShared}};
        if (auto it = kLayerKind.find(n.layer);
            it != kLayerKind.end() && n.kind != it->second)
            issues.push_back("node " + n.id + " kind does not match its layer");
        if (n.layer == 0) ++role_nodes;
    }
    if (role_nodes != 3)
        issues.push_back("expected exactly 3 role nodes, found " + std::to_string(role_nodes));

    std::array<std::set<std::string>, 3> role_sets;
    for (const auto& n : net.nodes) {
        if (n.layer != 0 || !n.role) continue;
        for (const auto& c : n.concepts)
            role_sets[static_cast<std::size_t>(*n.role)].insert(c.symbol);
    }

    std::set<std::string> shared_symbols;
    for (const auto* n : net.layer_nodes(1)) shared_symbols.insert(n->concepts[0].symbol);

    std::map<std::string, int> triple_count;
    for (const auto* n : net.layer_nodes(2))
        for (const auto& c : n->concepts) ++triple_count[c.symbol];

    for (const auto* n : net.layer_nodes(1)) {
        const std::string& symbol = n->concepts[0].symbol;
        int role_spread = 0;
        for (const auto& role_set : role_sets) role_spread += role_set.count(symbol) ? 1 : 0;
        if (role_spread < 2)
            issues.push_back("shared concept " + symbol + " occurs in fewer than two role sets");
    }

    for (const auto* n : net.layer_nodes(3)) {
        const std::string& symbol = n->concepts[0].symbol;
        if (shared_symbols.count(symbol))
            issues.push_back("concept " + symbol + " is housed in both concept layers");
        else if (triple_count[symbol] < 2)
            issues.push_back("upper concept " + symbol + " occurs in fewer than two steps");
    }

    std::map<std::string, std::vector<const NetworkNode*>> adjacent;
    for (const auto& [a, b] : net.edges) {
        auto ia = by_id.find(a);
        auto ib = by_id.find(b);
        if (ia == by_id.end() || ib == by_id.end()) {
            issues.push_back("edge " + a + "-" + b + " references a missing node");
            continue;
        }
        int la = ia->second->layer;
        int lb = ib->second->layer;
        int lo = std::min(la, lb);
        int hi = std::max(la, lb);
        bool adjacent_layers = hi - lo == 1;
        bool fallback = lo == 0 && hi == 2;
        if (!adjacent_layers && !fallback)
            issues.push_back("edge " + a + "-" + b + " joins non-adjacent layers");
        adjacent[a].push_back(ib->second);
        adjacent[b].push_back(ia->second);
    }

    // The symbol-to-node map tolerates duplicate housing; the layer checks
    // above already report that case.
    std::map<std::string, std::string> housed;
    for (const auto& n : net.nodes)
        if (n.layer == 1 || n.layer == 3) housed.emplace(n.concepts[0].symbol, n.id);

    for (const auto* n : net.layer_nodes(2)) {
        std::size_t concept_edges = 0;
        std::size_t role_edges = 0;
        for (const auto* peer : adjacent[n->id]) {
            if (peer->layer == 0) ++role_edges;
            if (peer->layer == 1) ++concept_edges;
        }
        if (adjacent[n->id].empty()) {
            issues.push_back("triple node " + n->id + " is isolated");
            continue;
        }
        if (concept_edges == 0 && role_edges == 0)
            issues.push_back("triple node " + n->id + " lacks role fallback edges");
        if (concept_edges > 0 && role_edges > 0)
            issues.push_back("triple node " + n->id + " mixes shared-concept and role edges");
        for (const auto& c : n->concepts) {
            auto it = housed.find(c.symbol);
            if (it == housed.end()) continue;
            auto pair = n->id < it->second ? std::make_pair(n->id, it->second)
                                           : std::make_pair(it->second, n->id);
            if (!std::binary_search(net.edges.begin(), net.edges.end(), pair))
                issues.push_back("missing edge between " + n->id + " and " + it->second);
        }
    }

    return issues;
}

const NetworkNode* node_for_concept(const SymNetwork& net, std::string_view symbol_or_label) {
    for (const auto& n : net.nodes) {
        if (n.layer != 1 && n.layer != 3) continue;
        if (n.concepts[0].symbol == symbol_or_label || n.concepts[0].label == symbol_or_label)
            return &n;
    }
    return nullptr;
}

}  // namespace cogweave
