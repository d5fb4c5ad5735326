#include "cogweave/export.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include <json.hpp>

namespace cogweave {

namespace {

std::vector<const NetworkNode*> layer_sorted(const SymNetwork& net, int layer) {
    auto nodes = net.layer_nodes(layer);
    std::sort(nodes.begin(), nodes.end(),
              [](const NetworkNode* a, const NetworkNode* b) { return a->id < b->id; });
    return nodes;
}

}  // namespace

std::string export_dot(const SymNetwork& net) {
    // Role colouring: objects blue, effectors red, sources green; a
    // concept node takes the colour of the first role set holding it.
    std::array<std::set<std::string>, 3> role_sets;
    for (const auto& n : net.nodes) {
        if (n.layer != 0 || !n.role) continue;
        for (const auto& c : n.concepts)
            role_sets[static_cast<std::size_t>(*n.role)].insert(c.symbol);
    }
    constexpr std::array<const char*, 3> kColors = {"blue", "red", "green"};
    auto concept_color = [&](const std::string& symbol) -> const char* {
        for (std::size_t r = 0; r < 3; ++r)
            if (role_sets[r].count(symbol)) return kColors[r];
        return nullptr;
    };

    std::string out = "graph \"" + net.script_ref + "\" {\n";
    out += "  rankdir=BT;\n";
    out += "  node [shape=box];\n";
    for (int layer = 0; layer <= 3; ++layer) {
        auto nodes = layer_sorted(net, layer);
        if (nodes.empty()) continue;
        out += "  { rank=same;";
        for (const auto* n : nodes) out += " \"" + n->id + "\";";
        out += " }\n";
    }
    for (int layer = 0; layer <= 3; ++layer) {
        for (const auto* n : layer_sorted(net, layer)) {
            std::string label;
            const char* color = nullptr;
            switch (n->kind) {
                case NodeKind::RoleType: {
                    label = n->id + ":";
                    for (const auto& c : n->concepts) label += " " + c.symbol;
                    color = kColors[static_cast<std::size_t>(*n->role)];
                    break;
                }
                case NodeKind::SharedConcept:
                case NodeKind::UpperShared:
                    label = n->concepts[0].label + " (" + n->concepts[0].symbol + ")";
                    color = concept_color(n->concepts[0].symbol);
                    break;
                case NodeKind::TripleNode:
                    label = n->id;
                    break;
            }
            out += "  \"" + n->id + "\" [label=\"" + label + "\"";
            if (color) out += ", color=" + std::string(color);
            out += "];\n";
        }
    }
    for (const auto& [a, b] : net.edges) out += "  \"" + a + "\" -- \"" + b + "\";\n";
    out += "}\n";
    return out;
}

std::string export_json(const SymNetwork& net) {
    using ordered_json = nlohmann::ordered_json;
    ordered_json doc;
    doc["script"] = net.script_ref;

    std::vector<const NetworkNode*> nodes;
    for (const auto& n : net.nodes) nodes.push_back(&n);
    std::sort(nodes.begin(), nodes.end(),
              [](const NetworkNode* a, const NetworkNode* b) { return a->id < b->id; });

    doc["nodes"] = ordered_json::array();
    for (const auto* n : nodes) {
        ordered_json jn;
        jn["id"] = n->id;
        jn["kind"] = to_string(n->kind);
        jn["layer"] = n->layer;
        jn["concepts"] = ordered_json::array();
        for (const auto& c : n->concepts)
            jn["concepts"].push_back({{"symbol", c.symbol}, {"label", c.label}});
        if (n->role) jn["role"] = to_string(*n->role);
        doc["nodes"].push_back(std::move(jn));
    }

    doc["edges"] = ordered_json::array();
    for (const auto& [a, b] : net.edges) doc["edges"].push_back({a, b});

    return doc.dump(2) + "\n";
}

}  // namespace cogweave
