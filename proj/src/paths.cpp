#include "cogweave/paths.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "cogweave/error.hpp"

namespace cogweave {

bool Cycle::contains(std::string_view id) const {
    return std::find(node_ids.begin(), node_ids.end(), id) != node_ids.end();
}

namespace {

// Cycle searching never crosses the role layer; what remains is bipartite
// between concept nodes and triple nodes, so every cycle is even.
struct CycleGraph {
    std::vector<std::string> ids;  // sorted
    std::map<std::string, std::vector<std::string>> adjacency;
};

CycleGraph cycle_graph(const SymNetwork& net) {
    CycleGraph g;
    std::set<std::string> eligible;
    for (const auto& n : net.nodes)
        if (n.layer >= 1) eligible.insert(n.id);
    for (const auto& [a, b] : net.edges) {
        if (!eligible.count(a) || !eligible.count(b)) continue;
        g.adjacency[a].push_back(b);
        g.adjacency[b].push_back(a);
    }
    g.ids.assign(eligible.begin(), eligible.end());
    for (auto& [id, neighbours] : g.adjacency) std::sort(neighbours.begin(), neighbours.end());
    return g;
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const SymNetwork& net, std::size_t max_length) {
    if (max_length < 4) throw DomainError("max cycle length must be at least 4");
    CycleGraph g = cycle_graph(net);
    std::vector<Cycle> out;
    std::vector<std::string> path;
    std::set<std::string> on_path;

    // Anchoring each cycle at its least node id and requiring the second
    // element below the last emits every cycle exactly once, already in
    // canonical form.
    std::function<void(const std::string&)> dfs = [&](const std::string& u) {
        auto it = g.adjacency.find(u);
        if (it == g.adjacency.end()) return;
        for (const auto& v : it->second) {
            if (v == path.front()) {
                if (path.size() >= 4 && path[1] < path.back()) out.push_back({path});
                continue;
            }
            if (v < path.front() || on_path.count(v) || path.size() == max_length) continue;
            path.push_back(v);
            on_path.insert(v);
            dfs(v);
            path.pop_back();
            on_path.erase(v);
        }
    };
    for (const auto& start : g.ids) {
        path = {start};
        on_path = {start};
        dfs(start);
    }

    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.node_ids < b.node_ids;
    });
    return out;
}

std::vector<Cycle> shortest_cycles(const SymNetwork& net, std::string_view concept_label) {
    const NetworkNode* node = node_for_concept(net, concept_label);
    if (!node)
        throw DomainError("not a cycle concept: " + std::string(concept_label));

    std::size_t eligible = 0;
    for (const auto& n : net.nodes)
        if (n.layer >= 1) ++eligible;
    std::size_t cap = std::max<std::size_t>(4, eligible - eligible % 2);

    std::vector<Cycle> through;
    for (auto& cycle : enumerate_cycles(net, cap))
        if (cycle.contains(node->id)) through.push_back(std::move(cycle));
    if (through.empty()) return through;

    std::size_t best = through.front().length();
    std::erase_if(through, [&](const Cycle& c) { return c.length() != best; });
    return through;
}

std::vector<const NetworkNode*> dead_ends(const SymNetwork& net) {
    CycleGraph g = cycle_graph(net);

    // A node lies on a cycle exactly when some incident edge is not a
    // bridge.
    std::map<std::string, int> disc, low;
    std::set<std::pair<std::string, std::string>> bridges;
    int timer = 0;
    std::function<void(const std::string&, const std::string*)> dfs =
        [&](const std::string& u, const std::string* parent) {
            disc[u] = low[u] = ++timer;
            for (const auto& v : g.adjacency[u]) {
                if (parent && v == *parent) continue;
                if (disc.count(v)) {
                    low[u] = std::min(low[u], disc[v]);
                    continue;
                }
                dfs(v, &u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] > disc[u]) bridges.insert(v < u ? std::make_pair(v, u) : std::make_pair(u, v));
            }
        };
    for (const auto& id : g.ids)
        if (!disc.count(id)) dfs(id, nullptr);

    std::set<std::string> on_cycle;
    for (const auto& [id, neighbours] : g.adjacency) {
        for (const auto& v : neighbours) {
            auto edge = id < v ? std::make_pair(id, v) : std::make_pair(v, id);
            if (!bridges.count(edge)) {
                on_cycle.insert(id);
                break;
            }
        }
    }

    std::vector<const NetworkNode*> out;
    for (const auto* n : net.layer_nodes(2))
        if (!on_cycle.count(n->id)) out.push_back(n);
    std::sort(out.begin(), out.end(),
              [](const NetworkNode* a, const NetworkNode* b) { return a->id < b->id; });
    return out;
}

std::vector<std::string> display_order(const Cycle& cycle, std::string_view start_id) {
    auto it = std::find(cycle.node_ids.begin(), cycle.node_ids.end(), start_id);
    if (it == cycle.node_ids.end()) return cycle.node_ids;
    std::size_t n = cycle.node_ids.size();
    std::size_t at = static_cast<std::size_t>(it - cycle.node_ids.begin());
    bool forward = cycle.node_ids[(at + 1) % n] < cycle.node_ids[(at + n - 1) % n];
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(forward ? cycle.node_ids[(at + i) % n]
                              : cycle.node_ids[(at + n - i) % n]);
    return out;
}

Schedule derive_schedule(const SymNetwork& net, const CplScript& script) {
    if (net.script_ref != script.name)
        throw DomainError("network was not built from this script");

    std::map<std::string, int> occurrence;
    std::map<std::string, std::size_t> first_seen;  // triple ordinal of first use
    for (const auto& t : script.triples) {
        for (const auto& symbol : {t.object, t.effector, t.source}) {
            ++occurrence[symbol];
            first_seen.emplace(symbol, t.ordinal);
        }
    }
    auto is_leaf = [&](const std::string& symbol) { return occurrence[symbol] == 1; };

    std::vector<const Triple*> pending;
    for (const auto& t : script.triples)
        if (is_leaf(t.object) || is_leaf(t.effector) || is_leaf(t.source))
            pending.push_back(&t);

    Schedule schedule;
    std::set<std::string> realized;
    while (!pending.empty()) {
        auto ready = pending.end();
        for (auto it = pending.begin(); it != pending.end(); ++it) {
            if (is_leaf((*it)->source) || realized.count((*it)->source)) {
                ready = it;
                break;
            }
        }
        if (ready == pending.end()) {
            // No step is grounded; fall back to the one whose source enters
            // the script earliest.
            ready = std::min_element(pending.begin(), pending.end(),
                                     [&](const Triple* a, const Triple* b) {
                                         auto ka = std::make_pair(first_seen[a->source], a->ordinal);
                                         auto kb = std::make_pair(first_seen[b->source], b->ordinal);
                                         return ka < kb;
                                     });
        }
        const Triple* t = *ready;
        pending.erase(ready);
        ScheduleStep step;
        step.index = schedule.steps.size() + 1;
        step.triple_ordinal = t->ordinal;
        for (const auto& symbol : {t->source, t->effector, t->object}) {
            if (realized.insert(symbol).second)
                step.realized.push_back(*script.find_symbol(symbol));
        }
        schedule.steps.push_back(std::move(step));
    }

    for (const auto& s : script.symbols)
        if (!realized.count(s.symbol)) schedule.final_realized.push_back(s);
    return schedule;
}

}  // namespace cogweave
