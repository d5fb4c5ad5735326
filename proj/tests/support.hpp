#pragma once

// Shared fixtures: bundled-data access, a brute-force cycle oracle, and
// seeded random generators. No doctest here; the acceptance binary uses
// this header too.

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cogweave/concept_tree.hpp"
#include "cogweave/network.hpp"
#include "cogweave/paths.hpp"
#include "cogweave/script_io.hpp"

namespace support {

inline std::string data_file(const std::string& name) {
    return std::string(COGWEAVE_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Exhaustive simple-cycle search: walk every simple path from every start
// node and canonicalize whatever closes. Independent of the enumeration
// order tricks in the library; meant to be obviously correct, not fast.
inline std::vector<cogweave::Cycle> oracle_cycles(const cogweave::SymNetwork& net,
                                                  std::size_t max_length) {
    std::set<std::string> eligible;
    for (const auto& n : net.nodes)
        if (n.layer >= 1) eligible.insert(n.id);
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& [a, b] : net.edges) {
        if (!eligible.count(a) || !eligible.count(b)) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    auto canonical = [](const std::vector<std::string>& path) {
        std::size_t n = path.size();
        std::size_t at = static_cast<std::size_t>(
            std::min_element(path.begin(), path.end()) - path.begin());
        std::vector<std::string> fwd, bwd;
        for (std::size_t k = 0; k < n; ++k) fwd.push_back(path[(at + k) % n]);
        for (std::size_t k = 0; k < n; ++k) bwd.push_back(path[(at + n - k) % n]);
        return fwd[1] < bwd[1] ? fwd : bwd;
    };

    std::set<std::vector<std::string>> found;
    std::vector<std::string> path;
    std::set<std::string> on_path;
    std::function<void(const std::string&, const std::string&)> walk =
        [&](const std::string& start, const std::string& here) {
            for (const auto& next : adj[here]) {
                if (next == start && path.size() >= 4 && path.size() % 2 == 0)
                    found.insert(canonical(path));
                if (on_path.count(next) || path.size() >= max_length) continue;
                path.push_back(next);
                on_path.insert(next);
                walk(start, next);
                path.pop_back();
                on_path.erase(next);
            }
        };
    for (const auto& start : eligible) {
        path = {start};
        on_path = {start};
        walk(start, start);
    }

    std::vector<cogweave::Cycle> cycles;
    for (const auto& ids : found) cycles.push_back(cogweave::Cycle{ids});
    std::sort(cycles.begin(), cycles.end(),
              [](const cogweave::Cycle& a, const cogweave::Cycle& b) {
                  if (a.length() != b.length()) return a.length() < b.length();
                  return a.node_ids < b.node_ids;
              });
    return cycles;
}

inline const std::array<const char*, 12> kSymbolPool = {"A", "B", "C", "D", "E", "F",
                                                        "G", "H", "I", "J", "K", "L"};
inline const std::array<const char*, 12> kLabelPool = {"Alpha", "Bravo",  "Charlie", "Delta",
                                                       "Echo",  "Foxtrot", "Golf",   "Hotel",
                                                       "India", "Juliet",  "Kilo",   "Lima"};

// Up to 10 distinct steps over 3..12 symbols; matches the CPL constraints
// (no symbol repeated within a step, no duplicate step).
inline cogweave::CplScript random_script(std::mt19937& rng) {
    cogweave::CplScript script;
    script.name = "random-script";
    std::uniform_int_distribution<std::size_t> symbol_count(3, 12);
    std::size_t n = symbol_count(rng);
    for (std::size_t i = 0; i < n; ++i)
        script.symbols.push_back({kSymbolPool[i], kLabelPool[i]});

    std::uniform_int_distribution<std::size_t> step_count(1, 10);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::size_t want = step_count(rng);
    std::set<std::array<std::size_t, 3>> used;
    for (int attempt = 0; attempt < 200 && script.triples.size() < want; ++attempt) {
        std::array<std::size_t, 3> t = {pick(rng), pick(rng), pick(rng)};
        if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) continue;
        if (!used.insert(t).second) continue;
        script.triples.push_back({kSymbolPool[t[0]], kSymbolPool[t[1]], kSymbolPool[t[2]],
                                  script.triples.size() + 1});
    }
    if (script.triples.empty())
        script.triples.push_back({kSymbolPool[0], kSymbolPool[1], kSymbolPool[2], 1});
    return script;
}

inline cogweave::PartNode random_part_node(std::mt19937& rng, int depth_left, int& budget) {
    std::uniform_int_distribution<std::size_t> pick(0, kSymbolPool.size() - 1);
    cogweave::PartNode node{kLabelPool[pick(rng)], {}};
    if (depth_left <= 1) return node;
    std::uniform_int_distribution<int> child_count(0, 3);
    int children = child_count(rng);
    for (int i = 0; i < children && budget > 0; ++i) {
        --budget;
        node.children.push_back(random_part_node(rng, depth_left - 1, budget));
    }
    return node;
}

// Depth <= 5, 12-label alphabet, duplicate siblings allowed.
inline cogweave::OntologyPart random_part(std::mt19937& rng, int ordinal) {
    int budget = 11;
    return {cogweave::LinkKey{"Link_" + std::to_string(ordinal), ordinal},
            random_part_node(rng, 5, budget)};
}

inline std::size_t part_size(const cogweave::PartNode& node) {
    std::size_t total = 1;
    for (const auto& child : node.children) total += part_size(child);
    return total;
}

inline bool tree_siblings_unique(const cogweave::ConceptTreeNode& node) {
    std::set<std::string> labels;
    for (const auto& child : node.children) {
        if (!labels.insert(child->label).second) return false;
        if (!tree_siblings_unique(*child)) return false;
    }
    return true;
}

inline bool tree_keys_subset(const cogweave::ConceptTreeNode& node) {
    for (const auto& child : node.children) {
        if (!std::includes(node.keys.begin(), node.keys.end(), child->keys.begin(),
                           child->keys.end()))
            return false;
        if (!tree_keys_subset(*child)) return false;
    }
    return true;
}

inline bool tree_counts_match(const cogweave::ConceptTreeNode& node) {
    if (node.count != node.keys.size()) return false;
    for (const auto& child : node.children)
        if (!tree_counts_match(*child)) return false;
    return true;
}

}  // namespace support
