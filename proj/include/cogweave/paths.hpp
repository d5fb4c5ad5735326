#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cogweave/network.hpp"
#include "cogweave/script_io.hpp"

namespace cogweave {

// A simple closed walk over concept and triple nodes, stored canonically:
// the lexicographically least node id first, proceeding toward the lesser
// of its two neighbours. Role nodes never participate.
struct Cycle {
    std::vector<std::string> node_ids;

    std::size_t length() const { return node_ids.size(); }
    bool contains(std::string_view id) const;

    friend bool operator==(const Cycle&, const Cycle&) = default;
};

// Every simple cycle of length <= max_length, sorted by (length, node id
// sequence). Throws DomainError when max_length < 4.
std::vector<Cycle> enumerate_cycles(const SymNetwork& network, std::size_t max_length = 8);

// All minimum-length cycles through the concept's node. Throws DomainError
// when the concept is not housed in the network.
std::vector<Cycle> shortest_cycles(const SymNetwork& network, std::string_view concept_label);

// Triple nodes lying on no cycle, sorted by id.
std::vector<const NetworkNode*> dead_ends(const SymNetwork& network);

// The cycle rotated to start at the given node, proceeding toward the
// lesser neighbour; for presentation.
std::vector<std::string> display_order(const Cycle& cycle, std::string_view start_id);

struct ScheduleStep {
    std::size_t index = 0;          // 1-based
    std::size_t triple_ordinal = 0;
    // The step's concepts in source, effector, object order, omitting
    // concepts realized by earlier steps. Never empty.
    std::vector<ConceptSymbol> realized;
};

struct Schedule {
    std::vector<ScheduleStep> steps;
    // Concepts touched by no leaf triple; realized at the final marker.
    std::vector<ConceptSymbol> final_realized;
    bool final_marker = true;
};

// Leaf-chain acquisition schedule. A leaf is a concept occurring in exactly
// one triple; each triple holding at least one leaf emits one step. Steps
// whose source is a leaf or already realized go first (lowest ordinal
// wins); when none qualifies, the step whose source enters the script
// earliest goes next.
Schedule derive_schedule(const SymNetwork& network, const CplScript& script);

}  // namespace cogweave
