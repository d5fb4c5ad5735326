#pragma once

#include <string>

#include "cogweave/network.hpp"

namespace cogweave {

// Graphviz rendering: one same-rank group per populated layer, role nodes
// colored blue (objects), red (effectors), green (sources), concept nodes
// colored by the first role set holding them, objects taking precedence
// over effectors over sources. Byte-deterministic.
std::string export_dot(const SymNetwork& network);

// Nodes and edges sorted by id. Byte-deterministic.
std::string export_json(const SymNetwork& network);

}  // namespace cogweave
