#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cogweave/link_key.hpp"
#include "cogweave/script_io.hpp"

namespace cogweave {

enum class MergeKind { NewRoot, Contained, Overlapped };

const char* to_string(MergeKind kind);

struct MergeReport {
    std::size_t nodes_created = 0;
    std::size_t nodes_key_extended = 0;
    MergeKind kind = MergeKind::NewRoot;
};

// Bottom-level node. Storage is value-exact, so one level may hold several
// children with the same label.
struct EnsembleNode {
    std::string label;
    std::set<LinkKey> keys;
    std::vector<std::unique_ptr<EnsembleNode>> children;
};

// Single writer; concurrent readers are safe only while no add_part runs.
class EnsembleStore {
public:
    // Containment is checked against every root before overlap is
    // considered; the first qualifying root wins, scanning in insertion
    // order. A contained part only extends key sets.
    MergeReport add_part(const OntologyPart& part);

    // All nodes with the given label, roots in insertion order, each root
    // walked pre-order.
    std::vector<const EnsembleNode*> find_instances(std::string_view concept_label) const;

    // Indented dump, two spaces per level, keys in brackets.
    std::string render_view() const;

    const std::vector<std::unique_ptr<EnsembleNode>>& roots() const { return roots_; }
    std::size_t node_count() const;

    // Persistence hook: appends a fully formed root without merge checks.
    void restore_root(std::unique_ptr<EnsembleNode> root);

private:
    std::vector<std::unique_ptr<EnsembleNode>> roots_;
};

}  // namespace cogweave
