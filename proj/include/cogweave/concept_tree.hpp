#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cogweave/ensemble.hpp"
#include "cogweave/link_key.hpp"
#include "cogweave/script_io.hpp"

namespace cogweave {

// Middle-level node. Siblings aggregate by label, so children are unique
// per level. count stays equal to keys.size().
struct ConceptTreeNode {
    std::string label;
    std::set<LinkKey> keys;
    std::size_t count = 0;
    std::vector<std::unique_ptr<ConceptTreeNode>> children;
    // Restructure targets: re-rooted base concepts this node used to own.
    std::vector<const ConceptTreeNode*> reference_links;
};

struct CountingViolation {
    ConceptTreeNode* parent = nullptr;
    ConceptTreeNode* child = nullptr;
    std::size_t parent_count = 0;
    std::size_t child_count = 0;
};

// Single writer; concurrent readers are safe only while no mutation runs.
class ConceptTreeStore {
public:
    // Trees merge only on full containment, in either direction. An event
    // contained in a tree extends key sets; a tree contained in the event
    // grows in place (existing nodes keep their identity). Mere overlap
    // creates a separate tree.
    MergeReport add_event(const OntologyPart& part);

    std::vector<const ConceptTreeNode*> find_nodes(std::string_view concept_label) const;

    // Parents must count at least as high as each child; returns every
    // parent/child pair breaking that, in tree order then pre-order.
    std::vector<CountingViolation> check_counting_rule();

    // Re-roots the offending child subtree as a base concept and leaves a
    // reference link on the old parent. Throws DomainError if the
    // violation no longer holds as reported.
    MergeReport restructure(const CountingViolation& violation);

    // External linkage hook: adds a key without an event. This may break
    // the parent-dominates-child property that check_counting_rule polices.
    void inject_key(ConceptTreeNode& node, const LinkKey& key);

    const std::vector<std::unique_ptr<ConceptTreeNode>>& trees() const { return trees_; }
    std::string render_view() const;
    std::size_t node_count() const;

    // Persistence hook: appends a fully formed tree without merge checks.
    void restore_tree(std::unique_ptr<ConceptTreeNode> tree);

private:
    std::vector<std::unique_ptr<ConceptTreeNode>> trees_;
};

}  // namespace cogweave
