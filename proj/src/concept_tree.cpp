#include "cogweave/concept_tree.hpp"

#include <functional>

#include "cogweave/error.hpp"

namespace cogweave {

namespace {

ConceptTreeNode* child_of(ConceptTreeNode& node, std::string_view label) {
    for (auto& child : node.children)
        if (child->label == label) return child.get();
    return nullptr;
}

const ConceptTreeNode* child_of(const ConceptTreeNode& node, std::string_view label) {
    for (const auto& child : node.children)
        if (child->label == label) return child.get();
    return nullptr;
}

void insert_key(ConceptTreeNode& node, const LinkKey& key) {
    node.keys.insert(key);
    node.count = node.keys.size();
}

std::unique_ptr<ConceptTreeNode> make_node(std::string label, const LinkKey& key) {
    auto node = std::make_unique<ConceptTreeNode>();
    node->label = std::move(label);
    insert_key(*node, key);
    return node;
}

// Same-label siblings of the presented part collapse into one node, so the
// event tree already satisfies the aggregation invariant.
void aggregate_into(ConceptTreeNode& node, const PartNode& part, const LinkKey& key) {
    for (const auto& pc : part.children) {
        ConceptTreeNode* child = child_of(node, pc.label);
        if (!child) {
            node.children.push_back(make_node(pc.label, key));
            child = node.children.back().get();
        }
        aggregate_into(*child, pc, key);
    }
}

std::unique_ptr<ConceptTreeNode> build_event(const OntologyPart& part) {
    auto root = make_node(part.root.label, part.link_key);
    aggregate_into(*root, part.root, part.link_key);
    return root;
}

// Children are label-unique on both sides, so embedding needs no search.
bool embeds(const ConceptTreeNode& a, const ConceptTreeNode& b) {
    if (a.label != b.label) return false;
    for (const auto& ca : a.children) {
        const ConceptTreeNode* cb = child_of(b, ca->label);
        if (!cb || !embeds(*ca, *cb)) return false;
    }
    return true;
}

// Fills path with the nodes of b from its root down to the first pre-order
// anchor at which a embeds completely.
bool find_anchor_path(const ConceptTreeNode& a, ConceptTreeNode& b,
                      std::vector<ConceptTreeNode*>& path) {
    path.push_back(&b);
    if (embeds(a, b)) return true;
    for (auto& cb : b.children)
        if (find_anchor_path(a, *cb, path)) return true;
    path.pop_back();
    return false;
}

std::size_t mark_contained(const ConceptTreeNode& event, ConceptTreeNode& anchor,
                           const LinkKey& key) {
    insert_key(anchor, key);
    std::size_t touched = 1;
    for (const auto& ec : event.children)
        touched += mark_contained(*ec, *child_of(anchor, ec->label), key);
    return touched;
}

std::size_t count_nodes(const ConceptTreeNode& node) {
    std::size_t n = 1;
    for (const auto& child : node.children) n += count_nodes(*child);
    return n;
}

// Consumes the event node's children: matched ones extend keys on the kept
// store nodes, unmatched subtrees move over as created nodes.
void merge_grow(ConceptTreeNode& event_node, ConceptTreeNode& old_node, const LinkKey& key,
                std::size_t& created, std::size_t& extended) {
    for (auto& ec : event_node.children) {
        if (ConceptTreeNode* oc = child_of(old_node, ec->label)) {
            insert_key(*oc, key);
            ++extended;
            merge_grow(*ec, *oc, key, created, extended);
        } else {
            created += count_nodes(*ec);
            old_node.children.push_back(std::move(ec));
        }
    }
    std::erase_if(event_node.children,
                  [](const std::unique_ptr<ConceptTreeNode>& c) { return c == nullptr; });
}

void collect_nodes(const ConceptTreeNode& node, std::string_view label,
                   std::vector<const ConceptTreeNode*>& out) {
    if (node.label == label) out.push_back(&node);
    for (const auto& child : node.children) collect_nodes(*child, label, out);
}

ConceptTreeNode* find_node(ConceptTreeNode& node, const ConceptTreeNode* target) {
    if (&node == target) return &node;
    for (auto& child : node.children)
        if (auto* hit = find_node(*child, target)) return hit;
    return nullptr;
}

void render(const ConceptTreeNode& node, std::size_t depth, std::string& out) {
    out.append(depth * 2, ' ');
    out += node.label;
    out += " [";
    bool first = true;
    for (const auto& key : node.keys) {
        if (!first) out += ", ";
        out += key.key;
        first = false;
    }
    out += "]";
    if (!node.reference_links.empty()) {
        out += " -> ";
        first = true;
        for (const auto* ref : node.reference_links) {
            if (!first) out += ", ";
            out += ref->label;
            first = false;
        }
    }
    out += "\n";
    for (const auto& child : node.children) render(*child, depth + 1, out);
}

}  // namespace

MergeReport ConceptTreeStore::add_event(const OntologyPart& part) {
    auto event = build_event(part);
    const LinkKey& key = part.link_key;

    // Event contained in an existing tree: key extension only. Ancestors of
    // a below-root anchor take the key too, keeping child keys a subset of
    // parent keys.
    for (auto& tree : trees_) {
        std::vector<ConceptTreeNode*> path;
        if (find_anchor_path(*event, *tree, path)) {
            MergeReport report;
            report.kind = MergeKind::Contained;
            report.nodes_key_extended = mark_contained(*event, *path.back(), key);
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                insert_key(*path[i], key);
                ++report.nodes_key_extended;
            }
            return report;
        }
    }

    // Existing tree contained in the event: the tree grows in place so its
    // nodes keep their identity, adopting the event's extra structure.
    for (auto& tree : trees_) {
        std::vector<ConceptTreeNode*> path;
        if (find_anchor_path(*tree, *event, path)) {
            MergeReport report;
            report.kind = MergeKind::Overlapped;
            ConceptTreeNode* anchor = path.back();
            std::size_t event_size = count_nodes(*event);
            std::size_t anchor_size = count_nodes(*anchor);
            std::set<LinkKey> old_root_keys = tree->keys;

            insert_key(*tree, key);
            ++report.nodes_key_extended;
            merge_grow(*anchor, *tree, key, report.nodes_created, report.nodes_key_extended);

            if (anchor != event.get()) {
                ConceptTreeNode* parent = path[path.size() - 2];
                for (auto& slot : parent->children) {
                    if (slot.get() == anchor) {
                        slot = std::move(tree);
                        break;
                    }
                }
                for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                    path[i]->keys = old_root_keys;
                    insert_key(*path[i], key);
                }
                report.nodes_created += event_size - anchor_size;
                tree = std::move(event);
            }
            return report;
        }
    }

    MergeReport report;
    report.kind = MergeKind::NewRoot;
    report.nodes_created = count_nodes(*event);
    trees_.push_back(std::move(event));
    return report;
}

std::vector<const ConceptTreeNode*> ConceptTreeStore::find_nodes(
    std::string_view concept_label) const {
    std::vector<const ConceptTreeNode*> out;
    for (const auto& tree : trees_) collect_nodes(*tree, concept_label, out);
    return out;
}

std::vector<CountingViolation> ConceptTreeStore::check_counting_rule() {
    std::vector<CountingViolation> violations;
    std::function<void(ConceptTreeNode&)> walk = [&](ConceptTreeNode& node) {
        for (auto& child : node.children) {
            if (child->count > node.count)
                violations.push_back({&node, child.get(), node.count, child->count});
            walk(*child);
        }
    };
    for (auto& tree : trees_) walk(*tree);
    return violations;
}

MergeReport ConceptTreeStore::restructure(const CountingViolation& violation) {
    ConceptTreeNode* parent = nullptr;
    for (auto& tree : trees_)
        if ((parent = find_node(*tree, violation.parent))) break;
    if (!parent) throw DomainError("stale counting violation: parent is gone");

    auto slot = parent->children.end();
    for (auto it = parent->children.begin(); it != parent->children.end(); ++it)
        if (it->get() == violation.child) slot = it;
    if (slot == parent->children.end())
        throw DomainError("stale counting violation: child is no longer attached");
    if (parent->count != violation.parent_count || (*slot)->count != violation.child_count ||
        violation.child_count <= violation.parent_count)
        throw DomainError("stale counting violation: counts have changed");

    auto subtree = std::move(*slot);
    parent->children.erase(slot);
    parent->reference_links.push_back(subtree.get());
    trees_.push_back(std::move(subtree));
    return {0, 0, MergeKind::NewRoot};
}

void ConceptTreeStore::inject_key(ConceptTreeNode& node, const LinkKey& key) {
    insert_key(node, key);
}

std::string ConceptTreeStore::render_view() const {
    std::string out;
    for (const auto& tree : trees_) render(*tree, 0, out);
    return out;
}

std::size_t ConceptTreeStore::node_count() const {
    std::size_t n = 0;
    for (const auto& tree : trees_) n += count_nodes(*tree);
    return n;
}

void ConceptTreeStore::restore_tree(std::unique_ptr<ConceptTreeNode> tree) {
    trees_.push_back(std::move(tree));
}

}  // namespace cogweave
