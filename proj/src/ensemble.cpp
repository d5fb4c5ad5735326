#include "cogweave/ensemble.hpp"

#include <functional>

namespace cogweave {

const char* to_string(MergeKind kind) {
    switch (kind) {
        case MergeKind::NewRoot: return "new-root";
        case MergeKind::Contained: return "contained";
        case MergeKind::Overlapped: return "overlapped";
    }
    return "unknown";
}

namespace {

bool embed_at(const PartNode& part, EnsembleNode& node, std::vector<EnsembleNode*>& hits);

// Injective assignment of part children to distinct node children. Sibling
// labels may repeat on both sides, so the assignment backtracks.
bool embed_children(const PartNode& part, EnsembleNode& node, std::vector<EnsembleNode*>& hits) {
    std::vector<bool> used(node.children.size(), false);
    std::function<bool(std::size_t)> match = [&](std::size_t k) {
        if (k == part.children.size()) return true;
        for (std::size_t j = 0; j < node.children.size(); ++j) {
            if (used[j]) continue;
            std::size_t mark = hits.size();
            if (embed_at(part.children[k], *node.children[j], hits)) {
                used[j] = true;
                if (match(k + 1)) return true;
                used[j] = false;
                hits.resize(mark);
            }
        }
        return false;
    };
    return match(0);
}

bool embed_at(const PartNode& part, EnsembleNode& node, std::vector<EnsembleNode*>& hits) {
    if (node.label != part.label) return false;
    hits.push_back(&node);
    if (embed_children(part, node, hits)) return true;
    hits.pop_back();
    return false;
}

// First pre-order anchor where the whole part embeds.
bool find_embedding(const PartNode& part, EnsembleNode& node, std::vector<EnsembleNode*>& hits) {
    if (embed_at(part, node, hits)) return true;
    for (auto& child : node.children)
        if (find_embedding(part, *child, hits)) return true;
    return false;
}

std::unique_ptr<EnsembleNode> instantiate(const PartNode& part, const LinkKey& key,
                                          std::size_t& created) {
    auto node = std::make_unique<EnsembleNode>();
    node->label = part.label;
    node->keys.insert(key);
    ++created;
    for (const auto& child : part.children)
        node->children.push_back(instantiate(child, key, created));
    return node;
}

// Greedy top-down combination: each part child claims the first unclaimed
// same-label child that existed before this merge; the rest are appended,
// so a part with more duplicates than the store keeps the extras.
void merge_overlap(const PartNode& part, EnsembleNode& node, const LinkKey& key,
                   MergeReport& report) {
    node.keys.insert(key);
    ++report.nodes_key_extended;
    std::size_t original = node.children.size();
    std::vector<bool> claimed(original, false);
    for (const auto& pc : part.children) {
        bool matched = false;
        for (std::size_t j = 0; j < original; ++j) {
            if (claimed[j] || node.children[j]->label != pc.label) continue;
            claimed[j] = true;
            merge_overlap(pc, *node.children[j], key, report);
            matched = true;
            break;
        }
        if (!matched) node.children.push_back(instantiate(pc, key, report.nodes_created));
    }
}

void collect_instances(const EnsembleNode& node, std::string_view label,
                       std::vector<const EnsembleNode*>& out) {
    if (node.label == label) out.push_back(&node);
    for (const auto& child : node.children) collect_instances(*child, label, out);
}

void render(const EnsembleNode& node, std::size_t depth, std::string& out) {
    out.append(depth * 2, ' ');
    out += node.label;
    out += " [";
    bool first = true;
    for (const auto& key : node.keys) {
        if (!first) out += ", ";
        out += key.key;
        first = false;
    }
    out += "]\n";
    for (const auto& child : node.children) render(*child, depth + 1, out);
}

std::size_t count_nodes(const EnsembleNode& node) {
    std::size_t n = 1;
    for (const auto& child : node.children) n += count_nodes(*child);
    return n;
}

}  // namespace

MergeReport EnsembleStore::add_part(const OntologyPart& part) {
    MergeReport report;
    for (auto& root : roots_) {
        std::vector<EnsembleNode*> hits;
        if (find_embedding(part.root, *root, hits)) {
            for (auto* node : hits) node->keys.insert(part.link_key);
            report.kind = MergeKind::Contained;
            report.nodes_key_extended = hits.size();
            return report;
        }
    }
    for (auto& root : roots_) {
        if (root->label == part.root.label) {
            report.kind = MergeKind::Overlapped;
            merge_overlap(part.root, *root, part.link_key, report);
            return report;
        }
    }
    report.kind = MergeKind::NewRoot;
    roots_.push_back(instantiate(part.root, part.link_key, report.nodes_created));
    return report;
}

std::vector<const EnsembleNode*> EnsembleStore::find_instances(
    std::string_view concept_label) const {
    std::vector<const EnsembleNode*> out;
    for (const auto& root : roots_) collect_instances(*root, concept_label, out);
    return out;
}

std::string EnsembleStore::render_view() const {
    std::string out;
    for (const auto& root : roots_) render(*root, 0, out);
    return out;
}

std::size_t EnsembleStore::node_count() const {
    std::size_t n = 0;
    for (const auto& root : roots_) n += count_nodes(*root);
    return n;
}

void EnsembleStore::restore_root(std::unique_ptr<EnsembleNode> root) {
    roots_.push_back(std::move(root));
}

}  // namespace cogweave
