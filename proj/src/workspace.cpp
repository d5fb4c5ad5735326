#include "cogweave/workspace.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cogweave/error.hpp"

namespace cogweave {

using ordered_json = nlohmann::ordered_json;

std::vector<Workspace::PartIngest> Workspace::ingest(std::string_view ontology_text) {
    auto parts =
        parse_ontology_parts(ontology_text, static_cast<int>(ingestion_log_.size()) + 1);
    std::set<std::string> session_keys;
    for (const auto& key : ingestion_log_) session_keys.insert(key.key);
    for (const auto& part : parts)
        if (!session_keys.insert(part.link_key.key).second)
            throw DomainError("link key already used in this session: " + part.link_key.key);

    std::vector<PartIngest> results;
    for (const auto& part : parts) {
        PartIngest result;
        result.key = part.link_key;
        result.ensemble = ensemble_.add_part(part);
        result.trees = trees_.add_event(part);
        ingestion_log_.push_back(part.link_key);
        results.push_back(result);
    }
    rebuild_registry();
    return results;
}

const SymNetwork& Workspace::add_script(const CplScript& script) {
    SymNetwork net = build_network(script);
    scripts_[script.name] = script;
    auto [it, inserted] = networks_.insert_or_assign(script.name, std::move(net));
    active_script_ = script.name;
    rebuild_registry();
    return it->second;
}

const SymNetwork* Workspace::network(std::string_view script_name) const {
    auto it = networks_.find(std::string(script_name));
    return it == networks_.end() ? nullptr : &it->second;
}

const SymNetwork* Workspace::active_network() const {
    if (active_script_.empty()) return nullptr;
    return network(active_script_);
}

std::vector<std::string> Workspace::network_names() const {
    std::vector<std::string> names;
    for (const auto& [name, net] : networks_) names.push_back(name);
    return names;
}

void Workspace::rebuild_registry() {
    registry_ = TypeRegistry::rebuild(ensemble_, trees_, active_network());
}

namespace {

ordered_json keys_to_json(const std::set<LinkKey>& keys) {
    ordered_json out = ordered_json::array();
    for (const auto& key : keys) out.push_back({key.key, key.ordinal});
    return out;
}

std::set<LinkKey> keys_from_json(const ordered_json& j) {
    std::set<LinkKey> keys;
    for (const auto& pair : j)
        keys.insert(LinkKey{pair.at(0).get<std::string>(), pair.at(1).get<int>()});
    return keys;
}

ordered_json ensemble_to_json(const EnsembleNode& node) {
    ordered_json out;
    out["label"] = node.label;
    out["keys"] = keys_to_json(node.keys);
    out["children"] = ordered_json::array();
    for (const auto& child : node.children) out["children"].push_back(ensemble_to_json(*child));
    return out;
}

std::unique_ptr<EnsembleNode> ensemble_from_json(const ordered_json& j) {
    auto node = std::make_unique<EnsembleNode>();
    node->label = j.at("label").get<std::string>();
    node->keys = keys_from_json(j.at("keys"));
    for (const auto& child : j.at("children")) node->children.push_back(ensemble_from_json(child));
    return node;
}

ordered_json tree_to_json(const ConceptTreeNode& node) {
    ordered_json out;
    out["label"] = node.label;
    out["keys"] = keys_to_json(node.keys);
    out["children"] = ordered_json::array();
    for (const auto& child : node.children) out["children"].push_back(tree_to_json(*child));
    return out;
}

std::unique_ptr<ConceptTreeNode> tree_from_json(const ordered_json& j) {
    auto node = std::make_unique<ConceptTreeNode>();
    node->label = j.at("label").get<std::string>();
    node->keys = keys_from_json(j.at("keys"));
    node->count = node->keys.size();
    for (const auto& child : j.at("children")) node->children.push_back(tree_from_json(child));
    return node;
}

// Sibling labels are unique in concept trees, so a root index plus a label
// path pins down one node.
void index_tree_paths(const ConceptTreeNode& node, std::size_t tree, std::vector<std::string>& path,
                      std::map<const ConceptTreeNode*, ordered_json>& out) {
    path.push_back(node.label);
    ordered_json loc;
    loc["tree"] = tree;
    loc["path"] = path;
    out.emplace(&node, std::move(loc));
    for (const auto& child : node.children) index_tree_paths(*child, tree, path, out);
    path.pop_back();
}

}  // namespace

std::string Workspace::to_json_text() const {
    ordered_json doc;
    doc["format"] = "cogweave/1";

    doc["ingestion_log"] = ordered_json::array();
    for (const auto& key : ingestion_log_)
        doc["ingestion_log"].push_back({{"key", key.key}, {"ordinal", key.ordinal}});

    doc["ensemble"] = ordered_json::array();
    for (const auto& root : ensemble_.roots()) doc["ensemble"].push_back(ensemble_to_json(*root));

    doc["trees"] = ordered_json::array();
    std::map<const ConceptTreeNode*, ordered_json> locations;
    for (std::size_t i = 0; i < trees_.trees().size(); ++i) {
        const auto& tree = trees_.trees()[i];
        doc["trees"].push_back(tree_to_json(*tree));
        std::vector<std::string> path;
        index_tree_paths(*tree, i, path, locations);
    }

    doc["tree_references"] = ordered_json::array();
    std::function<void(const ConceptTreeNode&)> emit_refs = [&](const ConceptTreeNode& node) {
        for (const auto* target : node.reference_links) {
            ordered_json ref;
            ref["from"] = locations.at(&node);
            ref["to"] = locations.at(target);
            doc["tree_references"].push_back(std::move(ref));
        }
        for (const auto& child : node.children) emit_refs(*child);
    };
    for (const auto& tree : trees_.trees()) emit_refs(*tree);

    doc["scripts"] = ordered_json::array();
    for (const auto& [name, script] : scripts_) {
        ordered_json js;
        js["name"] = name;
        js["symbols"] = ordered_json::array();
        for (const auto& s : script.symbols) js["symbols"].push_back({s.symbol, s.label});
        js["steps"] = ordered_json::array();
        for (const auto& t : script.triples)
            js["steps"].push_back({t.object, t.effector, t.source});
        doc["scripts"].push_back(std::move(js));
    }

    doc["active_script"] = active_script_;
    return doc.dump(2) + "\n";
}

Workspace Workspace::from_json_text(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception&) {
        throw PersistError("corrupt workspace file");
    }
    if (!doc.is_object() || doc.value("format", std::string()) != "cogweave/1")
        throw PersistError("unsupported workspace format");

    Workspace ws;
    try {
        for (const auto& entry : doc.at("ingestion_log"))
            ws.ingestion_log_.push_back(
                {entry.at("key").get<std::string>(), entry.at("ordinal").get<int>()});

        for (const auto& root : doc.at("ensemble"))
            ws.ensemble_.restore_root(ensemble_from_json(root));

        std::map<std::string, ConceptTreeNode*> by_path;
        std::function<void(ConceptTreeNode&, std::string)> index =
            [&](ConceptTreeNode& node, std::string prefix) {
                prefix += "/" + node.label;
                by_path[prefix] = &node;
                for (auto& child : node.children) index(*child, prefix);
            };
        std::vector<std::unique_ptr<ConceptTreeNode>> trees;
        for (const auto& jt : doc.at("trees")) {
            trees.push_back(tree_from_json(jt));
            index(*trees.back(), std::to_string(trees.size() - 1));
        }
        auto locate = [&](const ordered_json& loc) -> ConceptTreeNode* {
            std::string key = std::to_string(loc.at("tree").get<std::size_t>());
            for (const auto& label : loc.at("path")) key += "/" + label.get<std::string>();
            auto it = by_path.find(key);
            if (it == by_path.end()) throw PersistError("corrupt workspace file: dangling tree reference");
            return it->second;
        };
        for (const auto& ref : doc.at("tree_references"))
            locate(ref.at("from"))->reference_links.push_back(locate(ref.at("to")));
        for (auto& tree : trees) ws.trees_.restore_tree(std::move(tree));

        for (const auto& js : doc.at("scripts")) {
            CplScript script;
            script.name = js.at("name").get<std::string>();
            for (const auto& s : js.at("symbols"))
                script.symbols.push_back(
                    {s.at(0).get<std::string>(), s.at(1).get<std::string>()});
            for (const auto& t : js.at("steps"))
                script.triples.push_back({t.at(0).get<std::string>(),
                                          t.at(1).get<std::string>(),
                                          t.at(2).get<std::string>(),
                                          script.triples.size() + 1});
            ws.scripts_[script.name] = script;
            ws.networks_.insert_or_assign(script.name, build_network(script));
        }

        ws.active_script_ = doc.at("active_script").get<std::string>();
        if (!ws.active_script_.empty() && !ws.networks_.count(ws.active_script_))
            throw PersistError("corrupt workspace file: unknown active script");
    } catch (const nlohmann::json::exception&) {
        throw PersistError("corrupt workspace file");
    } catch (const DomainError& e) {
        throw PersistError("corrupt workspace file: " + std::string(e.what()));
    }

    ws.rebuild_registry();
    return ws;
}

void Workspace::save_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PersistError("cannot write workspace file: " + path);
    out << to_json_text();
    if (!out) throw PersistError("cannot write workspace file: " + path);
}

Workspace Workspace::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PersistError("cannot read workspace file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json_text(buffer.str());
}

}  // namespace cogweave
