#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cogweave/concept_tree.hpp"
#include "cogweave/ensemble.hpp"
#include "cogweave/network.hpp"
#include "cogweave/script_io.hpp"
#include "cogweave/type_registry.hpp"

namespace cogweave {

// Session state behind the command surface: both stores, built networks by
// script name, the ingestion log, and the registry snapshot. Networks are
// derived data and are rebuilt from their scripts on load.
class Workspace {
public:
    struct PartIngest {
        LinkKey key;
        MergeReport ensemble;
        MergeReport trees;
    };

    // Parses and applies every part or none. Auto keys continue the
    // session numbering; declared keys must be new to the session.
    std::vector<PartIngest> ingest(std::string_view ontology_text);

    // Builds (or rebuilds) the script's network and makes it the active one.
    const SymNetwork& add_script(const CplScript& script);

    std::string view_ensemble() const { return ensemble_.render_view(); }
    std::string view_trees() const { return trees_.render_view(); }

    const EnsembleStore& ensemble() const { return ensemble_; }
    const ConceptTreeStore& trees() const { return trees_; }
    const SymNetwork* network(std::string_view script_name) const;
    const SymNetwork* active_network() const;
    std::vector<std::string> network_names() const;
    const TypeRegistry& registry() const { return registry_; }
    const std::vector<LinkKey>& ingestion_log() const { return ingestion_log_; }

    // Versioned JSON, format "cogweave/1". Loading a foreign or corrupt
    // payload throws PersistError.
    std::string to_json_text() const;
    static Workspace from_json_text(const std::string& text);
    void save_file(const std::string& path) const;
    static Workspace load_file(const std::string& path);

private:
    EnsembleStore ensemble_;
    ConceptTreeStore trees_;
    std::map<std::string, CplScript> scripts_;
    std::map<std::string, SymNetwork> networks_;
    std::string active_script_;
    std::vector<LinkKey> ingestion_log_;
    TypeRegistry registry_;

    void rebuild_registry();
};

}  // namespace cogweave
