#include "cogweave/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cogweave/error.hpp"
#include "cogweave/export.hpp"
#include "cogweave/network.hpp"
#include "cogweave/paths.hpp"
#include "cogweave/script_io.hpp"
#include "cogweave/workspace.hpp"

namespace cogweave::cli {

namespace {

std::optional<std::string> read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Workspace load_or_empty(const std::string& path) {
    if (!std::filesystem::exists(path)) return Workspace{};
    return Workspace::load_file(path);
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

std::vector<std::string> sorted_ids(const std::vector<const NetworkNode*>& nodes) {
    std::vector<std::string> ids;
    for (const auto* n : nodes) ids.push_back(n->id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

void print_id_count(std::ostream& out, const char* heading,
                    const std::vector<std::string>& ids) {
    out << heading << ": " << ids.size();
    if (!ids.empty()) out << " (" << join(ids, ", ") << ")";
    out << "\n";
}

int cmd_build(const std::string& path, const std::string& workspace_path, std::ostream& out) {
    auto text = read_text_file(path);
    if (!text) throw ParseError(1, "cannot read file '" + path + "'");
    CplScript script = parse_cpl(*text);
    Workspace ws = load_or_empty(workspace_path);
    const SymNetwork& net = ws.add_script(script);

    out << "name: " << net.script_ref << "\n";
    out << "triples: " << net.layer_nodes(2).size() << "\n";
    out << "role nodes: " << net.layer_nodes(0).size() << "\n";
    print_id_count(out, "shared concepts", sorted_ids(net.layer_nodes(1)));
    print_id_count(out, "upper shared", sorted_ids(net.layer_nodes(3)));
    print_id_count(out, "dead ends", sorted_ids(dead_ends(net)));
    auto issues = validate(net);
    if (issues.empty()) {
        out << "validation: ok\n";
    } else {
        out << "validation: " << issues.size() << " issues\n";
        for (const auto& issue : issues) out << "  - " << issue << "\n";
    }
    ws.save_file(workspace_path);
    return issues.empty() ? 0 : 1;
}

int cmd_cycles(const std::string& path, const std::string& concept_label,
               std::size_t max_cycle_len, std::ostream& out) {
    auto text = read_text_file(path);
    if (!text) throw ParseError(1, "cannot read file '" + path + "'");
    SymNetwork net = build_network(parse_cpl(*text));
    if (!concept_label.empty()) {
        auto cycles = shortest_cycles(net, concept_label);
        const NetworkNode* node = node_for_concept(net, concept_label);
        for (const auto& cycle : cycles)
            out << join(display_order(cycle, node->id), " ") << "\n";
    } else {
        for (const auto& cycle : enumerate_cycles(net, max_cycle_len))
            out << join(cycle.node_ids, " ") << "\n";
    }
    return 0;
}

int cmd_schedule(const std::string& path, std::ostream& out) {
    auto text = read_text_file(path);
    if (!text) throw ParseError(1, "cannot read file '" + path + "'");
    CplScript script = parse_cpl(*text);
    SymNetwork net = build_network(script);
    Schedule schedule = derive_schedule(net, script);
    for (const auto& step : schedule.steps) {
        std::vector<std::string> labels;
        for (const auto& c : step.realized) labels.push_back(c.label);
        out << step.index << ". " << join(labels, " - ") << ".\n";
    }
    out << "All concepts realized.\n";
    return 0;
}

int cmd_ingest(const std::string& path, const std::string& workspace_path, std::ostream& out) {
    auto text = read_text_file(path);
    if (!text) throw ParseError(1, "cannot read file '" + path + "'");
    Workspace ws = load_or_empty(workspace_path);
    auto results = ws.ingest(*text);
    for (const auto& r : results) {
        out << r.key.key << ": ensemble " << to_string(r.ensemble.kind) << " (+"
            << r.ensemble.nodes_created << " nodes), trees " << to_string(r.trees.kind)
            << " (+" << r.trees.nodes_created << " nodes)\n";
    }
    ws.save_file(workspace_path);
    return 0;
}

int cmd_view(const std::string& level, const std::string& workspace_path, std::ostream& out) {
    Workspace ws = load_or_empty(workspace_path);
    out << (level == "ensemble" ? ws.view_ensemble() : ws.view_trees());
    return 0;
}

int cmd_activate(const std::string& label, const std::string& workspace_path,
                 std::ostream& out) {
    Workspace ws = load_or_empty(workspace_path);
    ActivationResult res = ws.registry().activate(label);
    if (!res.known) {
        out << "concept: " << res.concept_label << " (unknown)\n";
        return 0;
    }
    out << "concept: " << res.concept_label << "\n";
    out << "ensemble: " << res.ensemble_instances.size()
        << (res.ensemble_instances.size() == 1 ? " instance" : " instances") << "\n";
    for (const auto& p : res.ensemble_instances) out << "  " << p << "\n";
    out << "trees: " << res.tree_instances.size()
        << (res.tree_instances.size() == 1 ? " instance" : " instances") << "\n";
    for (const auto& p : res.tree_instances) out << "  " << p << "\n";
    out << "network: " << (res.network_instance.empty() ? "none" : res.network_instance)
        << "\n";
    return 0;
}

int cmd_query(const std::vector<std::string>& concepts, const std::string& workspace_path,
              std::ostream& out) {
    Workspace ws = load_or_empty(workspace_path);
    HornQueryResult res = ws.registry().query_horn(ws.active_network(), concepts);
    out << "query: " << join(res.requested, ", ") << "\n";
    for (const auto& cycle : res.covering_cycles)
        out << "cycle: " << join(cycle.node_ids, " ") << "\n";
    for (const auto& b : res.instance_bindings) {
        out << b.concept_label << ": network "
            << (b.network_instance.empty() ? "none" : b.network_instance) << ", ensemble "
            << b.ensemble_instances.size() << ", trees " << b.tree_instances.size() << "\n";
    }
    out << "complete: " << (res.complete ? "yes" : "no") << "\n";
    return 0;
}

int cmd_export(const std::string& target, const std::string& format,
               const std::string& workspace_path, std::ostream& out, std::ostream& err) {
    Workspace ws = load_or_empty(workspace_path);
    const SymNetwork* net = ws.network(target);
    SymNetwork ephemeral;
    if (!net) {
        if (auto text = read_text_file(target)) {
            ephemeral = build_network(parse_cpl(*text));
            net = &ephemeral;
        }
    }
    if (!net) {
        err << "error: unknown export target '" << target << "'\n";
        return 4;
    }
    out << (format == "json" ? export_json(*net) : export_dot(*net));
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"three-level cognitive framework toolkit", "cogweave"};
    app.require_subcommand(1);

    std::string workspace_path = "workspace.json";
    std::size_t max_cycle_len = 8;
    std::string format = "dot";
    app.add_option("--workspace", workspace_path, "workspace state file")
        ->capture_default_str();
    app.add_option("--max-cycle-len", max_cycle_len, "cycle search bound")
        ->capture_default_str();
    app.add_option("--format", format, "export format")
        ->check(CLI::IsMember({"dot", "json"}))
        ->capture_default_str();

    std::string build_path;
    auto* build = app.add_subcommand("build", "parse a script and build its network");
    build->add_option("file", build_path, "CPL script file")->required();
    build->fallthrough();

    std::string cycles_path, cycles_concept;
    auto* cycles = app.add_subcommand("cycles", "list cycles of a script's network");
    cycles->add_option("file", cycles_path, "CPL script file")->required();
    cycles->add_option("--concept", cycles_concept, "restrict to shortest cycles through a concept");
    cycles->fallthrough();

    std::string schedule_path;
    auto* schedule = app.add_subcommand("schedule", "derive the acquisition schedule");
    schedule->add_option("file", schedule_path, "CPL script file")->required();
    schedule->fallthrough();

    std::string ingest_path;
    auto* ingest = app.add_subcommand("ingest", "ingest ontology parts into the workspace");
    ingest->add_option("file", ingest_path, "ontology part file")->required();
    ingest->fallthrough();

    std::string view_level;
    auto* view = app.add_subcommand("view", "print a store view");
    view->add_option("level", view_level, "ensemble or trees")
        ->required()
        ->check(CLI::IsMember({"ensemble", "trees"}));
    view->fallthrough();

    std::string activate_label;
    auto* activate = app.add_subcommand("activate", "fan a concept type out across levels");
    activate->add_option("concept", activate_label, "concept label or symbol")->required();
    activate->fallthrough();

    std::vector<std::string> query_concepts;
    auto* query = app.add_subcommand("query", "cover a concept list with cycles");
    query->add_option("concepts", query_concepts, "concept labels")->required()->expected(-1);
    query->fallthrough();

    std::string export_target;
    auto* export_cmd = app.add_subcommand("export", "render a network as DOT or JSON");
    export_cmd->add_option("target", export_target, "script name or CPL file")->required();
    export_cmd->fallthrough();

    std::string save_path;
    auto* save = app.add_subcommand("save", "copy the workspace to a file");
    save->add_option("file", save_path, "destination file")->required();
    save->fallthrough();

    std::string load_path;
    auto* load = app.add_subcommand("load", "replace the workspace from a file");
    load->add_option("file", load_path, "source file")->required();
    load->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("cogweave");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (build->parsed()) return cmd_build(build_path, workspace_path, out);
        if (cycles->parsed()) return cmd_cycles(cycles_path, cycles_concept, max_cycle_len, out);
        if (schedule->parsed()) return cmd_schedule(schedule_path, out);
        if (ingest->parsed()) return cmd_ingest(ingest_path, workspace_path, out);
        if (view->parsed()) return cmd_view(view_level, workspace_path, out);
        if (activate->parsed()) return cmd_activate(activate_label, workspace_path, out);
        if (query->parsed()) return cmd_query(query_concepts, workspace_path, out);
        if (export_cmd->parsed())
            return cmd_export(export_target, format, workspace_path, out, err);
        if (save->parsed()) {
            load_or_empty(workspace_path).save_file(save_path);
            return 0;
        }
        if (load->parsed()) {
            Workspace::load_file(load_path).save_file(workspace_path);
            return 0;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const PersistError& e) {
        err << "error: " << e.what() << "\n";
        return 5;
    }
    return 0;
}

}  // namespace cogweave::cli
