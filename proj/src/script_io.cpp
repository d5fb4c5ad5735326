#include "cogweave/script_io.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "cogweave/error.hpp"

namespace cogweave {

const ConceptSymbol* CplScript::find_symbol(std::string_view symbol) const {
    for (const auto& s : symbols)
        if (s.symbol == symbol) return &s;
    return nullptr;
}

const ConceptSymbol* CplScript::find_label(std::string_view label) const {
    for (const auto& s : symbols)
        if (s.label == label) return &s;
    return nullptr;
}

namespace {

struct Line {
    std::size_t number = 0;
    std::string text;  // comment-stripped, right-trimmed, leading spaces kept
};

std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw =
            nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        while (!raw.empty() && (raw.back() == ' ' || raw.back() == '\t' || raw.back() == '\r'))
            raw.remove_suffix(1);
        if (raw.find_first_not_of(" \t") != std::string_view::npos)
            lines.push_back({number, std::string(raw)});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return lines;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
        if (j > i) tokens.push_back(std::string(text.substr(i, j - i)));
        i = j;
    }
    return tokens;
}

std::string join(const std::vector<std::string>& tokens, std::size_t from) {
    std::string out;
    for (std::size_t i = from; i < tokens.size(); ++i) {
        if (i > from) out += ' ';
        out += tokens[i];
    }
    return out;
}

}  // namespace

CplScript parse_cpl(std::string_view text) {
    auto lines = significant_lines(text);
    std::size_t i = 0;
    auto line_number = [&](std::size_t fallback) {
        return i < lines.size() ? lines[i].number : fallback;
    };

    if (i >= lines.size() || tokenize(lines[i].text) != std::vector<std::string>{"cpl", "v1"})
        throw ParseError(line_number(1), "expected header 'cpl v1'");
    ++i;

    std::size_t end_line = lines.back().number + 1;
    if (i >= lines.size()) throw ParseError(end_line, "expected 'name <identifier>'");
    auto name_tokens = tokenize(lines[i].text);
    if (name_tokens.size() != 2 || name_tokens[0] != "name")
        throw ParseError(lines[i].number, "expected 'name <identifier>'");

    CplScript script;
    script.name = name_tokens[1];
    ++i;

    bool steps_started = false;
    for (; i < lines.size(); ++i) {
        std::size_t ln = lines[i].number;
        auto tokens = tokenize(lines[i].text);
        if (tokens[0] == "symbol") {
            if (steps_started) throw ParseError(ln, "symbol declared after steps");
            if (tokens.size() < 3) throw ParseError(ln, "symbol needs a token and a label");
            ConceptSymbol sym{tokens[1], join(tokens, 2)};
            if (script.find_symbol(sym.symbol))
                throw ParseError(ln, "duplicate symbol '" + sym.symbol + "'");
            if (script.find_label(sym.label))
                throw ParseError(ln, "duplicate label '" + sym.label + "'");
            script.symbols.push_back(std::move(sym));
        } else if (tokens[0] == "step") {
            steps_started = true;
            if (tokens.size() != 4) throw ParseError(ln, "step needs three symbols");
            for (std::size_t k = 1; k <= 3; ++k)
                if (!script.find_symbol(tokens[k]))
                    throw ParseError(ln, "unknown symbol '" + tokens[k] + "' in step");
            if (tokens[1] == tokens[2] || tokens[1] == tokens[3] || tokens[2] == tokens[3]) {
                const std::string& repeated = tokens[1] == tokens[2] || tokens[1] == tokens[3]
                                                  ? tokens[1]
                                                  : tokens[2];
                throw ParseError(ln, "symbol '" + repeated + "' repeated in step");
            }
            for (const auto& t : script.triples)
                if (t.object == tokens[1] && t.effector == tokens[2] && t.source == tokens[3])
                    throw ParseError(
                        ln, "duplicate step " + tokens[1] + " " + tokens[2] + " " + tokens[3]);
            script.triples.push_back(
                {tokens[1], tokens[2], tokens[3], script.triples.size() + 1});
        } else {
            throw ParseError(ln, "unknown directive '" + tokens[0] + "'");
        }
    }
    return script;
}

std::string serialize_cpl(const CplScript& script) {
    std::string out = "cpl v1\n";
    out += "name " + script.name + "\n";
    for (const auto& s : script.symbols) out += "symbol " + s.symbol + " " + s.label + "\n";
    for (const auto& t : script.triples)
        out += "step " + t.object + " " + t.effector + " " + t.source + "\n";
    return out;
}

namespace {

struct OpenPart {
    OntologyPart part;
    bool has_root = false;
    std::size_t header_line = 0;
    std::vector<PartNode*> stack;  // stack[d] is the last node at depth d
};

}  // namespace

std::vector<OntologyPart> parse_ontology_parts(std::string_view text, int first_auto_number) {
    auto lines = significant_lines(text);
    if (lines.empty() || tokenize(lines[0].text) != std::vector<std::string>{"ontology", "v1"})
        throw ParseError(lines.empty() ? 1 : lines[0].number, "expected header 'ontology v1'");

    std::vector<OntologyPart> parts;
    std::optional<OpenPart> open;
    std::set<std::string> seen_keys;
    int next_number = first_auto_number;

    auto close = [&] {
        if (!open) return;
        if (!open->has_root) throw ParseError(open->header_line, "empty part");
        parts.push_back(std::move(open->part));
        open.reset();
    };

    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::size_t ln = lines[i].number;
        const std::string& raw = lines[i].text;
        std::size_t indent = 0;
        while (indent < raw.size() && raw[indent] == ' ') ++indent;
        if (indent < raw.size() && raw[indent] == '\t')
            throw ParseError(ln, "tab in indentation");
        std::string content = raw.substr(indent);

        auto tokens = tokenize(content);
        if (indent == 0 && tokens[0] == "part") {
            close();
            if (tokens.size() > 2) throw ParseError(ln, "part takes at most one key");
            std::string key =
                tokens.size() == 2 ? tokens[1] : "Link_" + std::to_string(next_number);
            if (!seen_keys.insert(key).second)
                throw ParseError(ln, "duplicate link key '" + key + "'");
            open = OpenPart{{LinkKey{key, next_number}, {}}, false, ln, {}};
            ++next_number;
            continue;
        }

        if (!open) throw ParseError(ln, "content before first part");
        if (indent % 2 != 0) throw ParseError(ln, "indentation must be two spaces per level");
        std::size_t level = indent / 2;
        if (level == 0) {
            if (open->has_root) throw ParseError(ln, "part has more than one root");
            open->part.root = PartNode{content, {}};
            open->has_root = true;
            open->stack = {&open->part.root};
        } else {
            if (!open->has_root || level > open->stack.size())
                throw ParseError(ln, "skipped indentation level");
            open->stack.resize(level);
            PartNode* parent = open->stack[level - 1];
            parent->children.push_back(PartNode{content, {}});
            open->stack.push_back(&parent->children.back());
        }
    }
    close();
    return parts;
}

}  // namespace cogweave
