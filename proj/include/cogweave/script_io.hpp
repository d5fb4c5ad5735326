#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cogweave/link_key.hpp"

namespace cogweave {

struct ConceptSymbol {
    std::string symbol;  // short token, unique per script
    std::string label;   // human-readable name, unique per script

    friend bool operator==(const ConceptSymbol&, const ConceptSymbol&) = default;
};

// One process step: an effector obtained from a source acts on an object.
struct Triple {
    std::string object;
    std::string effector;
    std::string source;
    std::size_t ordinal = 0;  // 1-based position in the script

    friend bool operator==(const Triple&, const Triple&) = default;
};

struct CplScript {
    std::string name;
    std::vector<ConceptSymbol> symbols;
    std::vector<Triple> triples;

    const ConceptSymbol* find_symbol(std::string_view symbol) const;
    const ConceptSymbol* find_label(std::string_view label) const;

    friend bool operator==(const CplScript&, const CplScript&) = default;
};

struct PartNode {
    std::string label;
    std::vector<PartNode> children;

    friend bool operator==(const PartNode&, const PartNode&) = default;
};

// One presented slice of an ontology, carrying the event's link key.
struct OntologyPart {
    LinkKey link_key;
    PartNode root;
};

// Both parsers reject malformed input with ParseError; a document is never
// half-applied.
CplScript parse_cpl(std::string_view text);
std::string serialize_cpl(const CplScript& script);

// Parts with omitted keys are named Link_<n>, counting from
// first_auto_number so a session can keep numbering across files.
std::vector<OntologyPart> parse_ontology_parts(std::string_view text, int first_auto_number = 1);

}  // namespace cogweave
