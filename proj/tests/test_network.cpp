#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "cogweave/error.hpp"
#include "cogweave/network.hpp"

#include "support.hpp"

using namespace cogweave;

namespace {

CplScript egg_script() {
    return parse_cpl(support::read_file(support::data_file("cook_an_egg.cpl")));
}

std::set<std::string> layer_ids(const SymNetwork& net, int layer) {
    std::set<std::string> ids;
    for (const auto* n : net.layer_nodes(layer)) ids.insert(n->id);
    return ids;
}

}  // namespace

TEST_CASE("egg network lands every concept on its layer") {
    SymNetwork net = build_network(egg_script());
    CHECK(net.script_ref == "cook-an-egg");
    CHECK(layer_ids(net, 0) == std::set<std::string>{"objects", "effectors", "sources"});
    CHECK(layer_ids(net, 1) == std::set<std::string>{"B", "H", "P"});
    CHECK(layer_ids(net, 2) ==
          std::set<std::string>{"PDK", "PWT", "HBC", "EWP", "PHB", "EHP", "BHP"});
    CHECK(layer_ids(net, 3) == std::set<std::string>{"E", "W"});
    CHECK(validate(net).empty());
}

TEST_CASE("role nodes carry one occurrence per step in step order") {
    SymNetwork net = build_network(egg_script());
    const NetworkNode* objects = net.node("objects");
    REQUIRE(objects);
    CHECK(objects->role == Role::Objects);
    std::string symbols;
    for (const auto& c : objects->concepts) symbols += c.symbol;
    CHECK(symbols == "PPHEPEB");
    const NetworkNode* sources = net.node("sources");
    symbols.clear();
    for (const auto& c : sources->concepts) symbols += c.symbol;
    CHECK(symbols == "KTCPBPP");
}

TEST_CASE("triple nodes hold object, effector, source in order") {
    SymNetwork net = build_network(egg_script());
    const NetworkNode* pdk = net.node("PDK");
    REQUIRE(pdk);
    CHECK(pdk->kind == NodeKind::TripleNode);
    REQUIRE(pdk->concepts.size() == 3);
    CHECK(pdk->concepts[0].label == "Pot");
    CHECK(pdk->concepts[1].label == "Cupboard");
    CHECK(pdk->concepts[2].label == "Kitchen");
}

TEST_CASE("edges are normalized, sorted, and unique") {
    SymNetwork net = build_network(egg_script());
    CHECK(std::is_sorted(net.edges.begin(), net.edges.end()));
    CHECK(std::adjacent_find(net.edges.begin(), net.edges.end()) == net.edges.end());
    for (const auto& [a, b] : net.edges) CHECK(a < b);
    auto has_edge = [&](const std::string& a, const std::string& b) {
        auto e = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        return std::binary_search(net.edges.begin(), net.edges.end(), e);
    };
    CHECK(has_edge("P", "PDK"));
    CHECK(has_edge("W", "PWT"));
    CHECK(has_edge("W", "EWP"));
    CHECK(has_edge("P", "objects"));
    CHECK(has_edge("P", "sources"));
    CHECK_FALSE(has_edge("P", "effectors"));
    CHECK_FALSE(has_edge("PDK", "objects"));
}

TEST_CASE("car and holiday scripts build clean with the hand-derived layer sets") {
    SymNetwork car =
        build_network(parse_cpl(support::read_file(support::data_file("drive_a_car.cpl"))));
    CHECK(layer_ids(car, 1) == std::set<std::string>{"C", "E", "P", "R"});
    CHECK(layer_ids(car, 2).size() == 8);
    CHECK(layer_ids(car, 3) == std::set<std::string>{"F", "M", "W"});
    CHECK(validate(car).empty());

    SymNetwork holiday =
        build_network(parse_cpl(support::read_file(support::data_file("book_a_holiday.cpl"))));
    CHECK(layer_ids(holiday, 1) == std::set<std::string>{"H", "I", "W"});
    CHECK(layer_ids(holiday, 2).size() == 5);
    CHECK(layer_ids(holiday, 3) == std::set<std::string>{"D"});
    CHECK(validate(holiday).empty());
}

TEST_CASE("a triple with no shared concept falls back to its role nodes") {
    CplScript s = parse_cpl(
        "cpl v1\nname single\nsymbol A Alpha\nsymbol B Bravo\nsymbol C Charlie\nstep A B C\n");
    SymNetwork net = build_network(s);
    CHECK(layer_ids(net, 1).empty());
    CHECK(layer_ids(net, 3).empty());
    CHECK(net.edges ==
          std::vector<std::pair<std::string, std::string>>{
              {"ABC", "effectors"}, {"ABC", "objects"}, {"ABC", "sources"}});
    CHECK(validate(net).empty());
}

TEST_CASE("an empty script cannot build") {
    CplScript s = parse_cpl("cpl v1\nname bare\nsymbol A Alpha\n");
    CHECK_THROWS_WITH_AS(build_network(s), "script has no steps", DomainError);
}

TEST_CASE("node_for_concept answers to symbol or label, housed concepts only") {
    SymNetwork net = build_network(egg_script());
    const NetworkNode* by_symbol = node_for_concept(net, "W");
    const NetworkNode* by_label = node_for_concept(net, "Water");
    REQUIRE(by_symbol);
    CHECK(by_symbol == by_label);
    CHECK(by_symbol->layer == 3);
    CHECK(node_for_concept(net, "Kitchen") == nullptr);
    CHECK(node_for_concept(net, "PDK") == nullptr);
}

TEST_CASE("validate pinpoints hand-made corruption") {
    SymNetwork net = build_network(egg_script());

    SUBCASE("clean network has no diagnostics") { CHECK(validate(net).empty()); }

    SUBCASE("concept housed twice") {
        net.nodes.push_back(
            {"P_upper", NodeKind::UpperShared, 3, {*egg_script().find_symbol("P")}, {}});
        auto issues = validate(net);
        REQUIRE(issues.size() == 1);
        CHECK(issues[0] == "concept P is housed in both concept layers");
    }

    SUBCASE("duplicate node id") {
        net.nodes.push_back(net.nodes.back());
        auto issues = validate(net);
        CHECK(std::find(issues.begin(), issues.end(), "duplicate node id " + net.nodes.back().id) !=
              issues.end());
    }

    SUBCASE("kind and layer must agree") {
        net.nodes.push_back({"X", NodeKind::SharedConcept, 3,
                             {*egg_script().find_symbol("K")}, {}});
        auto issues = validate(net);
        CHECK(std::find(issues.begin(), issues.end(), "node X kind does not match its layer") !=
              issues.end());
    }

    SUBCASE("layer out of range") {
        net.nodes.push_back({"X", NodeKind::SharedConcept, 4,
                             {*egg_script().find_symbol("K")}, {}});
        auto issues = validate(net);
        CHECK(std::find(issues.begin(), issues.end(), "node X sits outside the four layers") !=
              issues.end());
    }

    SUBCASE("missing role node") {
        std::erase_if(net.nodes, [](const NetworkNode& n) { return n.id == "sources"; });
        auto issues = validate(net);
        CHECK(std::find(issues.begin(), issues.end(), "expected exactly 3 role nodes, found 2") !=
              issues.end());
    }

    SUBCASE("edge to a missing node") {
        net.edges.insert(net.edges.begin(), {"B", "ZZZ"});
        std::sort(net.edges.begin(), net.edges.end());
        auto issues = validate(net);
        CHECK(std::find(issues.begin(), issues.end(), "edge B-ZZZ references a missing node") !=
              issues.end());
    }

    SUBCASE("edge joining non-adjacent layers") {
        net.edges.insert(net.edges.begin(), {"E", "P"});
        std::sort(net.edges.begin(), net.edges.end());
        auto issues = validate(net);
        CHECK(std::find(issues.begin(), issues.end(), "edge E-P joins non-adjacent layers") !=
              issues.end());
    }

    SUBCASE("missing concept edge") {
        std::erase_if(net.edges, [](const std::pair<std::string, std::string>& e) {
            return e == std::make_pair(std::string("B"), std::string("HBC"));
        });
        auto issues = validate(net);
        REQUIRE(issues.size() == 1);
        CHECK(issues[0] == "missing edge between HBC and B");
    }

    SUBCASE("losing a triple's only concept edge isolates it") {
        std::erase_if(net.edges, [](const std::pair<std::string, std::string>& e) {
            return e == std::make_pair(std::string("P"), std::string("PDK"));
        });
        auto issues = validate(net);
        REQUIRE(issues.size() == 1);
        CHECK(issues[0] == "triple node PDK is isolated");
    }

    SUBCASE("role fallback cannot coexist with concept edges") {
        net.edges.insert(net.edges.begin(), {"PDK", "objects"});
        std::sort(net.edges.begin(), net.edges.end());
        auto issues = validate(net);
        REQUIRE(issues.size() == 1);
        CHECK(issues[0] == "triple node PDK mixes shared-concept and role edges");
    }
}

TEST_CASE("validate flags an isolated triple exactly once") {
    CplScript s = parse_cpl(
        "cpl v1\nname single\nsymbol A Alpha\nsymbol B Bravo\nsymbol C Charlie\nstep A B C\n");
    SymNetwork net = build_network(s);
    net.edges.clear();
    auto issues = validate(net);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0] == "triple node ABC is isolated");
}

TEST_CASE("validate flags a shared concept with too little role spread") {
    SymNetwork net = build_network(egg_script());
    for (auto& n : net.nodes) {
        if (n.layer != 0) continue;
        std::erase_if(n.concepts, [](const ConceptSymbol& c) { return c.symbol == "P"; });
    }
    auto issues = validate(net);
    CHECK(std::find(issues.begin(), issues.end(),
                    "shared concept P occurs in fewer than two role sets") != issues.end());
}

TEST_CASE("validate flags an upper concept present in only one step") {
    SymNetwork net = build_network(egg_script());
    std::erase_if(net.nodes, [](const NetworkNode& n) { return n.id == "EWP"; });
    std::erase_if(net.edges, [](const std::pair<std::string, std::string>& e) {
        return e.first == "EWP" || e.second == "EWP";
    });
    auto issues = validate(net);
    CHECK(std::find(issues.begin(), issues.end(),
                    "upper concept E occurs in fewer than two steps") != issues.end());
}

TEST_CASE("networks build deterministically") {
    SymNetwork a = build_network(egg_script());
    SymNetwork b = build_network(egg_script());
    CHECK(a == b);
}
