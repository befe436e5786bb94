#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "semid/report_io.hpp"

using namespace semid;

namespace {

const IdentStatus& status_of(const GraphReport& r, const std::string& name) {
    for (std::size_t k = 0; k < r.targets.size(); ++k)
        if (r.targets[k].name() == name) return r.statuses[k];
    throw std::runtime_error("no target named " + name);
}

/// Light DOT syntax check: header, balanced braces/brackets/quotes, one
/// statement per line ending in ';', edges written "a -> b".
bool valid_dot(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.find("digraph") != 0 || line.back() != '{')
        return false;
    std::vector<std::string> body;
    while (std::getline(in, line)) body.push_back(line);
    if (body.empty() || body.back() != "}") return false;
    body.pop_back();
    for (const auto& stmt : body) {
        if (stmt.empty()) continue;
        if (stmt.back() != ';') return false;
        int brackets = 0;
        int quotes = 0;
        for (char c : stmt) {
            if (c == '[') ++brackets;
            if (c == ']') --brackets;
            if (c == '"') ++quotes;
            if (brackets < 0) return false;
        }
        if (brackets != 0 || quotes % 2 != 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("graph report JSON round trip is exact") {
    GraphReport r = classify_graph(parse_graph("3; 1->2 2->3; 1<->2 2<->3"));
    nlohmann::json j = report_to_json(r);
    GraphReport back = report_from_json(j);

    CHECK(back.graph == r.graph);
    CHECK(back.verdict == r.verdict);
    CHECK(back.k == r.k);
    CHECK(back.vanishing_ideal == r.vanishing_ideal);
    CHECK(back.vanishing_ideal_resolved == r.vanishing_ideal_resolved);
    CHECK(back.targets == r.targets);
    REQUIRE(back.statuses.size() == r.statuses.size());
    for (std::size_t k = 0; k < r.statuses.size(); ++k) CHECK(back.statuses[k] == r.statuses[k]);
    CHECK(back.target_seconds == r.target_seconds);
    CHECK(back.total_seconds == r.total_seconds);

    // serialization is stable end to end
    CHECK(report_to_json(back) == j);
}

TEST_CASE("census record JSON round trip") {
    MixedGraph g = parse_graph("3; 1->2 2->3; 2<->3");
    CensusRecord rec{kSchemaVersion, encode_graph(g), classify_graph(g), run_criteria(g),
                     kEngineVersion};
    nlohmann::json j = record_to_json(rec);
    CensusRecord back = record_from_json(j);
    CHECK(record_to_json(back) == j);
    CHECK(back.id == rec.id);
    CHECK(back.criteria.bow_free == rec.criteria.bow_free);
    REQUIRE(back.criteria.single_door.size() == rec.criteria.single_door.size());
    for (std::size_t k = 0; k < rec.criteria.single_door.size(); ++k) {
        CHECK(back.criteria.single_door[k].first == rec.criteria.single_door[k].first);
        CHECK(back.criteria.single_door[k].second.satisfied ==
              rec.criteria.single_door[k].second.satisfied);
    }
}

TEST_CASE("unsupported schema versions are rejected") {
    GraphReport r = classify_graph(parse_graph("2; ;"));
    nlohmann::json j = report_to_json(r);
    j["schema_version"] = 99;
    CHECK_THROWS_AS(report_from_json(j), std::invalid_argument);
}

TEST_CASE("DOT output for the web example graph") {
    ClassifyOptions o;
    o.filter.total = false;
    o.filter.path = false;
    GraphReport r =
        classify_graph(parse_graph("4; 1->2 2->3 2->4 3->4; 1<->2 2<->4 3<->4"), o);
    std::string dot = report_to_dot(r);
    CHECK(valid_dot(dot));

    // identified: l23 plus w11, w24, w33
    CHECK(dot.find("2 -> 3 [label=\"(l23)\", color=green]") != std::string::npos);
    CHECK(dot.find("1 [label=\"X1 (w11)\", shape=circle, color=green]") != std::string::npos);
    CHECK(dot.find("2 -> 4 [dir=both, style=dashed, label=\"(w24)\", color=green]") !=
          std::string::npos);
    CHECK(dot.find("3 [label=\"X3 (w33)\", shape=circle, color=green]") != std::string::npos);
    // not identified: the bow edges render red with bracket decoration
    CHECK(dot.find("1 -> 2 [label=\"[l12]\", color=red]") != std::string::npos);
    CHECK(dot.find("2 [label=\"X2 [w22]\", shape=box, color=red]") != std::string::npos);
}

TEST_CASE("DOT output for the 2-identified graph colors lambdas blue") {
    ClassifyOptions o;
    o.filter.total = false;
    o.filter.path = false;
    o.budget = Budget{std::chrono::seconds(240), 2000000};
    GraphReport r =
        classify_graph(parse_graph("4; 1->2 2->3 3->4; 1<->2 1<->3 1<->4"), o);
    std::string dot = report_to_dot(r);
    CHECK(valid_dot(dot));
    CHECK(dot.find("1 -> 2 [label=\"((l12))\", color=blue]") != std::string::npos);
    CHECK(dot.find("2 -> 3 [label=\"((l23))\", color=blue]") != std::string::npos);
    CHECK(dot.find("3 -> 4 [label=\"((l34))\", color=blue]") != std::string::npos);
    CHECK(dot.find("1 [label=\"X1 (w11)\", shape=circle, color=green]") != std::string::npos);
}

TEST_CASE("DOT output for the empty graph is all green") {
    GraphReport r = classify_graph(parse_graph("2; ;"));
    std::string dot = report_to_dot(r);
    CHECK(valid_dot(dot));
    CHECK(dot.find("color=green") != std::string::npos);
    CHECK(dot.find("color=red") == std::string::npos);
}

TEST_CASE("unresolved targets render gray") {
    GraphReport r = classify_graph(parse_graph("2; 1->2;"));
    for (auto& s : r.statuses) s = Unresolved{"resource budget exhausted"};
    std::string dot = report_to_dot(r);
    CHECK(valid_dot(dot));
    CHECK(dot.find("color=gray") != std::string::npos);
}

TEST_CASE("text report shows formulas and quadratics") {
    GraphReport r = classify_graph(parse_graph("3; 1->2 2->3; 2<->3"));
    std::string text = report_to_text(r);
    CHECK(text.find("verdict: generically identifiable") != std::string::npos);
    CHECK(text.find("l23: generically identifiable, l23 = s13 / s12") != std::string::npos);
    CHECK(text.find("vanishing ideal: 0 (no constraints; full-dimensional image)") !=
          std::string::npos);

    GraphReport rb = classify_graph(parse_graph("3; 1->2 2->3; 1<->2 2<->3"));
    std::string tb = report_to_text(rb);
    // same polynomial as the displayed (s12*s23 - s13*s22)/s12, rendered in
    // descending grevlex term order
    CHECK(tb.find("w23: generically identifiable, w23 = (-s13*s22 + s12*s23) / s12") !=
          std::string::npos);
    CHECK(tb.find("l12: not generically identifiable") != std::string::npos);

    std::string crit = criteria_to_text(parse_graph("3; 1->2 2->3; 2<->3"),
                                        run_criteria(parse_graph("3; 1->2 2->3; 2<->3")));
    CHECK(crit.find("bow-free: no") != std::string::npos);
    CHECK(crit.find("2->3: no") != std::string::npos);
    CHECK(crit.find("2->3: yes  z=1") != std::string::npos);
}
