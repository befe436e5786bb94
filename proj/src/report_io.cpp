#include "semid/report_io.hpp"

#include <sstream>
#include <stdexcept>

namespace semid {

using nlohmann::json;

namespace {

std::string render_sigma(const Polynomial& p, int m) {
    return p.to_string(sigma_ring(m), TermOrder::grevlex(sigma_ring(m).nvars()));
}

std::string render_q_sigma(const Polynomial& p, int m) {
    return p.to_string(q_sigma_ring(m), q_sigma_order(m));
}

json target_to_json(const ParameterTarget& t, const IdentStatus& s, double seconds, int m) {
    json j;
    switch (t.kind) {
        case TargetKind::direct_effect: j["kind"] = "direct"; break;
        case TargetKind::omega_entry: j["kind"] = "omega"; break;
        case TargetKind::total_effect: j["kind"] = "total"; break;
        case TargetKind::path_effect: j["kind"] = "path"; break;
    }
    j["i"] = t.i;
    j["j"] = t.j;
    if (t.kind == TargetKind::path_effect) j["path"] = t.path.verts;
    j["name"] = t.name();
    j["seconds"] = seconds;

    if (const auto* gi = std::get_if<GenericallyIdentifiable>(&s)) {
        j["status"] = "generic";
        j["formula_num"] = render_sigma(gi->formula.num, m);
        j["formula_den"] = render_sigma(gi->formula.den, m);
    } else if (const auto* ai = std::get_if<AlgebraicallyDIdentifiable>(&s)) {
        j["status"] = "algebraic";
        j["d"] = ai->d;
        j["ident_poly"] = render_q_sigma(ai->ident_poly, m);
    } else if (std::holds_alternative<NotGenericallyIdentifiable>(s)) {
        j["status"] = "not_generic";
    } else if (const auto* u = std::get_if<Unresolved>(&s)) {
        j["status"] = "unresolved";
        j["reason"] = u->reason;
    } else {
        j["status"] = "trivial";
        j["value"] = std::get<TriviallyConstant>(s).value.get_str();
    }
    return j;
}

std::pair<ParameterTarget, IdentStatus> target_from_json(const json& j, const ParamRing& pr) {
    const int m = pr.graph.m;
    ParameterTarget t;
    std::string kind = j.at("kind");
    t.i = j.at("i");
    t.j = j.at("j");
    if (kind == "direct") {
        t.kind = TargetKind::direct_effect;
        t.poly = Polynomial::variable(pr.nvars(), pr.lambda_var(t.i, t.j));
    } else if (kind == "omega") {
        t.kind = TargetKind::omega_entry;
        t.poly = Polynomial::variable(pr.nvars(), pr.omega_var(t.i, t.j));
    } else if (kind == "total") {
        t.kind = TargetKind::total_effect;
        t.poly = total_effect_poly(pr, t.i, t.j);
    } else if (kind == "path") {
        t.kind = TargetKind::path_effect;
        t.path.verts = j.at("path").get<std::vector<int>>();
        t.poly = Polynomial::constant(pr.nvars(), Rat(1));
        for (auto [a, b] : t.path.edges())
            t.poly = t.poly * Polynomial::variable(pr.nvars(), pr.lambda_var(a, b));
    } else {
        throw std::invalid_argument("unknown target kind '" + kind + "'");
    }

    IdentStatus s;
    std::string status = j.at("status");
    if (status == "generic") {
        RationalFormula f;
        f.num = Polynomial::parse(sigma_ring(m), j.at("formula_num"));
        f.den = Polynomial::parse(sigma_ring(m), j.at("formula_den"));
        s = GenericallyIdentifiable{std::move(f)};
    } else if (status == "algebraic") {
        s = AlgebraicallyDIdentifiable{j.at("d"),
                                       Polynomial::parse(q_sigma_ring(m), j.at("ident_poly"))};
    } else if (status == "not_generic") {
        s = NotGenericallyIdentifiable{};
    } else if (status == "unresolved") {
        s = Unresolved{j.at("reason")};
    } else if (status == "trivial") {
        s = TriviallyConstant{rat(j.at("value").get<std::string>())};
    } else {
        throw std::invalid_argument("unknown status '" + status + "'");
    }
    return {std::move(t), std::move(s)};
}

json criterion_to_json(const CriterionResult& r) {
    json j;
    j["satisfied"] = r.satisfied;
    if (r.witness_set) j["witness_set"] = std::vector<int>(r.witness_set->begin(),
                                                           r.witness_set->end());
    if (r.witness_vertex) j["witness_vertex"] = *r.witness_vertex;
    return j;
}

CriterionResult criterion_from_json(const json& j, const std::string& name) {
    CriterionResult r;
    r.criterion = name;
    r.satisfied = j.at("satisfied");
    if (j.contains("witness_set")) {
        auto v = j.at("witness_set").get<std::vector<int>>();
        r.witness_set = std::set<int>(v.begin(), v.end());
    }
    if (j.contains("witness_vertex")) r.witness_vertex = j.at("witness_vertex").get<int>();
    return r;
}

const char* status_color(const IdentStatus* s) {
    if (!s) return "gray";
    if (is_generic(*s)) return "green";
    if (std::holds_alternative<AlgebraicallyDIdentifiable>(*s)) return "blue";
    if (is_unresolved(*s)) return "gray";
    return "red";
}

std::string decorate_label(const std::string& label, const char* color) {
    std::string c = color;
    if (c == "green") return "(" + label + ")";
    if (c == "blue") return "((" + label + "))";
    if (c == "red") return "[" + label + "]";
    return label;
}

const char* node_shape(const char* color) {
    std::string c = color;
    if (c == "green") return "circle";
    if (c == "blue") return "ellipse";
    if (c == "red") return "box";
    return "ellipse";
}

}  // namespace

json report_to_json(const GraphReport& report) {
    const int m = report.graph.m;
    json j;
    j["schema_version"] = kSchemaVersion;
    j["graph"] = format_graph(report.graph);
    j["m"] = m;
    j["verdict"] = verdict_string(report.verdict, report.k);
    if (report.verdict == GraphVerdict::algebraically_k_identified) j["k"] = report.k;
    j["vanishing_ideal_resolved"] = report.vanishing_ideal_resolved;
    json vi = json::array();
    for (const auto& p : report.vanishing_ideal) vi.push_back(render_sigma(p, m));
    j["vanishing_ideal"] = vi;
    j["total_seconds"] = report.total_seconds;
    json ts = json::array();
    for (std::size_t k = 0; k < report.targets.size(); ++k)
        ts.push_back(target_to_json(report.targets[k], report.statuses[k],
                                    report.target_seconds[k], m));
    j["targets"] = ts;
    return j;
}

GraphReport report_from_json(const json& j) {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
        throw std::invalid_argument("unsupported schema version");
    GraphReport r;
    r.graph = parse_graph(j.at("graph"));
    ParamRing pr = ParamRing::for_graph(r.graph);
    const int m = r.graph.m;

    std::string verdict = j.at("verdict");
    if (verdict == "generically identifiable") {
        r.verdict = GraphVerdict::generically_identifiable;
    } else if (verdict == "not generically identifiable") {
        r.verdict = GraphVerdict::not_generically_identifiable;
    } else if (verdict == "unresolved") {
        r.verdict = GraphVerdict::unresolved;
    } else {
        r.verdict = GraphVerdict::algebraically_k_identified;
        r.k = j.at("k");
    }
    r.vanishing_ideal_resolved = j.at("vanishing_ideal_resolved");
    for (const auto& s : j.at("vanishing_ideal"))
        r.vanishing_ideal.push_back(Polynomial::parse(sigma_ring(m), s));
    r.total_seconds = j.at("total_seconds");
    for (const auto& tj : j.at("targets")) {
        auto [t, s] = target_from_json(tj, pr);
        r.targets.push_back(std::move(t));
        r.statuses.push_back(std::move(s));
        r.target_seconds.push_back(tj.at("seconds"));
    }
    return r;
}

json record_to_json(const CensusRecord& record) {
    json j;
    j["schema_version"] = record.schema_version;
    j["engine_version"] = record.engine_version;
    j["graph_id"] = record.id.bits;
    j["m"] = record.id.m;
    j["report"] = report_to_json(record.report);
    json c;
    c["bow_free"] = record.criteria.bow_free;
    auto edge_list = [](const auto& entries) {
        json arr = json::array();
        for (const auto& [edge, res] : entries) {
            json e = criterion_to_json(res);
            e["edge"] = {edge.first, edge.second};
            arr.push_back(e);
        }
        return arr;
    };
    c["single_door"] = edge_list(record.criteria.single_door);
    c["instrumental"] = edge_list(record.criteria.instrumental);
    c["back_door"] = edge_list(record.criteria.back_door);
    j["criteria"] = c;
    return j;
}

CensusRecord record_from_json(const json& j) {
    CensusRecord r;
    r.schema_version = j.at("schema_version");
    if (r.schema_version != kSchemaVersion)
        throw std::invalid_argument("unsupported store schema version");
    r.engine_version = j.at("engine_version");
    r.id.bits = j.at("graph_id");
    r.id.m = j.at("m");
    r.report = report_from_json(j.at("report"));
    const json& c = j.at("criteria");
    r.criteria.bow_free = c.at("bow_free");
    auto read_edges = [&](const json& arr, const std::string& name) {
        std::vector<std::pair<std::pair<int, int>, CriterionResult>> out;
        for (const auto& e : arr) {
            std::pair<int, int> edge{e.at("edge")[0], e.at("edge")[1]};
            out.emplace_back(edge, criterion_from_json(e, name));
        }
        return out;
    };
    r.criteria.single_door = read_edges(c.at("single_door"), "single-door");
    r.criteria.instrumental = read_edges(c.at("instrumental"), "instrumental-variable");
    r.criteria.back_door = read_edges(c.at("back_door"), "back-door");
    return r;
}

json summary_to_json(const CensusSummary& s) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["m"] = s.m;
    j["total"] = s.total;
    j["generically_identifiable"] = s.n_generic;
    json kmap = json::object();
    for (const auto& [k, n] : s.n_k_identified) kmap[std::to_string(k)] = n;
    j["algebraically_k_identified"] = kmap;
    j["not_generically_identifiable"] = s.n_not_generic;
    j["unresolved"] = s.n_unresolved;
    j["bow_free"] = s.n_bow_free;
    j["bow_free_all_single_door"] = s.n_bow_free_all_single_door;
    j["generic_not_bow_free_ids"] = s.generic_not_bow_free_ids;
    j["not_generic_with_identified_direct"] = s.n_not_generic_with_identified_direct;
    json ud = json::array();
    for (const auto& [id, edge] : s.uncertified_direct)
        ud.push_back({{"graph_id", id}, {"edge", {edge.first, edge.second}}});
    j["uncertified_direct"] = ud;
    json at = json::array();
    for (const auto& [id, pair] : s.algebra_only_total)
        at.push_back({{"graph_id", id}, {"pair", {pair.first, pair.second}}});
    j["algebra_only_total"] = at;
    j["unresolved_ids"] = s.unresolved_ids;
    return j;
}

std::string report_to_text(const GraphReport& report) {
    const int m = report.graph.m;
    std::ostringstream out;
    out << "graph: " << format_graph(report.graph) << "\n";
    out << "verdict: " << verdict_string(report.verdict, report.k) << "\n";
    if (!report.vanishing_ideal_resolved) {
        out << "vanishing ideal: unresolved\n";
    } else if (report.vanishing_ideal.empty()) {
        out << "vanishing ideal: 0 (no constraints; full-dimensional image)\n";
    } else {
        out << "vanishing ideal:\n";
        for (const auto& p : report.vanishing_ideal)
            out << "  " << render_sigma(p, m) << " = 0\n";
    }
    out << "targets:\n";
    for (std::size_t k = 0; k < report.targets.size(); ++k) {
        const auto& t = report.targets[k];
        const auto& s = report.statuses[k];
        out << "  " << t.name() << ": " << status_brief(s);
        if (const auto* gi = std::get_if<GenericallyIdentifiable>(&s)) {
            auto wrap = [](const std::string& side) {
                bool atomic = side.find(' ') == std::string::npos &&
                              side.find('*') == std::string::npos;
                return atomic ? side : "(" + side + ")";
            };
            out << ", " << t.name() << " = " << wrap(render_sigma(gi->formula.num, m));
            std::string den = render_sigma(gi->formula.den, m);
            if (den != "1") out << " / " << wrap(den);
        } else if (const auto* ai = std::get_if<AlgebraicallyDIdentifiable>(&s)) {
            out << ", 0 = " << render_q_sigma(ai->ident_poly, m) << " at q = " << t.name();
        }
        out << "\n";
    }
    return out.str();
}

std::string criteria_to_text(const MixedGraph& g, const CriteriaReport& criteria) {
    std::ostringstream out;
    out << "graph: " << format_graph(g) << "\n";
    out << "bow-free: " << (criteria.bow_free ? "yes" : "no") << "\n";
    auto witness_set = [](const CriterionResult& r) {
        std::string s = "{";
        bool first = true;
        for (int v : *r.witness_set) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    };
    out << "single-door:\n";
    for (const auto& [edge, r] : criteria.single_door) {
        out << "  " << edge.first << "->" << edge.second << ": "
            << (r.satisfied ? "yes  Z=" + witness_set(r) : "no") << "\n";
    }
    out << "instrumental-variable:\n";
    for (const auto& [edge, r] : criteria.instrumental) {
        out << "  " << edge.first << "->" << edge.second << ": "
            << (r.satisfied ? "yes  z=" + std::to_string(*r.witness_vertex) : "no") << "\n";
    }
    out << "back-door:\n";
    for (const auto& [pair, r] : criteria.back_door) {
        out << "  (" << pair.first << "," << pair.second << "): "
            << (r.satisfied ? "yes  Z=" + witness_set(r) : "no") << "\n";
    }
    return out.str();
}

std::string summary_to_text(const CensusSummary& s) {
    std::ostringstream out;
    out << "census on " << s.m << " vertices: " << s.total << " graphs\n";
    out << "  generically identifiable: " << s.n_generic << "\n";
    for (const auto& [k, n] : s.n_k_identified)
        out << "  algebraically " << k << "-identified: " << n << "\n";
    out << "  not generically identifiable: " << s.n_not_generic << "\n";
    out << "  unresolved: " << s.n_unresolved << "\n";
    out << "  bow-free: " << s.n_bow_free << " (every direct effect single-door certified in "
        << s.n_bow_free_all_single_door << ")\n";
    out << "  generically identifiable but not bow-free: "
        << s.generic_not_bow_free_ids.size() << "\n";
    out << "  not identifiable with >=1 identified direct effect: "
        << s.n_not_generic_with_identified_direct << "\n";
    out << "  d=1 direct effects missed by single-door and IV: " << s.uncertified_direct.size()
        << "\n";
    out << "  d=1 total effects missed by back-door: " << s.algebra_only_total.size() << "\n";
    if (!s.unresolved_ids.empty()) {
        out << "  unresolved graph ids:";
        for (auto id : s.unresolved_ids) out << " " << id;
        out << "\n";
    }
    return out.str();
}

std::string report_to_dot(const GraphReport& report) {
    const MixedGraph& g = report.graph;
    auto find_status = [&](TargetKind kind, int i, int j) -> const IdentStatus* {
        for (std::size_t k = 0; k < report.targets.size(); ++k)
            if (report.targets[k].kind == kind && report.targets[k].i == i &&
                report.targets[k].j == j)
                return &report.statuses[k];
        return nullptr;
    };

    std::ostringstream out;
    out << "digraph sem {\n";
    out << "  rankdir=LR;\n";
    for (int v = 1; v <= g.m; ++v) {
        const IdentStatus* s = find_status(TargetKind::omega_entry, v, v);
        const char* color = status_color(s);
        std::string wname = "w" + std::to_string(v) + std::to_string(v);
        out << "  " << v << " [label=\"X" << v << " " << decorate_label(wname, color)
            << "\", shape=" << node_shape(color) << ", color=" << color << "];\n";
    }
    for (auto [i, j] : g.directed) {
        const IdentStatus* s = find_status(TargetKind::direct_effect, i, j);
        const char* color = status_color(s);
        std::string lname = "l" + std::to_string(i) + std::to_string(j);
        out << "  " << i << " -> " << j << " [label=\"" << decorate_label(lname, color)
            << "\", color=" << color << "];\n";
    }
    for (auto [i, j] : g.bidirected) {
        const IdentStatus* s = find_status(TargetKind::omega_entry, i, j);
        const char* color = status_color(s);
        std::string wname = "w" + std::to_string(i) + std::to_string(j);
        out << "  " << i << " -> " << j << " [dir=both, style=dashed, label=\""
            << decorate_label(wname, color) << "\", color=" << color << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace semid
