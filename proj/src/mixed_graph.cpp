#include "semid/mixed_graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace semid {

namespace {

void check_vertex(const MixedGraph& g, int v) {
    if (v < 1 || v > g.m) throw std::invalid_argument("vertex out of range");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::vector<std::string> edge_tokens(const std::string& s) {
    std::vector<std::string> toks;
    std::string cur;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            if (!cur.empty()) toks.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) toks.push_back(cur);
    return toks;
}

int parse_vertex(const std::string& s, int m) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        }))
        throw std::invalid_argument("bad vertex '" + s + "'");
    int v = std::stoi(s);
    if (v < 1 || v > m) throw std::invalid_argument("vertex " + s + " out of range");
    return v;
}

}  // namespace

bool MixedGraph::has_directed(int i, int j) const {
    return std::find(directed.begin(), directed.end(), std::make_pair(i, j)) != directed.end();
}

bool MixedGraph::has_bidirected(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::find(bidirected.begin(), bidirected.end(), std::make_pair(i, j)) !=
           bidirected.end();
}

MixedGraph MixedGraph::without_directed(int i, int j) const {
    if (!has_directed(i, j)) throw std::invalid_argument("directed edge not present");
    MixedGraph g = *this;
    std::erase(g.directed, std::make_pair(i, j));
    return g;
}

MixedGraph parse_graph(const std::string& text) {
    auto parts = split(text, ';');
    if (parts.size() != 3)
        throw std::invalid_argument("graph text needs '<m> ; <directed> ; <bidirected>'");

    MixedGraph g;
    auto mtok = edge_tokens(parts[0]);
    if (mtok.size() != 1)
        throw std::invalid_argument("expected a single vertex count before the first ';'");
    g.m = parse_vertex(mtok[0], 1 << 20);
    if (g.m < 1) throw std::invalid_argument("vertex count must be at least 1");

    for (const auto& tok : edge_tokens(parts[1])) {
        auto arrow = tok.find("->");
        if (arrow == std::string::npos || tok.find("<->") != std::string::npos)
            throw std::invalid_argument("bad directed edge '" + tok + "'");
        int i = parse_vertex(tok.substr(0, arrow), g.m);
        int j = parse_vertex(tok.substr(arrow + 2), g.m);
        if (i == j) throw std::invalid_argument("self-loop " + tok);
        if (i > j)
            throw std::invalid_argument("directed edge " + tok +
                                        " violates the topological order (need i < j)");
        if (g.has_directed(i, j)) throw std::invalid_argument("duplicate edge " + tok);
        g.directed.emplace_back(i, j);
    }
    for (const auto& tok : edge_tokens(parts[2])) {
        auto arrow = tok.find("<->");
        if (arrow == std::string::npos)
            throw std::invalid_argument("bad bidirected edge '" + tok + "'");
        int i = parse_vertex(tok.substr(0, arrow), g.m);
        int j = parse_vertex(tok.substr(arrow + 3), g.m);
        if (i == j) throw std::invalid_argument("self-loop " + tok);
        if (i > j) std::swap(i, j);
        if (g.has_bidirected(i, j)) throw std::invalid_argument("duplicate edge " + tok);
        g.bidirected.emplace_back(i, j);
    }
    std::sort(g.directed.begin(), g.directed.end());
    std::sort(g.bidirected.begin(), g.bidirected.end());
    return g;
}

std::string format_graph(const MixedGraph& g) {
    std::ostringstream out;
    out << g.m << ";";
    std::string sep = " ";
    for (const auto& [i, j] : g.directed) {
        out << sep << i << "->" << j;
        sep = " ";
    }
    out << ";";
    for (const auto& [i, j] : g.bidirected) out << " " << i << "<->" << j;
    return out.str();
}

std::set<int> descendants(const MixedGraph& g, int v) {
    check_vertex(g, v);
    std::set<int> seen{v};
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (const auto& [i, j] : g.directed)
            if (i == cur && !seen.contains(j)) {
                seen.insert(j);
                stack.push_back(j);
            }
    }
    return seen;
}

std::vector<std::pair<int, int>> DirectedPath::edges() const {
    std::vector<std::pair<int, int>> e;
    for (std::size_t k = 0; k + 1 < verts.size(); ++k) e.emplace_back(verts[k], verts[k + 1]);
    return e;
}

std::vector<DirectedPath> directed_paths(const MixedGraph& g, int i, int j) {
    check_vertex(g, i);
    check_vertex(g, j);
    if (i == j) return {DirectedPath{{i}}};

    std::vector<DirectedPath> out;
    std::vector<int> cur{i};
    auto dfs = [&](auto&& self, int v) -> void {
        for (const auto& [a, b] : g.directed) {
            if (a != v) continue;
            cur.push_back(b);
            if (b == j)
                out.push_back(DirectedPath{cur});
            else
                self(self, b);
            cur.pop_back();
        }
    };
    dfs(dfs, i);
    std::sort(out.begin(), out.end(), [](const DirectedPath& a, const DirectedPath& b) {
        if (a.verts.size() != b.verts.size()) return a.verts.size() < b.verts.size();
        return a.verts < b.verts;
    });
    return out;
}

std::vector<int> MixedPath::vertices() const {
    std::vector<int> v{start};
    for (const auto& s : steps) v.push_back(s.to);
    return v;
}

std::vector<MixedPath> mixed_paths(const MixedGraph& g, int x, int y) {
    check_vertex(g, x);
    check_vertex(g, y);

    // adjacency with arrowhead flags at both ends of each traversable step
    std::vector<std::vector<PathStep>> adj(static_cast<std::size_t>(g.m) + 1);
    for (const auto& [i, j] : g.directed) {
        adj[static_cast<std::size_t>(i)].push_back({j, false, true});
        adj[static_cast<std::size_t>(j)].push_back({i, true, false});
    }
    for (const auto& [i, j] : g.bidirected) {
        adj[static_cast<std::size_t>(i)].push_back({j, true, true});
        adj[static_cast<std::size_t>(j)].push_back({i, true, true});
    }

    std::vector<MixedPath> out;
    std::vector<bool> used(static_cast<std::size_t>(g.m) + 1, false);
    MixedPath cur{x, {}};
    used[static_cast<std::size_t>(x)] = true;
    auto dfs = [&](auto&& self, int v) -> void {
        for (const auto& step : adj[static_cast<std::size_t>(v)]) {
            if (used[static_cast<std::size_t>(step.to)]) continue;
            cur.steps.push_back(step);
            if (step.to == y) {
                out.push_back(cur);
            } else {
                used[static_cast<std::size_t>(step.to)] = true;
                self(self, step.to);
                used[static_cast<std::size_t>(step.to)] = false;
            }
            cur.steps.pop_back();
        }
    };
    dfs(dfs, x);
    return out;
}

bool path_blocked(const MixedGraph& g, const MixedPath& path, const std::set<int>& Z) {
    for (std::size_t k = 0; k + 1 < path.steps.size(); ++k) {
        int v = path.steps[k].to;
        bool collider = path.steps[k].head_at_to && path.steps[k + 1].head_at_from;
        if (collider) {
            bool opened = false;
            for (int d : descendants(g, v))
                if (Z.contains(d)) {
                    opened = true;
                    break;
                }
            if (!opened) return true;
        } else {
            if (Z.contains(v)) return true;
        }
    }
    return false;
}

bool d_separated(const MixedGraph& g, int x, int y, const std::set<int>& Z) {
    check_vertex(g, x);
    check_vertex(g, y);
    if (x == y) throw std::invalid_argument("d-separation needs distinct endpoints");
    if (Z.contains(x) || Z.contains(y))
        throw std::invalid_argument("endpoints may not appear in the conditioning set");
    for (int z : Z) check_vertex(g, z);

    for (const auto& path : mixed_paths(g, x, y))
        if (!path_blocked(g, path, Z)) return false;
    return true;
}

}  // namespace semid
