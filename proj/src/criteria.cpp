#include "semid/criteria.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace semid {

namespace {

/// Subsets of `candidates` in search order: smallest first, lexicographic
/// within one size.
std::vector<std::set<int>> subsets_smallest_first(const std::vector<int>& candidates) {
    std::vector<std::set<int>> out;
    const std::size_t n = candidates.size();
    for (std::size_t size = 0; size <= n; ++size) {
        std::vector<std::uint32_t> masks;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
            if (static_cast<std::size_t>(std::popcount(mask)) == size) masks.push_back(mask);
        // candidates are ascending, so ascending mask value = lexicographic
        // on the selected elements
        for (std::uint32_t mask : masks) {
            std::set<int> z;
            for (std::size_t k = 0; k < n; ++k)
                if (mask & (1u << k)) z.insert(candidates[k]);
            out.push_back(std::move(z));
        }
    }
    return out;
}

}  // namespace

CriterionResult single_door(const MixedGraph& g, int i, int j) {
    if (!g.has_directed(i, j)) throw std::invalid_argument("single_door needs an edge i->j");
    CriterionResult res{"single-door", false, std::nullopt, std::nullopt};

    std::set<int> de_j = descendants(g, j);
    std::vector<int> candidates;
    for (int v = 1; v <= g.m; ++v)
        if (v != i && v != j && !de_j.contains(v)) candidates.push_back(v);

    MixedGraph cut = g.without_directed(i, j);
    for (const auto& z : subsets_smallest_first(candidates)) {
        if (d_separated(cut, i, j, z)) {
            res.satisfied = true;
            res.witness_set = z;
            break;
        }
    }
    return res;
}

CriterionResult instrumental_variable(const MixedGraph& g, int i, int j) {
    if (!g.has_directed(i, j))
        throw std::invalid_argument("instrumental_variable needs an edge i->j");
    CriterionResult res{"instrumental-variable", false, std::nullopt, std::nullopt};

    MixedGraph cut = g.without_directed(i, j);
    for (int z = 1; z <= g.m; ++z) {
        if (z == i || z == j) continue;
        if (d_separated(cut, z, j, {}) && !d_separated(cut, z, i, {})) {
            res.satisfied = true;
            res.witness_vertex = z;
            break;
        }
    }
    return res;
}

CriterionResult back_door(const MixedGraph& g, int i, int j) {
    if (i >= j) throw std::invalid_argument("back_door needs i < j");
    CriterionResult res{"back-door", false, std::nullopt, std::nullopt};

    // paths whose first edge points into i
    std::vector<MixedPath> back_paths;
    for (const auto& path : mixed_paths(g, i, j))
        if (path.steps.front().head_at_from) back_paths.push_back(path);

    std::set<int> de_i = descendants(g, i);
    std::vector<int> candidates;
    for (int v = 1; v <= g.m; ++v)
        if (v != i && v != j && !de_i.contains(v)) candidates.push_back(v);

    for (const auto& z : subsets_smallest_first(candidates)) {
        bool all_blocked = true;
        for (const auto& path : back_paths)
            if (!path_blocked(g, path, z)) {
                all_blocked = false;
                break;
            }
        if (all_blocked) {
            res.satisfied = true;
            res.witness_set = z;
            break;
        }
    }
    return res;
}

bool is_bow_free(const MixedGraph& g) {
    return std::none_of(g.directed.begin(), g.directed.end(), [&](const auto& e) {
        return g.has_bidirected(e.first, e.second);
    });
}

}  // namespace semid
