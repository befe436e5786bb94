#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semid/mixed_graph.hpp"

namespace semid {

struct CriterionResult {
    std::string criterion;
    bool satisfied = false;
    std::optional<std::set<int>> witness_set;  // single-door / back-door
    std::optional<int> witness_vertex;         // instrumental variable
};

/// Single-door criterion for a direct effect i->j: some Z avoiding the
/// descendants of j d-separates i from j once the edge is removed. The
/// subset search is exhaustive, smallest set first, lexicographic tiebreak.
CriterionResult single_door(const MixedGraph& g, int i, int j);

/// Unconditional instrumental variable for i->j: a vertex z that is
/// d-separated from j but d-connected to i in the edge-removed graph.
CriterionResult instrumental_variable(const MixedGraph& g, int i, int j);

/// Back-door criterion for the total effect of i on j: some Z avoiding the
/// descendants of i blocks every path into i's back (first edge pointing
/// into i, bidirected edges included).
CriterionResult back_door(const MixedGraph& g, int i, int j);

/// No vertex pair carries both a directed and a bidirected edge.
bool is_bow_free(const MixedGraph& g);

}  // namespace semid
