#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace semid {

/// Mixed graph on vertices 1..m: directed edges i->j (topologically ordered,
/// so i < j always) plus bidirected edges stored as unordered pairs {i,j},
/// i < j. Directed edges model causal effects, bidirected edges correlated
/// errors.
struct MixedGraph {
    int m = 0;
    std::vector<std::pair<int, int>> directed;    // sorted, i < j
    std::vector<std::pair<int, int>> bidirected;  // sorted, i < j

    bool has_directed(int i, int j) const;
    bool has_bidirected(int i, int j) const;
    /// Copy with one directed edge removed; throws if absent.
    MixedGraph without_directed(int i, int j) const;

    bool operator==(const MixedGraph&) const = default;
};

/// Grammar (whitespace-insensitive): "<m> ; <a->b ...> ; <a<->b ...>" with
/// edges separated by spaces or commas. Rejects order-violating directed
/// edges, self-loops and duplicates. Throws std::invalid_argument.
MixedGraph parse_graph(const std::string& text);

/// Canonical form re-emitting edges sorted: "3; 1->2 2->3; 2<->3".
std::string format_graph(const MixedGraph& g);

/// Vertices reachable from v by directed edges, including v itself.
std::set<int> descendants(const MixedGraph& g, int v);

/// Directed path i -> ... -> j as its vertex sequence (>= 1 vertex; a single
/// vertex is the empty path).
struct DirectedPath {
    std::vector<int> verts;

    std::size_t length() const { return verts.empty() ? 0 : verts.size() - 1; }
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const DirectedPath&) const = default;
};

/// All directed paths from i to j, sorted by (length, vertex sequence).
/// i == j yields the single empty path.
std::vector<DirectedPath> directed_paths(const MixedGraph& g, int i, int j);

/// One step of a mixed path: the edge toward `to`, with arrowhead flags at
/// the step's tail and head ends. A bidirected edge has heads at both ends.
struct PathStep {
    int to = 0;
    bool head_at_from = false;
    bool head_at_to = false;
};

/// A simple mixed path x .. y (distinct vertices) as its start plus steps.
struct MixedPath {
    int start = 0;
    std::vector<PathStep> steps;

    std::vector<int> vertices() const;
};

/// All simple paths between x and y over directed and bidirected edges.
std::vector<MixedPath> mixed_paths(const MixedGraph& g, int x, int y);

/// Is `path` blocked by Z: some interior non-collider lies in Z, or some
/// interior collider has no descendant in Z. A vertex is a collider exactly
/// when both incident path edges point into it.
bool path_blocked(const MixedGraph& g, const MixedPath& path, const std::set<int>& Z);

/// d-separation of x and y given Z, with i<->j carrying arrowheads at both
/// endpoints (the latent-common-cause reading). Preconditions: x != y and
/// x, y not in Z.
bool d_separated(const MixedGraph& g, int x, int y, const std::set<int>& Z);

}  // namespace semid
