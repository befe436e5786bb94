#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semid/criteria.hpp"
#include "semid/identify.hpp"

namespace semid {

/// Bijective code for a mixed graph on m vertices: one bit per possible
/// directed edge (pairs i<j in lexicographic order), then one bit per
/// possible bidirected edge, same pair order. m=3 uses 6 bits, m=4 uses 12.
struct GraphId {
    int m = 0;
    std::uint64_t bits = 0;

    bool operator==(const GraphId&) const = default;
    auto operator<=>(const GraphId&) const = default;
};

GraphId encode_graph(const MixedGraph& g);
MixedGraph decode_graph(const GraphId& id);  // throws on out-of-range bits
std::uint64_t graph_count(int m);            // 2^(m(m-1))

/// All 2^(m(m-1)) graphs in ascending id order.
std::vector<MixedGraph> enumerate_graphs(int m);

/// Criteria evaluated for one graph: single-door and IV per directed edge,
/// back-door per total-effect pair, and the bow-free flag.
struct CriteriaReport {
    bool bow_free = false;
    std::vector<std::pair<std::pair<int, int>, CriterionResult>> single_door;
    std::vector<std::pair<std::pair<int, int>, CriterionResult>> instrumental;
    std::vector<std::pair<std::pair<int, int>, CriterionResult>> back_door;
};

CriteriaReport run_criteria(const MixedGraph& g);

struct CensusRecord {
    int schema_version = 1;
    GraphId id;
    GraphReport report;
    CriteriaReport criteria;
    std::string engine_version;
};

struct CensusOptions {
    ClassifyOptions classify;
    std::string store_path;
    bool resume = false;
    int jobs = 1;
    std::optional<std::vector<std::uint64_t>> only_ids;
};

struct CensusSummary {
    int m = 0;
    std::uint64_t total = 0;
    std::uint64_t n_generic = 0;
    std::uint64_t n_not_generic = 0;
    std::uint64_t n_unresolved = 0;
    std::map<int, std::uint64_t> n_k_identified;  // k -> count

    std::uint64_t n_bow_free = 0;
    /// Bow-free graphs whose every direct effect is single-door certified.
    std::uint64_t n_bow_free_all_single_door = 0;
    /// Generically identifiable graphs that are not bow-free.
    std::vector<std::uint64_t> generic_not_bow_free_ids;
    /// Not-generically-identifiable graphs with >= 1 identified direct effect.
    std::uint64_t n_not_generic_with_identified_direct = 0;
    /// Direct effects with d=1 not certified by single-door or IV, as
    /// (graph id, edge) pairs.
    std::vector<std::pair<std::uint64_t, std::pair<int, int>>> uncertified_direct;
    /// Total effects with d=1 where the back-door criterion fails.
    std::vector<std::pair<std::uint64_t, std::pair<int, int>>> algebra_only_total;
    std::vector<std::uint64_t> unresolved_ids;

    bool criteria_complete_for_direct() const { return uncertified_direct.empty(); }
};

/// Runs classification over all graphs on m vertices (or only_ids), with a
/// work queue of graph ids feeding `jobs` workers and a single writer that
/// appends records in id order, so interrupted and restarted runs produce
/// byte-identical stores. Already-stored ids are skipped when resuming.
CensusSummary run_census(int m, const CensusOptions& options);

/// Deterministic reduction of a store file into a summary; independent of
/// the worker count and append history.
CensusSummary summarize_store(const std::string& store_path);

/// Reads every record in the store (schema-checked). Throws on corruption.
std::vector<CensusRecord> read_store(const std::string& store_path);

}  // namespace semid
