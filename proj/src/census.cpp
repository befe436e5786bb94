#include "semid/census.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "semid/report_io.hpp"

namespace semid {

namespace {

std::vector<std::pair<int, int>> vertex_pairs(int m) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) pairs.emplace_back(i, j);
    return pairs;
}

const IdentStatus* find_status(const GraphReport& r, TargetKind kind, int i, int j) {
    for (std::size_t k = 0; k < r.targets.size(); ++k)
        if (r.targets[k].kind == kind && r.targets[k].i == i && r.targets[k].j == j)
            return &r.statuses[k];
    return nullptr;
}

/// Store records plus the byte length of the clean prefix; a trailing
/// partial line (interrupted append) is reported, not thrown.
std::pair<std::vector<CensusRecord>, std::uintmax_t> load_store(const std::string& path,
                                                                bool lenient_tail) {
    std::vector<CensusRecord> records;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open store '" + path + "'");
    std::string line;
    std::uintmax_t clean = 0;
    while (std::getline(in, line)) {
        bool complete = !in.eof();  // getline consumed a newline
        // a newline-less tail is an interrupted append: drop it so the next
        // append starts on a clean line
        if (lenient_tail && !complete) return {std::move(records), clean};
        if (line.empty()) {
            clean += complete ? 1 : 0;
            continue;
        }
        try {
            records.push_back(record_from_json(nlohmann::json::parse(line)));
        } catch (const std::exception& e) {
            throw std::invalid_argument("corrupt census store '" + path + "': " + e.what());
        }
        clean += line.size() + (complete ? 1 : 0);
    }
    return {std::move(records), clean};
}

}  // namespace

GraphId encode_graph(const MixedGraph& g) {
    auto pairs = vertex_pairs(g.m);
    GraphId id{g.m, 0};
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (g.has_directed(pairs[k].first, pairs[k].second)) id.bits |= std::uint64_t{1} << k;
        if (g.has_bidirected(pairs[k].first, pairs[k].second))
            id.bits |= std::uint64_t{1} << (pairs.size() + k);
    }
    return id;
}

MixedGraph decode_graph(const GraphId& id) {
    if (id.m < 1) throw std::invalid_argument("graph id needs m >= 1");
    auto pairs = vertex_pairs(id.m);
    if (pairs.size() * 2 < 64 && id.bits >= (std::uint64_t{1} << (2 * pairs.size())))
        throw std::invalid_argument("graph id bits out of range");
    MixedGraph g;
    g.m = id.m;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (id.bits & (std::uint64_t{1} << k)) g.directed.push_back(pairs[k]);
        if (id.bits & (std::uint64_t{1} << (pairs.size() + k))) g.bidirected.push_back(pairs[k]);
    }
    return g;
}

std::uint64_t graph_count(int m) {
    if (m < 1) throw std::invalid_argument("census needs m >= 1");
    int bits = m * (m - 1);
    if (bits >= 63) throw std::invalid_argument("census size out of range");
    return std::uint64_t{1} << bits;
}

std::vector<MixedGraph> enumerate_graphs(int m) {
    std::vector<MixedGraph> out;
    std::uint64_t n = graph_count(m);
    out.reserve(n);
    for (std::uint64_t bits = 0; bits < n; ++bits) out.push_back(decode_graph({m, bits}));
    return out;
}

CriteriaReport run_criteria(const MixedGraph& g) {
    CriteriaReport r;
    r.bow_free = is_bow_free(g);
    for (auto [i, j] : g.directed) {
        r.single_door.emplace_back(std::make_pair(i, j), single_door(g, i, j));
        r.instrumental.emplace_back(std::make_pair(i, j), instrumental_variable(g, i, j));
    }
    for (auto [i, j] : vertex_pairs(g.m))
        if (!directed_paths(g, i, j).empty())
            r.back_door.emplace_back(std::make_pair(i, j), back_door(g, i, j));
    return r;
}

std::vector<CensusRecord> read_store(const std::string& store_path) {
    return load_store(store_path, false).first;
}

CensusSummary run_census(int m, const CensusOptions& options) {
    if (options.store_path.empty()) throw std::invalid_argument("census needs a store path");
    const std::uint64_t total = graph_count(m);

    std::vector<std::uint64_t> ids;
    if (options.only_ids) {
        ids = *options.only_ids;
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        for (auto id : ids)
            if (id >= total) throw std::invalid_argument("graph id out of range");
    } else {
        ids.resize(total);
        for (std::uint64_t i = 0; i < total; ++i) ids[i] = i;
    }

    std::set<std::uint64_t> done;
    if (options.resume && std::filesystem::exists(options.store_path)) {
        auto [records, clean] = load_store(options.store_path, true);
        // drop an interrupted trailing line so the next append starts clean
        if (clean != std::filesystem::file_size(options.store_path))
            std::filesystem::resize_file(options.store_path, clean);
        for (const auto& r : records) {
            if (r.id.m != m) throw std::invalid_argument("store holds a different census");
            done.insert(r.id.bits);
        }
    } else if (!options.resume) {
        std::filesystem::remove(options.store_path);
        std::filesystem::remove(options.store_path + ".idx");
    }

    std::vector<std::uint64_t> work;
    for (auto id : ids)
        if (!done.contains(id)) work.push_back(id);

    const int jobs = std::max(1, options.jobs);
    std::atomic<std::size_t> next{0};
    std::map<std::size_t, CensusRecord> ready;
    std::mutex mu;
    std::condition_variable cv;

    auto worker = [&] {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= work.size()) return;
            MixedGraph g = decode_graph({m, work[k]});
            CensusRecord rec{kSchemaVersion,
                             {m, work[k]},
                             classify_graph(g, options.classify),
                             run_criteria(g),
                             kEngineVersion};
            {
                std::lock_guard lock(mu);
                ready.emplace(k, std::move(rec));
            }
            cv.notify_one();
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);

    // single writer appends in work order: an interrupted run leaves a
    // clean prefix, so restarts reproduce the uninterrupted store
    {
        std::ofstream store(options.store_path, std::ios::app);
        std::ofstream idx(options.store_path + ".idx", std::ios::app);
        for (std::size_t pos = 0; pos < work.size(); ++pos) {
            std::unique_lock lock(mu);
            cv.wait(lock, [&] { return ready.contains(pos); });
            CensusRecord rec = std::move(ready.at(pos));
            ready.erase(pos);
            lock.unlock();
            store << record_to_json(rec).dump() << "\n" << std::flush;
            idx << rec.id.bits << "\n" << std::flush;
        }
    }
    for (auto& t : pool) t.join();

    return summarize_store(options.store_path);
}

CensusSummary summarize_store(const std::string& store_path) {
    auto records = read_store(store_path);
    CensusSummary s;
    if (records.empty()) return s;
    s.m = records.front().id.m;

    std::set<std::uint64_t> seen;
    for (const auto& rec : records) {
        if (!seen.insert(rec.id.bits).second)
            throw std::invalid_argument("duplicate graph id in store");
        ++s.total;
        const GraphReport& r = rec.report;
        switch (r.verdict) {
            case GraphVerdict::generically_identifiable:
                ++s.n_generic;
                if (!rec.criteria.bow_free) s.generic_not_bow_free_ids.push_back(rec.id.bits);
                break;
            case GraphVerdict::algebraically_k_identified:
                ++s.n_k_identified[r.k];
                break;
            case GraphVerdict::not_generically_identifiable:
                ++s.n_not_generic;
                break;
            case GraphVerdict::unresolved:
                ++s.n_unresolved;
                s.unresolved_ids.push_back(rec.id.bits);
                break;
        }
        if (rec.criteria.bow_free) {
            ++s.n_bow_free;
            bool all_sd = true;
            for (const auto& [edge, res] : rec.criteria.single_door)
                all_sd = all_sd && res.satisfied;
            if (all_sd) ++s.n_bow_free_all_single_door;
        }

        bool any_direct_identified = false;
        for (const auto& [edge, sd] : rec.criteria.single_door) {
            const IdentStatus* st =
                find_status(r, TargetKind::direct_effect, edge.first, edge.second);
            if (!st || status_degree(*st) != 1) continue;
            any_direct_identified = true;
            bool iv = false;
            for (const auto& [e2, res] : rec.criteria.instrumental)
                if (e2 == edge) iv = res.satisfied;
            if (!sd.satisfied && !iv) s.uncertified_direct.push_back({rec.id.bits, edge});
        }
        if (r.verdict == GraphVerdict::not_generically_identifiable && any_direct_identified)
            ++s.n_not_generic_with_identified_direct;

        for (const auto& [pair, bd] : rec.criteria.back_door) {
            const IdentStatus* st =
                find_status(r, TargetKind::total_effect, pair.first, pair.second);
            if (!st || status_degree(*st) != 1) continue;
            if (!bd.satisfied) s.algebra_only_total.push_back({rec.id.bits, pair});
        }
    }
    std::sort(s.generic_not_bow_free_ids.begin(), s.generic_not_bow_free_ids.end());
    std::sort(s.unresolved_ids.begin(), s.unresolved_ids.end());
    std::sort(s.uncertified_direct.begin(), s.uncertified_direct.end());
    std::sort(s.algebra_only_total.begin(), s.algebra_only_total.end());
    return s;
}

}  // namespace semid
