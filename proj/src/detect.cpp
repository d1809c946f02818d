#include "theta/detect.hpp"

#include "theta/error.hpp"
#include "theta/parallel.hpp"

#include <algorithm>
#include <limits>

namespace theta {

const char* to_string(SearchMode mode) {
    switch (mode) {
        case SearchMode::First: return "first";
        case SearchMode::Count: return "count";
        case SearchMode::All: return "all";
    }
    return "?";
}

const char* to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Exhausted: return "exhausted";
        case SearchStatus::Budget: return "budget";
    }
    return "?";
}

namespace {

constexpr std::size_t kWaveRoots = 256;
constexpr std::uint8_t kFar = std::numeric_limits<std::uint8_t>::max();

/// Truncated BFS distances, reset in O(ball) through a stamp.
class BallDistances {
public:
    explicit BallDistances(std::size_t n) : stamp_of_(n, 0), dist_(n, kFar) {}

    void compute(const Graph& g, Vertex source, int radius) {
        ++stamp_;
        frontier_.assign(1, source);
        mark(source, 0);
        for (std::size_t head = 0; head < frontier_.size(); ++head) {
            Vertex x = frontier_[head];
            const int dx = dist_[x];
            if (dx == radius) continue;
            for (Vertex y : g.neighbors(x))
                if (stamp_of_[y] != stamp_) {
                    mark(y, dx + 1);
                    frontier_.push_back(y);
                }
        }
    }

    [[nodiscard]] int at(Vertex v) const { return stamp_of_[v] == stamp_ ? dist_[v] : kFar; }
    [[nodiscard]] const std::vector<Vertex>& reached() const { return frontier_; }

private:
    void mark(Vertex v, int d) {
        stamp_of_[v] = stamp_;
        dist_[v] = static_cast<std::uint8_t>(d);
    }

    std::uint32_t stamp_ = 0;
    std::vector<std::uint32_t> stamp_of_;
    std::vector<std::uint8_t> dist_;
    std::vector<Vertex> frontier_;
};

struct BlockResult {
    std::uint64_t expansions = 0;
    std::uint64_t pole_pairs = 0;
    std::uint64_t count = 0;
    bool aborted = false;
    std::optional<Embedding> first;
    std::vector<Embedding> all;
};

/// Per-worker search state for the pole pairs rooted at one vertex.
class RootSearch {
public:
    RootSearch(const Graph& g, const ThetaSpec& spec, const DetectOptions& options, bool bipartite)
        : g_(g),
          lengths_(spec.lengths()),
          options_(options),
          bipartite_(bipartite),
          used_(g.vertex_count(), 0),
          from_pole_(g.vertex_count()),
          to_target_(g.vertex_count()),
          paths_(lengths_.size()) {}

    BlockResult run(Vertex u, std::uint64_t cap) {
        result_ = BlockResult{};
        cap_ = cap;
        pole_ = u;
        if (!allowed(u)) return result_;
        const int k1 = lengths_.front();
        from_pole_.compute(g_, u, k1);
        std::vector<Vertex> candidates;
        for (Vertex v : from_pole_.reached()) {
            if (v <= u || !allowed(v)) continue;
            const int d = from_pole_.at(v);
            if (bipartite_ && (k1 - d) % 2 != 0) continue;
            candidates.push_back(v);
        }
        std::sort(candidates.begin(), candidates.end());
        for (Vertex v : candidates) {
            if (tick()) break;
            ++result_.pole_pairs;
            target_ = v;
            to_target_.compute(g_, v, lengths_.back() - 1);
            used_[u] = used_[v] = 1;
            const bool stop = place(0);
            used_[u] = used_[v] = 0;
            if (stop) break;
        }
        return result_;
    }

private:
    bool allowed(Vertex v) const { return options_.pole_filter.empty() || options_.pole_filter[v]; }

    // True once the cap is exceeded.
    bool tick() {
        if (++result_.expansions > cap_) {
            result_.aborted = true;
            return true;
        }
        return false;
    }

    bool record() {
        ++result_.count;
        if (!result_.first || options_.mode == SearchMode::All) {
            Embedding e{pole_, target_, paths_};
            if (options_.mode == SearchMode::All) result_.all.push_back(e);
            if (!result_.first) result_.first = std::move(e);
        }
        return options_.mode == SearchMode::First;
    }

    // Places paths i.. ; returns true to stop the whole root search.
    bool place(std::size_t i) {
        if (i == lengths_.size()) return record();
        auto& path = paths_[i];
        path.assign(1, pole_);
        if (lengths_[i] == 1) {
            if (!g_.adjacent(pole_, target_)) return false;
            path.push_back(target_);
            return place(i + 1);
        }
        return extend(i, pole_, lengths_[i]);
    }

    bool extend(std::size_t i, Vertex x, int remaining) {
        auto& path = paths_[i];
        if (remaining == 1) {
            if (!g_.adjacent(x, target_)) return false;
            if (tick()) return true;
            path.push_back(target_);
            const bool stop = place(i + 1);
            path.pop_back();
            return stop;
        }
        const bool second = path.size() == 1;
        const bool ordered = second && i > 0 && lengths_[i] == lengths_[i - 1];
        for (Vertex y : g_.neighbors(x)) {
            if (used_[y]) continue;
            const int d = to_target_.at(y);
            if (d > remaining - 1) continue;
            if (bipartite_ && (remaining - 1 - d) % 2 != 0) continue;
            if (ordered && y <= paths_[i - 1][1]) continue;
            if (tick()) return true;
            used_[y] = 1;
            path.push_back(y);
            const bool stop = extend(i, y, remaining - 1);
            path.pop_back();
            used_[y] = 0;
            if (stop) return true;
        }
        return false;
    }

    const Graph& g_;
    const std::vector<int>& lengths_;
    const DetectOptions& options_;
    const bool bipartite_;
    std::vector<std::uint8_t> used_;
    BallDistances from_pole_;
    BallDistances to_target_;
    std::vector<std::vector<Vertex>> paths_;
    Vertex pole_ = 0;
    Vertex target_ = 0;
    std::uint64_t cap_ = 0;
    BlockResult result_;
};

}  // namespace

DetectResult detect_theta(const Graph& host, const ThetaSpec& spec, const DetectOptions& options) {
    if (options.budget == 0) throw SpecError("search budget must be positive");
    if (!options.pole_filter.empty() && options.pole_filter.size() != host.vertex_count())
        throw InvalidVertex("pole filter size does not match vertex count");

    DetectResult out;
    const std::size_t n = host.vertex_count();
    if (spec.vertex_count() > n) return out;

    const bool bipartite = host.is_bipartite();
    std::uint64_t total = 0;
    bool cut = false;

    for (std::size_t wave = 0; wave < n && !cut; wave += kWaveRoots) {
        const std::size_t wave_end = std::min(n, wave + kWaveRoots);
        const std::uint64_t cap = options.budget - total;
        std::vector<BlockResult> blocks(wave_end - wave);

#pragma omp parallel num_threads(thread_cap())
        {
            RootSearch search(host, spec, options, bipartite);
#pragma omp for schedule(dynamic, 1)
            for (std::size_t r = wave; r < wave_end; ++r)
                blocks[r - wave] = search.run(static_cast<Vertex>(r), cap);
        }

        for (auto& block : blocks) {
            if (block.aborted || total + block.expansions > options.budget) {
                // Partial counts from this block are dropped so the cut point
                // matches a single sequential run.
                cut = true;
                break;
            }
            total += block.expansions;
            out.pole_pairs += block.pole_pairs;
            out.count += block.count;
            if (!out.embedding && block.first) out.embedding = std::move(block.first);
            for (auto& e : block.all) out.embeddings.push_back(std::move(e));
            if (options.mode == SearchMode::First && out.embedding) break;
        }
        if (options.mode == SearchMode::First && out.embedding) break;
    }

    out.expansions = cut ? options.budget : total;
    out.complete = !cut;
    if (out.count > 0)
        out.status = SearchStatus::Found;
    else
        out.status = cut ? SearchStatus::Budget : SearchStatus::Exhausted;
    return out;
}

bool verify_embedding(const Graph& host, const ThetaSpec& spec, const Embedding& e) {
    const std::size_t n = host.vertex_count();
    if (e.paths.size() != spec.path_count()) return false;
    if (e.pole == e.other_pole || e.pole >= n || e.other_pole >= n) return false;
    std::vector<int> owner(n, -1);
    for (std::size_t i = 0; i < e.paths.size(); ++i) {
        const auto& path = e.paths[i];
        if (path.size() != static_cast<std::size_t>(spec.length(i)) + 1) return false;
        if (path.front() != e.pole || path.back() != e.other_pole) return false;
        for (std::size_t j = 0; j + 1 < path.size(); ++j)
            if (path[j] >= n || path[j + 1] >= n || !host.adjacent(path[j], path[j + 1])) return false;
        for (std::size_t j = 1; j + 1 < path.size(); ++j) {
            const Vertex x = path[j];
            if (x == e.pole || x == e.other_pole || owner[x] != -1) return false;
            owner[x] = static_cast<int>(i);
        }
    }
    return true;
}

std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
    const std::size_t len = cycle.size();
    if (len == 0) return cycle;
    std::vector<Vertex> best;
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t start = 0; start < len; ++start) {
            std::vector<Vertex> cand(len);
            for (std::size_t i = 0; i < len; ++i)
                cand[i] = dir == 0 ? cycle[(start + i) % len] : cycle[(start + len - i) % len];
            if (best.empty() || cand < best) best = std::move(cand);
        }
    }
    return best;
}

namespace {

void cycles_from(const Graph& g, Vertex s, std::size_t length, std::vector<std::vector<Vertex>>& out) {
    std::vector<Vertex> path{s};
    std::vector<std::uint8_t> on_path(g.vertex_count(), 0);
    on_path[s] = 1;
    auto dfs = [&](auto&& self, Vertex x) -> void {
        if (path.size() == length) {
            if (path[1] < path.back() && g.adjacent(x, s)) out.push_back(path);
            return;
        }
        for (Vertex y : g.neighbors(x)) {
            if (y <= s || on_path[y]) continue;
            on_path[y] = 1;
            path.push_back(y);
            self(self, y);
            path.pop_back();
            on_path[y] = 0;
        }
    };
    dfs(dfs, s);
}

}  // namespace

CycleList enumerate_cycles(const Graph& host, std::size_t length) {
    if (length < 3) throw RangeError("cycle length must be at least 3");
    const std::size_t n = host.vertex_count();
    std::vector<std::vector<std::vector<Vertex>>> per_start(n);
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_cap())
    for (std::size_t s = 0; s < n; ++s) cycles_from(host, static_cast<Vertex>(s), length, per_start[s]);
    CycleList out{length, {}};
    for (auto& list : per_start)
        for (auto& c : list) out.cycles.push_back(std::move(c));
    return out;
}

}  // namespace theta
