#include "theta/lemmas.hpp"

#include "theta/error.hpp"
#include "theta/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <string>

namespace theta {

SubgraphView peel_to_min_degree(const Graph& g, std::size_t min_degree) {
    const std::size_t n = g.vertex_count();
    std::vector<std::atomic<long long>> degree(n);
    std::vector<std::uint8_t> alive(n, 1);
    std::vector<std::uint8_t> doomed(n, 0);
    for (Vertex v = 0; v < n; ++v) degree[v].store(static_cast<long long>(g.degree(v)));
    const long long k = static_cast<long long>(min_degree);
    const long long nn = static_cast<long long>(n);

    while (true) {
        long long removed = 0;
#pragma omp parallel for reduction(+ : removed) num_threads(thread_cap())
        for (long long v = 0; v < nn; ++v) {
            if (alive[v] && degree[v].load(std::memory_order_relaxed) < k) {
                alive[v] = 0;
                doomed[v] = 1;
                ++removed;
            }
        }
        if (removed == 0) break;
#pragma omp parallel for num_threads(thread_cap())
        for (long long v = 0; v < nn; ++v) {
            if (!doomed[v]) continue;
            for (Vertex u : g.neighbors(static_cast<Vertex>(v)))
                if (alive[u]) degree[u].fetch_sub(1, std::memory_order_relaxed);
            doomed[v] = 0;
        }
    }

    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
        if (alive[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

bool is_injective_homomorphism(const Graph& host, const Graph& pattern, std::span<const Vertex> map) {
    if (map.size() != pattern.vertex_count()) return false;
    std::vector<Vertex> images(map.begin(), map.end());
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
    for (Vertex x : map)
        if (x >= host.vertex_count()) return false;
    for (auto [a, b] : pattern.edges())
        if (!host.adjacent(map[a], map[b])) return false;
    return true;
}

std::vector<Vertex> greedy_embed_tree(const Graph& host, const Graph& tree, std::optional<TreeAnchor> anchor) {
    const std::size_t t = tree.vertex_count();
    if (t == 0) return {};
    if (tree.edge_count() != t - 1) throw PreconditionError("pattern is not a tree");
    const std::size_t ell = t - 1;
    if (host.vertex_count() == 0) throw PreconditionError("host is empty");
    for (Vertex v = 0; v < host.vertex_count(); ++v)
        if (host.degree(v) < ell)
            throw PreconditionError("host vertex " + std::to_string(v) + " has degree below " + std::to_string(ell));

    const Vertex start = anchor ? anchor->tree_vertex : 0;
    if (start >= t) throw InvalidVertex("anchor vertex out of range");

    Vertex start_image = 0;
    if (anchor) {
        if (!host.has_sides()) throw PreconditionError("anchored embedding needs a bipartition-tagged host");
        Vertex v = 0;
        while (v < host.vertex_count() && host.side(v) != anchor->side) ++v;
        if (v == host.vertex_count()) throw PreconditionError("host has no vertex on the requested side");
        start_image = v;
    }

    constexpr Vertex kUnset = ~Vertex{0};
    std::vector<Vertex> map(t, kUnset);
    std::vector<std::uint8_t> used(host.vertex_count(), 0);
    map[start] = start_image;
    used[start_image] = 1;
    std::vector<Vertex> order{start};
    for (std::size_t head = 0; head < order.size(); ++head) {
        const Vertex x = order[head];
        for (Vertex y : tree.neighbors(x)) {
            if (map[y] != kUnset) continue;
            Vertex pick = kUnset;
            for (Vertex h : host.neighbors(map[x]))
                if (!used[h]) {
                    pick = h;
                    break;
                }
            // Unreachable under the degree precondition: at most l - 1
            // neighbours of map[x] can already be used.
            if (pick == kUnset) throw PreconditionError("greedy embedding ran out of neighbours");
            map[y] = pick;
            used[pick] = 1;
            order.push_back(y);
        }
    }
    if (order.size() != t) throw PreconditionError("pattern is not connected");
    return map;
}

std::size_t star_leaf_target(std::size_t d, std::size_t c) { return (d + c - 1) / c; }

std::vector<Star> extract_disjoint_stars(const Graph& bg, std::size_t d, std::size_t c) {
    if (d == 0 || c == 0) throw PreconditionError("d and C must be positive");
    if (!bg.has_sides()) throw PreconditionError("star extraction needs a bipartition-tagged graph");
    std::vector<Vertex> centers;
    std::size_t w_size = 0;
    for (Vertex v = 0; v < bg.vertex_count(); ++v) {
        if (bg.side(v) == Side::Left) {
            centers.push_back(v);
        } else {
            ++w_size;
            if (bg.degree(v) == 0)
                throw PreconditionError("vertex " + std::to_string(v) + " of W has no neighbour in V");
        }
    }
    if (w_size < centers.size() * d)
        throw PreconditionError("|W| = " + std::to_string(w_size) + " < m d = " + std::to_string(centers.size() * d));
    for (Vertex v : centers)
        if (bg.degree(v) < d || bg.degree(v) > c * d)
            throw PreconditionError("centre " + std::to_string(v) + " has degree outside [d, C d]");

    const std::size_t leaves = star_leaf_target(d, c);
    std::vector<std::uint8_t> removed(bg.vertex_count(), 0);
    std::vector<Star> stars;
    for (Vertex v : centers) {
        Star star{v, {}};
        for (Vertex w : bg.neighbors(v)) {
            if (removed[w]) continue;
            star.leaves.push_back(w);
            if (star.leaves.size() == leaves) break;
        }
        if (star.leaves.size() < leaves) continue;
        for (Vertex w : bg.neighbors(v)) removed[w] = 1;
        stars.push_back(std::move(star));
    }
    return stars;
}

namespace {

// Deletes vertices with degree outside [lo, hi] until stable.
std::vector<Vertex> degree_window(const Graph& g, std::size_t lo, std::size_t hi) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> degree(n);
    std::vector<std::uint8_t> alive(n, 1);
    for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
    std::vector<Vertex> queue;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] < lo || degree[v] > hi) queue.push_back(v);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex v = queue[head];
        if (!alive[v]) continue;
        alive[v] = 0;
        for (Vertex u : g.neighbors(v)) {
            if (!alive[u]) continue;
            --degree[u];
            if (degree[u] < lo) queue.push_back(u);
        }
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
        if (alive[v]) keep.push_back(v);
    return keep;
}

}  // namespace

RegularizeResult regularize_degrees(const Graph& g, std::size_t ratio) {
    if (ratio < 2) throw PreconditionError("ratio must be at least 2");
    if (g.edge_count() == 0) throw PreconditionError("graph has no edges");
    std::size_t max_degree = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) max_degree = std::max(max_degree, g.degree(v));

    std::optional<SubgraphView> best;
    std::size_t best_t = 0;
    for (std::size_t t = 1; t <= max_degree; t *= 2) {
        auto keep = degree_window(g, t, ratio * t);
        if (keep.empty()) continue;
        SubgraphView view = induced_subgraph(g, keep);
        if (!best || view.graph.edge_count() > best->graph.edge_count()) {
            best = std::move(view);
            best_t = t;
        }
    }

    RegularizeResult out;
    if (best) {
        out.view = std::move(*best);
        out.report.threshold = best_t;
    } else {
        const Edge e = g.edges().front();
        const std::vector<Vertex> keep{e.first, e.second};
        out.view = induced_subgraph(g, keep);
        out.report.threshold = 1;
        out.report.fallback = true;
    }
    const auto stats = degree_stats(out.view.graph);
    out.report.min_degree = stats.min;
    out.report.max_degree = stats.max;
    out.report.kept_edges = out.view.graph.edge_count();
    out.report.original_edges = g.edge_count();
    out.report.retention = Rational(static_cast<std::int64_t>(out.report.kept_edges),
                                    static_cast<std::int64_t>(out.report.original_edges));
    return out;
}

}  // namespace theta
