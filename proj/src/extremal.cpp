#include "theta/extremal.hpp"

#include "theta/canonical.hpp"
#include "theta/detect.hpp"
#include "theta/error.hpp"
#include "theta/geometry.hpp"
#include "theta/parallel.hpp"
#include "theta/random.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

namespace theta {

const char* to_string(ExtremalMethod method) {
    return method == ExtremalMethod::Exhaustive ? "exhaustive" : "search";
}

namespace {

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    return Graph::from_edge_list(n, edges);
}

bool contains(const Graph& g, const ThetaSpec& spec) {
    const DetectResult r = detect_theta(g, spec);
    if (r.status == SearchStatus::Budget) throw Error("detection budget exhausted on a small graph");
    return r.found();
}

}  // namespace

ExtremalResult ex_exhaustive(std::size_t n, const ThetaSpec& spec) {
    if (n > kExhaustiveMaxVertices)
        throw SizeLimit("exhaustive search supports n <= " + std::to_string(kExhaustiveMaxVertices));
    ExtremalResult out;
    out.n = n;
    out.spec = spec;
    out.method = ExtremalMethod::Exhaustive;
    if (n < spec.vertex_count()) {
        out.witness = complete_graph(n);
        out.max_edges = out.witness.edge_count();
        out.classes = 1;
        return out;
    }

    SmallGraph empty;
    empty.n = static_cast<std::uint8_t>(n);
    empty.rows.assign(n, 0);
    std::vector<SmallGraph> level{empty};
    out.classes = 1;
    for (;;) {
        std::vector<std::vector<SmallGraph>> children(level.size());
        const long long count = static_cast<long long>(level.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(thread_cap())
        for (long long i = 0; i < count; ++i) {
            const SmallGraph& g = level[static_cast<std::size_t>(i)];
            for (unsigned a = 0; a < n; ++a)
                for (unsigned b = a + 1; b < n; ++b) {
                    if (g.adjacent(a, b)) continue;
                    SmallGraph h = g;
                    h.toggle(a, b);
                    if (contains(h.to_graph(), spec)) continue;
                    children[static_cast<std::size_t>(i)].push_back(canonical_form(h).graph);
                }
        }
        std::unordered_set<SmallGraph, SmallGraphHash> next;
        for (auto& list : children) next.insert(list.begin(), list.end());
        if (next.empty()) break;
        level.assign(next.begin(), next.end());
        std::sort(level.begin(), level.end());
        out.classes += level.size();
    }
    out.witness = level.front().to_graph();
    out.max_edges = out.witness.edge_count();
    return out;
}

namespace {

constexpr std::uint64_t kLocalBudget = 2'000'000;
constexpr std::uint64_t kCertifyBudget = 100'000'000;
constexpr std::uint64_t kRemovalPeriod = 50;

// Vertices within `radius` of `source`.
std::vector<bool> ball(const std::vector<std::vector<Vertex>>& adj, Vertex source, int radius) {
    std::vector<int> dist(adj.size(), -1);
    std::queue<Vertex> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop();
        if (dist[v] == radius) continue;
        for (Vertex u : adj[v])
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push(u);
            }
    }
    std::vector<bool> out(adj.size());
    for (std::size_t v = 0; v < adj.size(); ++v) out[v] = dist[v] >= 0;
    return out;
}

Graph to_graph(const std::vector<std::vector<Vertex>>& adj) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < adj.size(); ++v)
        for (Vertex u : adj[v])
            if (v < u) edges.emplace_back(v, u);
    return Graph::from_edge_list(adj.size(), edges);
}

void erase_neighbor(std::vector<Vertex>& list, Vertex v) { list.erase(std::find(list.begin(), list.end(), v)); }

}  // namespace

ExtremalResult ex_search_lower(std::size_t n, const ThetaSpec& spec, std::uint64_t budget, std::uint64_t seed) {
    if (n > kSearchMaxVertices) throw SizeLimit("search supports n <= " + std::to_string(kSearchMaxVertices));
    ExtremalResult out;
    out.n = n;
    out.spec = spec;
    out.method = ExtremalMethod::Search;
    out.seed = seed;
    out.budget = budget;
    if (n < spec.vertex_count()) {
        out.witness = complete_graph(n);
        out.max_edges = out.witness.edge_count();
        return out;
    }

    Rng rng(mix_seed(seed, 0));
    std::vector<std::vector<Vertex>> adj(n);
    std::size_t edges = 0;
    std::vector<std::vector<Vertex>> best = adj;
    std::size_t best_edges = 0;
    // A copy through the new edge {a, b} has both poles within k_l - 1 of a.
    const int radius = spec.longest() - 1;

    for (std::uint64_t move = 1; move <= budget; ++move) {
        if (move % kRemovalPeriod == 0 && edges > 0) {
            std::vector<Edge> present;
            for (Vertex v = 0; v < n; ++v)
                for (Vertex u : adj[v])
                    if (v < u) present.emplace_back(v, u);
            std::sort(present.begin(), present.end());
            const auto [v, u] = present[uniform_below(rng, present.size())];
            erase_neighbor(adj[v], u);
            erase_neighbor(adj[u], v);
            --edges;
            continue;
        }
        std::vector<Edge> missing;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                if (std::find(adj[a].begin(), adj[a].end(), b) == adj[a].end()) missing.emplace_back(a, b);
        if (missing.empty()) break;
        const auto [a, b] = missing[uniform_below(rng, missing.size())];
        adj[a].push_back(b);
        adj[b].push_back(a);
        DetectOptions opt;
        opt.budget = kLocalBudget;
        opt.pole_filter = ball(adj, a, radius);
        const DetectResult r = detect_theta(to_graph(adj), spec, opt);
        if (r.status != SearchStatus::Exhausted) {
            erase_neighbor(adj[a], b);
            erase_neighbor(adj[b], a);
            continue;
        }
        ++edges;
        if (edges > best_edges) {
            best_edges = edges;
            best = adj;
        }
    }

    out.witness = to_graph(best);
    out.max_edges = out.witness.edge_count();
    DetectOptions opt;
    opt.budget = kCertifyBudget;
    if (!detect_theta(out.witness, spec, opt).proves_free())
        throw Error("search witness could not be certified theta-free");
    return out;
}

std::vector<ScalingRow> scaling_report(const ThetaSpec& spec, const std::vector<std::uint32_t>& qs) {
    if (k_star(spec) != 4) throw PreconditionError("scaling rows need k* = 4, got spec " + spec.to_string());
    std::vector<ScalingRow> rows;
    for (std::uint32_t q : qs) {
        const IncidenceGraph ig = build_incidence_graph(q);
        ScalingRow row;
        row.q = q;
        row.n = ig.graph().vertex_count();
        row.edges = ig.graph().edge_count();
        const std::uint64_t half = row.n / 2;
        std::uint64_t root = 0;
        while ((root + 1) * (root + 1) * (root + 1) * (root + 1) <= half) ++root;
        if (root * root * root * root != half) throw RangeError("n/2 is not a fourth power");
        row.bound = half * root;
        row.ratio = Rational(static_cast<std::int64_t>(row.edges), static_cast<std::int64_t>(row.bound));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace theta
