#pragma once

// Generators and brute-force oracles shared by the unit tests and the
// acceptance binary. The oracles deliberately avoid the library's search
// code: they work from adjacency queries only.

#include "theta/almost_tree.hpp"
#include "theta/graph.hpp"
#include "theta/random.hpp"
#include "theta/theta_family.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace theta::testing {

inline Graph random_graph(std::size_t n, std::size_t m, Rng& rng) {
    std::set<Edge> edges;
    const std::size_t cap = n * (n - 1) / 2;
    m = std::min(m, cap);
    while (edges.size() < m) {
        Vertex a = static_cast<Vertex>(uniform_below(rng, n));
        Vertex b = static_cast<Vertex>(uniform_below(rng, n));
        if (a == b) continue;
        edges.insert({std::min(a, b), std::max(a, b)});
    }
    std::vector<Edge> list(edges.begin(), edges.end());
    return Graph::from_edge_list(n, list);
}

/// Random bipartite graph: vertices 0..left-1 on the Left side.
inline Graph random_bipartite(std::size_t left, std::size_t right, std::size_t m, Rng& rng) {
    std::set<Edge> edges;
    m = std::min(m, left * right);
    while (edges.size() < m) {
        Vertex a = static_cast<Vertex>(uniform_below(rng, left));
        Vertex b = static_cast<Vertex>(left + uniform_below(rng, right));
        edges.insert({a, b});
    }
    std::vector<Edge> list(edges.begin(), edges.end());
    std::vector<Side> sides(left + right, Side::Right);
    std::fill(sides.begin(), sides.begin() + static_cast<std::ptrdiff_t>(left), Side::Left);
    return Graph::from_edge_list(left + right, list).with_sides(sides);
}

/// Calls f(map) for every injective homomorphism pattern -> host, stopping
/// early when f returns true. Plain backtracking over vertex images.
inline bool for_each_injection(const Graph& host, const Graph& pattern,
                               const std::function<bool(const std::vector<Vertex>&)>& f) {
    const std::size_t k = pattern.vertex_count();
    std::vector<Vertex> map(k);
    std::vector<bool> taken(host.vertex_count(), false);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == k) return f(map);
        for (Vertex x = 0; x < host.vertex_count(); ++x) {
            if (taken[x]) continue;
            bool ok = true;
            for (Vertex j = 0; j < i && ok; ++j)
                if (pattern.adjacent(static_cast<Vertex>(i), j) && !host.adjacent(x, map[j])) ok = false;
            if (!ok) continue;
            taken[x] = true;
            map[i] = x;
            if (rec(i + 1)) return true;
            taken[x] = false;
        }
        return false;
    };
    return rec(0);
}

inline bool contains_subgraph(const Graph& host, const Graph& pattern) {
    if (pattern.vertex_count() > host.vertex_count()) return false;
    return for_each_injection(host, pattern, [](const std::vector<Vertex>&) { return true; });
}

/// Number of subgraphs of host isomorphic to pattern: injections / |Aut|.
inline std::uint64_t count_subgraphs(const Graph& host, const Graph& pattern) {
    std::uint64_t homs = 0, auts = 0;
    for_each_injection(host, pattern, [&](const std::vector<Vertex>&) {
        ++homs;
        return false;
    });
    for_each_injection(pattern, pattern, [&](const std::vector<Vertex>&) {
        ++auts;
        return false;
    });
    return homs / auts;
}

/// All-pairs distances by Floyd-Warshall (-1 for unreachable).
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (Vertex v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (Vertex u : g.neighbors(v)) d[v][u] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (auto& row : d)
        for (auto& x : row)
            if (x == inf) x = -1;
    return d;
}

/// Every labelled tree on n >= 2 vertices, from its Pruefer sequence.
inline std::vector<Graph> all_labelled_trees(std::size_t n) {
    std::vector<Graph> out;
    if (n == 1) {
        out.push_back(Graph::from_edge_list(1, {}));
        return out;
    }
    if (n == 2) {
        std::vector<Edge> e{{0, 1}};
        out.push_back(Graph::from_edge_list(2, e));
        return out;
    }
    std::vector<Vertex> seq(n - 2, 0);
    for (;;) {
        std::vector<int> degree(n, 1);
        for (Vertex x : seq) ++degree[x];
        std::vector<Edge> edges;
        for (Vertex x : seq) {
            Vertex leaf = 0;
            while (degree[leaf] != 1) ++leaf;
            edges.emplace_back(leaf, x);
            --degree[leaf];
            --degree[x];
        }
        std::vector<Vertex> last;
        for (Vertex v = 0; v < n; ++v)
            if (degree[v] == 1) last.push_back(v);
        edges.emplace_back(last[0], last[1]);
        out.push_back(Graph::from_edge_list(n, edges));
        std::size_t i = 0;
        while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
        if (i == seq.size()) break;
    }
    return out;
}

/// Explicit layered instance: a perfect d-ary tree of depth s (vertices
/// numbered breadth first from the root 0) plus extra vertices and edges.
struct LayeredFixture {
    std::size_t d = 0;
    std::size_t s = 0;
    std::vector<std::vector<Vertex>> layers;  // tree layers 0..s
    std::vector<Edge> edges;
    std::size_t n = 0;

    LayeredFixture(std::size_t d_, std::size_t s_) : d(d_), s(s_) {
        layers.push_back({0});
        n = 1;
        for (std::size_t i = 0; i < s; ++i) {
            std::vector<Vertex> next;
            for (Vertex v : layers[i])
                for (std::size_t c = 0; c < d; ++c) {
                    const Vertex child = static_cast<Vertex>(n++);
                    edges.emplace_back(v, child);
                    next.push_back(child);
                }
            layers.push_back(std::move(next));
        }
    }

    Vertex add_vertex() { return static_cast<Vertex>(n++); }
    void add_edge(Vertex a, Vertex b) { edges.emplace_back(a, b); }

    /// Index of the layer-1 subtree a leaf belongs to.
    [[nodiscard]] std::size_t block_of_leaf(std::size_t leaf_index) const {
        return leaf_index / (layers.back().size() / d);
    }

    [[nodiscard]] Graph graph() const { return Graph::from_edge_list(n, edges); }
};

/// Regular tree of type (d, s) whose leaves each get between d and c0^2 d
/// children drawn from a shared pool; satisfies grow_regular_tree's (A)(B)
/// and, with c1 >= c0^2 d, (C).
inline Graph grow_instance(std::size_t d, std::size_t s, std::uint64_t c0, std::size_t pool, Rng& rng) {
    LayeredFixture f(d, s);
    std::vector<Vertex> extra;
    for (std::size_t i = 0; i < pool; ++i) extra.push_back(f.add_vertex());
    std::vector<bool> used(pool, false);
    for (Vertex leaf : f.layers[s]) {
        const std::size_t hi = std::min<std::size_t>(c0 * c0 * d, pool);
        const std::size_t want = d + uniform_below(rng, hi - d + 1);
        std::set<std::size_t> pick;
        while (pick.size() < want) pick.insert(uniform_below(rng, pool));
        for (auto p : pick) {
            f.add_edge(leaf, extra[p]);
            used[p] = true;
        }
    }
    Graph g = f.graph();
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < f.n; ++v)
        if (v < extra.front() || used[v - extra.front()]) keep.push_back(v);
    return induced_subgraph(g, keep).graph;
}

/// Perfect d-ary tree of depth s, `privates` private children per leaf,
/// plus `cross` vertices in layer s + 1 each adjacent to one random leaf of
/// every layer-1 subtree.
inline Graph planted_cross_instance(std::size_t d, std::size_t s, std::size_t cross, Rng& rng,
                                    std::size_t privates = 1) {
    LayeredFixture f(d, s);
    const auto leaves = f.layers[s];
    for (Vertex leaf : leaves)
        for (std::size_t i = 0; i < privates; ++i) f.add_edge(leaf, f.add_vertex());
    const std::size_t per_block = leaves.size() / d;
    for (std::size_t i = 0; i < cross; ++i) {
        const Vertex w = f.add_vertex();
        for (std::size_t b = 0; b < d; ++b) f.add_edge(w, leaves[b * per_block + uniform_below(rng, per_block)]);
    }
    return f.graph();
}

/// Perfect d-ary tree of depth s, one private child per leaf, plus `cross`
/// vertices each adjacent to 1..max_hits random leaves.
inline Graph sparse_cross_instance(std::size_t d, std::size_t s, std::size_t cross, std::size_t max_hits, Rng& rng) {
    LayeredFixture f(d, s);
    const auto leaves = f.layers[s];
    for (Vertex leaf : leaves) f.add_edge(leaf, f.add_vertex());
    for (std::size_t i = 0; i < cross; ++i) {
        const Vertex w = f.add_vertex();
        const std::size_t hits = 1 + uniform_below(rng, max_hits);
        std::set<Vertex> pick;
        while (pick.size() < hits) pick.insert(leaves[uniform_below(rng, leaves.size())]);
        for (Vertex x : pick) f.add_edge(w, x);
    }
    return f.graph();
}

/// Regular almost-tree of type (d, s + 1): a perfect d-ary tree of depth s
/// whose leaves each get exactly d children in L_{s+1}. Up to `shared` of
/// those children come from a common pool, each pool vertex taking at most
/// one parent per layer-1 block; the rest are private.
inline Graph almost_tree_instance(std::size_t d, std::size_t s, std::size_t pool, std::size_t shared, Rng& rng) {
    LayeredFixture f(d, s);
    std::vector<Vertex> common;
    for (std::size_t i = 0; i < pool; ++i) common.push_back(f.add_vertex());
    std::vector<std::set<std::size_t>> blocks_of(pool);
    const auto leaves = f.layers[s];
    for (std::size_t li = 0; li < leaves.size(); ++li) {
        const std::size_t block = f.block_of_leaf(li);
        std::vector<std::size_t> open;
        for (std::size_t p = 0; p < pool; ++p)
            if (!blocks_of[p].count(block)) open.push_back(p);
        std::shuffle(open.begin(), open.end(), rng);
        const std::size_t want = std::min(open.size(), uniform_below(rng, std::min(shared, d) + 1));
        for (std::size_t i = 0; i < want; ++i) {
            f.add_edge(leaves[li], common[open[i]]);
            blocks_of[open[i]].insert(block);
        }
        for (std::size_t i = want; i < d; ++i) f.add_edge(leaves[li], f.add_vertex());
    }
    Graph g = f.graph();
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < f.n; ++v)
        if (g.degree(v) > 0) keep.push_back(v);
    return induced_subgraph(g, keep).graph;
}

/// Brute-force strong test: internally disjoint paths from v inside the
/// two-layer graph with the given lengths, ending in L_s in pairwise distinct
/// layer-1 subtrees. Tries every assignment of ordered path tuples.
inline bool strong_oracle(const LayeredGraph& lg, Vertex v, std::size_t s, const std::vector<int>& tau) {
    const int S = static_cast<int>(s);
    auto in_two = [&](Vertex x) { return lg.layer_of[x] == S || lg.layer_of[x] == S + 1; };
    auto block = [&](Vertex x) {
        while (lg.layer_of[x] > 1) x = lg.parents(x).front();
        return x;
    };
    // all simple paths from v of each length, ending in L_s
    std::vector<std::vector<std::vector<Vertex>>> options(tau.size());
    for (std::size_t t = 0; t < tau.size(); ++t) {
        std::vector<Vertex> path{v};
        std::function<void()> rec = [&] {
            if (path.size() == static_cast<std::size_t>(tau[t]) + 1) {
                if (lg.layer_of[path.back()] == S) options[t].push_back(path);
                return;
            }
            for (Vertex y : lg.base.neighbors(path.back())) {
                if (!in_two(y) || std::find(path.begin(), path.end(), y) != path.end()) continue;
                path.push_back(y);
                rec();
                path.pop_back();
            }
        };
        rec();
    }
    std::vector<const std::vector<Vertex>*> chosen;
    std::function<bool(std::size_t)> pick = [&](std::size_t t) -> bool {
        if (t == tau.size()) return true;
        for (const auto& p : options[t]) {
            bool ok = true;
            for (const auto* q : chosen) {
                if (block(q->back()) == block(p.back())) ok = false;
                for (std::size_t i = 1; i < p.size() && ok; ++i)
                    if (std::find(q->begin() + 1, q->end(), p[i]) != q->end()) ok = false;
            }
            if (!ok) continue;
            chosen.push_back(&p);
            if (pick(t + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return pick(0);
}

}  // namespace theta::testing
