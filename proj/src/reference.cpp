#include "theta/reference.hpp"

#include "theta/error.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace theta::reference {

namespace {

struct ThetaSearch {
    const Graph& g;
    const std::vector<int>& lengths;
    SearchMode mode;
    DetectResult out;
    std::vector<std::uint8_t> used;
    std::vector<std::vector<Vertex>> paths;
    Vertex u = 0, v = 0;

    bool place(std::size_t i) {
        if (i == lengths.size()) {
            ++out.count;
            Embedding e{u, v, paths};
            if (mode == SearchMode::All) out.embeddings.push_back(e);
            if (!out.embedding) out.embedding = std::move(e);
            return mode == SearchMode::First;
        }
        paths[i].assign(1, u);
        return walk(i, u, lengths[i]);
    }

    bool walk(std::size_t i, Vertex x, int remaining) {
        auto& path = paths[i];
        ++out.expansions;
        if (remaining == 1) {
            if (!g.adjacent(x, v)) return false;
            path.push_back(v);
            const bool stop = place(i + 1);
            path.pop_back();
            return stop;
        }
        for (Vertex y : g.neighbors(x)) {
            if (used[y]) continue;
            if (path.size() == 1 && i > 0 && lengths[i] == lengths[i - 1] && y <= paths[i - 1][1]) continue;
            used[y] = 1;
            path.push_back(y);
            const bool stop = walk(i, y, remaining - 1);
            path.pop_back();
            used[y] = 0;
            if (stop) return true;
        }
        return false;
    }
};

}  // namespace

DetectResult detect_theta(const Graph& host, const ThetaSpec& spec, SearchMode mode) {
    ThetaSearch s{host, spec.lengths(), mode, {}, std::vector<std::uint8_t>(host.vertex_count(), 0),
                  std::vector<std::vector<Vertex>>(spec.path_count()), 0, 0};
    const std::size_t n = host.vertex_count();
    bool stop = false;
    for (Vertex u = 0; u < n && !stop; ++u)
        for (Vertex v = u + 1; v < n && !stop; ++v) {
            ++s.out.pole_pairs;
            s.u = u;
            s.v = v;
            s.used[u] = s.used[v] = 1;
            stop = s.place(0);
            s.used[u] = s.used[v] = 0;
        }
    s.out.status = s.out.count > 0 ? SearchStatus::Found : SearchStatus::Exhausted;
    return s.out;
}

CycleList enumerate_cycles(const Graph& host, std::size_t length) {
    if (length < 3) throw RangeError("cycle length must be at least 3");
    std::set<std::vector<Vertex>> found;
    std::vector<Vertex> path;
    std::vector<std::uint8_t> on(host.vertex_count(), 0);
    auto dfs = [&](auto&& self, Vertex x) -> void {
        if (path.size() == length) {
            if (host.adjacent(x, path.front())) found.insert(canonical_cycle(path));
            return;
        }
        for (Vertex y : host.neighbors(x)) {
            if (on[y]) continue;
            on[y] = 1;
            path.push_back(y);
            self(self, y);
            path.pop_back();
            on[y] = 0;
        }
    };
    for (Vertex s = 0; s < host.vertex_count(); ++s) {
        path.assign(1, s);
        on[s] = 1;
        dfs(dfs, s);
        on[s] = 0;
    }
    return {length, {found.begin(), found.end()}};
}

Graph incidence_graph(std::uint32_t q) {
    const Field f = Field::make(q);
    const std::size_t q3 = std::size_t{q} * q * q;
    const std::size_t points = q3 * q;
    std::vector<Edge> edges;
    for (std::uint32_t z = 0; z < q; ++z) {
        const Vec4 dir = moment_curve(f, f.element(z));
        for (std::size_t b = 0; b < q3; ++b) {
            Vec4 base{f.zero(), f.element(static_cast<std::uint32_t>(b / (q * q))),
                      f.element(static_cast<std::uint32_t>(b / q % q)), f.element(static_cast<std::uint32_t>(b % q))};
            const Vertex line = static_cast<Vertex>(points + z * q3 + b);
            for (std::uint32_t t = 0; t < q; ++t) {
                std::size_t code = 0;
                for (int i = 0; i < 4; ++i) code = code * q + f.add(base[i], f.mul(f.element(t), dir[i])).code;
                edges.emplace_back(static_cast<Vertex>(code), line);
            }
        }
    }
    return Graph::from_edge_list(2 * points, edges);
}

std::vector<Vertex> min_degree_core(const Graph& g, std::size_t min_degree) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> degree(n);
    std::vector<std::uint8_t> gone(n, 0);
    std::queue<Vertex> queue;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        if (degree[v] < min_degree) {
            gone[v] = 1;
            queue.push(v);
        }
    }
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop();
        for (Vertex u : g.neighbors(v)) {
            if (gone[u]) continue;
            if (--degree[u] < min_degree) {
                gone[u] = 1;
                queue.push(u);
            }
        }
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
        if (!gone[v]) keep.push_back(v);
    return keep;
}

}  // namespace theta::reference
