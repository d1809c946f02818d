#include "theta/graph.hpp"

#include "theta/error.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace theta {

struct Graph::Data {
    std::size_t n = 0;
    std::vector<std::size_t> offsets{0};
    std::vector<Vertex> targets;
    std::size_t words_per_row = 0;
    std::vector<std::uint64_t> bits;
    std::vector<Side> sides;
};

namespace {

std::shared_ptr<Graph::Data> make_data(std::vector<std::vector<Vertex>>& adjacency) {
    auto d = std::make_shared<Graph::Data>();
    d->n = adjacency.size();
    d->offsets.assign(d->n + 1, 0);
    for (std::size_t v = 0; v < d->n; ++v) d->offsets[v + 1] = d->offsets[v] + adjacency[v].size();
    d->targets.reserve(d->offsets.back());
    for (auto& row : adjacency) d->targets.insert(d->targets.end(), row.begin(), row.end());
    if (d->n <= Graph::kBitsetLimit) {
        d->words_per_row = (d->n + 63) / 64;
        d->bits.assign(d->n * d->words_per_row, 0);
        for (std::size_t v = 0; v < d->n; ++v)
            for (Vertex u : adjacency[v]) d->bits[v * d->words_per_row + u / 64] |= std::uint64_t{1} << (u % 64);
    }
    return d;
}

}  // namespace

Graph::Graph() : data_(std::make_shared<Data>()) {}

Graph::Graph(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw InvalidEdge("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint >= " +
                              std::to_string(n));
        if (u == v) throw InvalidEdge("self-loop at vertex " + std::to_string(u));
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return Graph(make_data(adj));
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adjacency) {
    const std::size_t n = adjacency.size();
    for (std::size_t v = 0; v < n; ++v) {
        auto& row = adjacency[v];
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        for (Vertex u : row) {
            if (u >= n) throw InvalidEdge("neighbour " + std::to_string(u) + " out of range");
            if (u == v) throw InvalidEdge("self-loop at vertex " + std::to_string(u));
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        for (Vertex u : adjacency[v])
            if (!std::binary_search(adjacency[u].begin(), adjacency[u].end(), static_cast<Vertex>(v)))
                throw InvalidEdge("adjacency is not symmetric at (" + std::to_string(v) + "," + std::to_string(u) + ")");
    return Graph(make_data(adjacency));
}

Graph Graph::with_sides(std::vector<Side> sides) const {
    if (sides.size() != vertex_count()) throw InvalidVertex("side table size does not match vertex count");
    for (auto [u, v] : edges())
        if (sides[u] == sides[v])
            throw InvalidEdge("edge (" + std::to_string(u) + "," + std::to_string(v) + ") joins one side");
    auto d = std::make_shared<Data>(*data_);
    d->sides = std::move(sides);
    return Graph(std::move(d));
}

std::size_t Graph::vertex_count() const noexcept { return data_->n; }

std::size_t Graph::edge_count() const noexcept { return data_->targets.size() / 2; }

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    if (v >= data_->n) throw InvalidVertex("vertex " + std::to_string(v) + " out of range");
    return {data_->targets.data() + data_->offsets[v], data_->offsets[v + 1] - data_->offsets[v]};
}

std::size_t Graph::degree(Vertex v) const { return neighbors(v).size(); }

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (u >= data_->n || v >= data_->n) return false;
    if (!data_->bits.empty())
        return (data_->bits[u * data_->words_per_row + v / 64] >> (v % 64)) & 1U;
    auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

bool Graph::has_sides() const noexcept { return !data_->sides.empty(); }

Side Graph::side(Vertex v) const {
    if (!has_sides()) throw InvalidVertex("graph carries no bipartition tag");
    return data_->sides.at(v);
}

const std::vector<Side>& Graph::sides() const noexcept { return data_->sides; }

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < data_->n; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::optional<std::vector<Side>> Graph::two_coloring() const {
    const std::size_t n = vertex_count();
    std::vector<int> color(n, -1);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex x = queue[head];
            for (Vertex y : neighbors(x)) {
                if (color[y] < 0) {
                    color[y] = 1 - color[x];
                    queue.push_back(y);
                } else if (color[y] == color[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<Side> sides(n);
    for (std::size_t v = 0; v < n; ++v) sides[v] = color[v] == 0 ? Side::Left : Side::Right;
    return sides;
}

bool operator==(const Graph& a, const Graph& b) {
    return a.data_->n == b.data_->n && a.data_->offsets == b.data_->offsets && a.data_->targets == b.data_->targets;
}

SubgraphView induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<Vertex> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    constexpr Vertex kNone = ~Vertex{0};
    std::vector<Vertex> to_child(g.vertex_count(), kNone);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (kept[i] >= g.vertex_count()) throw InvalidVertex("vertex " + std::to_string(kept[i]) + " out of range");
        to_child[kept[i]] = static_cast<Vertex>(i);
    }
    std::vector<std::vector<Vertex>> adj(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (Vertex u : g.neighbors(kept[i]))
            if (to_child[u] != kNone) adj[i].push_back(to_child[u]);
    Graph sub = Graph::from_adjacency(std::move(adj));
    if (g.has_sides()) {
        std::vector<Side> sides(kept.size());
        for (std::size_t i = 0; i < kept.size(); ++i) sides[i] = g.side(kept[i]);
        sub = sub.with_sides(std::move(sides));
    }
    return {std::move(sub), std::move(kept)};
}

const std::vector<Vertex>& LayeredGraph::layer(std::size_t i) const {
    static const std::vector<Vertex> empty;
    return i < layers.size() ? layers[i] : empty;
}

std::vector<Vertex> LayeredGraph::children(Vertex v) const {
    std::vector<Vertex> out;
    const int l = layer_of.at(v);
    if (l == kUnreached) return out;
    for (Vertex u : base.neighbors(v))
        if (layer_of[u] == l + 1) out.push_back(u);
    return out;
}

std::vector<Vertex> LayeredGraph::parents(Vertex v) const {
    std::vector<Vertex> out;
    const int l = layer_of.at(v);
    if (l <= 0) return out;
    for (Vertex u : base.neighbors(v))
        if (layer_of[u] == l - 1) out.push_back(u);
    return out;
}

LayeredGraph bfs_layers(const Graph& g, Vertex root) {
    if (root >= g.vertex_count()) throw InvalidVertex("root " + std::to_string(root) + " out of range");
    LayeredGraph lg;
    lg.base = g;
    lg.root = root;
    lg.layer_of.assign(g.vertex_count(), LayeredGraph::kUnreached);
    lg.layer_of[root] = 0;
    lg.layers.push_back({root});
    while (true) {
        std::vector<Vertex> next;
        const int depth = static_cast<int>(lg.layers.size());
        for (Vertex x : lg.layers.back())
            for (Vertex y : g.neighbors(x))
                if (lg.layer_of[y] == LayeredGraph::kUnreached) {
                    lg.layer_of[y] = depth;
                    next.push_back(y);
                }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        lg.layers.push_back(std::move(next));
    }
    return lg;
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    const std::size_t n = g.vertex_count();
    if (n == 0) return s;
    s.min = g.degree(0);
    for (Vertex v = 0; v < n; ++v) {
        s.min = std::min(s.min, g.degree(v));
        s.max = std::max(s.max, g.degree(v));
    }
    s.mean = Rational(static_cast<std::int64_t>(2 * g.edge_count()), static_cast<std::int64_t>(n));
    return s;
}

}  // namespace theta
