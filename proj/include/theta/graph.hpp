#pragma once

#include "theta/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace theta {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

enum class Side : std::uint8_t { Left, Right };

/// Immutable undirected simple graph on vertices 0..n-1.
///
/// Adjacency is stored as sorted neighbour lists (CSR). Graphs with at most
/// kBitsetLimit vertices also carry a bit-matrix mirror so adjacent() is O(1);
/// the mirror never takes part in equality. Copies share storage.
class Graph {
public:
    static constexpr std::size_t kBitsetLimit = 4096;

    Graph();

    /// Collapses duplicate edges. Throws InvalidEdge on self-loops or
    /// endpoints >= n.
    static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

    /// Builds from per-vertex neighbour lists, which must be symmetric.
    static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency);

    /// Same graph with a bipartition tag. Throws InvalidEdge if some edge
    /// joins two vertices of the same side.
    [[nodiscard]] Graph with_sides(std::vector<Side> sides) const;

    [[nodiscard]] std::size_t vertex_count() const noexcept;
    [[nodiscard]] std::size_t edge_count() const noexcept;
    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const;
    [[nodiscard]] std::size_t degree(Vertex v) const;
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;

    [[nodiscard]] bool has_sides() const noexcept;
    [[nodiscard]] Side side(Vertex v) const;
    [[nodiscard]] const std::vector<Side>& sides() const noexcept;

    /// Edges (u, v) with u < v, in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const;

    /// Proper 2-colouring with the least vertex of each component on Left,
    /// or nullopt when the graph has an odd cycle.
    [[nodiscard]] std::optional<std::vector<Side>> two_coloring() const;
    [[nodiscard]] bool is_bipartite() const { return two_coloring().has_value(); }

    friend bool operator==(const Graph& a, const Graph& b);

    struct Data;  // opaque storage

private:
    explicit Graph(std::shared_ptr<const Data> data);
    std::shared_ptr<const Data> data_;
};

/// Subgraph materialised with dense relabelling; to_parent maps new ids back.
struct SubgraphView {
    Graph graph;
    std::vector<Vertex> to_parent;
};

/// Induced subgraph on `keep` (any order, duplicates ignored). Vertices are
/// renumbered in increasing parent order; sides are carried over.
SubgraphView induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// A host graph plus its BFS layering from a root.
struct LayeredGraph {
    static constexpr int kUnreached = -1;

    Graph base;
    Vertex root = 0;
    std::vector<std::vector<Vertex>> layers;  // each layer sorted
    std::vector<int> layer_of;

    [[nodiscard]] std::size_t depth() const { return layers.empty() ? 0 : layers.size() - 1; }
    [[nodiscard]] const std::vector<Vertex>& layer(std::size_t i) const;
    [[nodiscard]] std::vector<Vertex> children(Vertex v) const;
    [[nodiscard]] std::vector<Vertex> parents(Vertex v) const;
};

LayeredGraph bfs_layers(const Graph& g, Vertex root);

struct DegreeStats {
    std::size_t min = 0;
    std::size_t max = 0;
    Rational mean{0};
};

DegreeStats degree_stats(const Graph& g);

}  // namespace theta
