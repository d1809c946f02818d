#pragma once

#include "theta/graph.hpp"
#include "theta/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace theta {

/// The min-degree core: repeatedly deletes vertices of degree < min_degree.
/// The result may be empty. Level-synchronous OpenMP peeling.
SubgraphView peel_to_min_degree(const Graph& g, std::size_t min_degree);

struct TreeAnchor {
    Vertex tree_vertex = 0;
    Side side = Side::Left;
};

/// Greedy tree embedding. With l = |V(tree)| - 1 the host must have minimum
/// degree >= l (PreconditionError otherwise, also when the pattern is not a
/// tree or an anchor is requested on a host without a bipartition tag).
/// Tree vertices are placed in BFS order from the anchor (or vertex 0), each
/// on the least unused neighbour of its parent's image. Returns the image of
/// every tree vertex.
std::vector<Vertex> greedy_embed_tree(const Graph& host, const Graph& tree,
                                      std::optional<TreeAnchor> anchor = std::nullopt);

/// map[i] is the host image of pattern vertex i.
bool is_injective_homomorphism(const Graph& host, const Graph& pattern, std::span<const Vertex> map);

struct Star {
    Vertex center = 0;
    std::vector<Vertex> leaves;
};

/// ceil(d / c)
std::size_t star_leaf_target(std::size_t d, std::size_t c);

/// Disjoint stars between the Left side V (centres) and the Right side W of
/// a bipartition-tagged graph. Needs |W| >= |V| d with centre degrees in
/// [d, c d]; W may hold no isolated vertex. Centres
/// are scanned in increasing order; a centre with at least ceil(d/c)
/// available neighbours takes the least of them as leaves and then its whole
/// neighbourhood is removed from W. At least ceil(|V| / (c + 1)) stars result.
std::vector<Star> extract_disjoint_stars(const Graph& bipartite, std::size_t d, std::size_t c);

struct RegularizeReport {
    std::size_t threshold = 0;  // t: kept degrees lie in [t, ratio * t]
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    std::size_t kept_edges = 0;
    std::size_t original_edges = 0;
    Rational retention{0};
    bool fallback = false;  // single edge
};

struct RegularizeResult {
    SubgraphView view;
    RegularizeReport report;
};

/// Nonempty subgraph with max/min degree <= ratio. For each dyadic t the
/// vertices with degree outside [t, ratio * t] are deleted until none remain;
/// the candidate with the most edges wins (least t on ties). Falls back to
/// the first edge when every candidate empties out. Requires ratio >= 2 and
/// at least one edge.
RegularizeResult regularize_degrees(const Graph& g, std::size_t ratio);

}  // namespace theta
