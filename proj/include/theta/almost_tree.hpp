#pragma once

#include "theta/detect.hpp"
#include "theta/graph.hpp"
#include "theta/theta_family.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace theta {

// Layered structures rooted at a BFS root: "children" of v in L_i are its
// neighbours in L_{i+1}, "parents" its neighbours in L_{i-1}.

struct TreeViolation {
    Vertex vertex = 0;
    int layer = 0;
    std::string reason;
};

struct TreeCheck {
    bool ok = true;
    std::optional<TreeViolation> violation;  // first one found, scanning layers upward

    explicit operator bool() const { return ok; }
};

/// Regular almost-tree of type (d, s): every vertex of L_0..L_{s-1} has
/// exactly d children, every vertex of L_1..L_{s-1} one parent, no edge lies
/// inside a layer up to L_s, and each L_1 subtree (v plus descendants down
/// to L_s) has the shape of the tree on L_0..L_{s-1}. Shapes are compared by
/// canonical rooted-tree encodings.
TreeCheck check_regular_almost_tree(const LayeredGraph& lg, std::size_t d, std::size_t s);

/// Regular tree of type (d, s): the almost-tree conditions plus a unique
/// parent for every vertex of L_s.
TreeCheck check_regular_tree(const LayeredGraph& lg, std::size_t d, std::size_t s);

/// A regular tree of type (branching, depth) inside a host. layers[0] is the
/// root; parents[i][j] is the parent of layers[i][j] (parents[0] is empty).
struct RegularTreeCert {
    Vertex root = 0;
    std::size_t branching = 0;
    std::vector<std::vector<Vertex>> layers;
    std::vector<std::vector<Vertex>> parents;

    [[nodiscard]] std::size_t depth() const { return layers.empty() ? 0 : layers.size() - 1; }
};

/// Independent validation: distinct vertices, host edges to the recorded
/// parent (which sits in the previous layer), and exactly `branching`
/// children for every vertex above the last layer.
TreeCheck validate_regular_tree_cert(const Graph& host, const RegularTreeCert& cert);

/// C'_0 from C'_s = C1 (C0^2 + 1), C'_{t-1} = 2 C'_t C0^2 (saturating).
std::uint64_t growth_constant(std::uint64_t c0, std::uint64_t c1, std::size_t s);

struct GrowResult {
    RegularTreeCert cert;       // type (branching, s + 1)
    std::uint64_t constant = 0;  // K
    std::size_t guaranteed = 0;  // ceil(d / K)
};

/// Grows a regular tree of type (d, s) into one of type (d', s + 1).
/// Preconditions (PreconditionError):
///   (A) layers 0..s form a regular tree of type (d, s);
///   (B) every vertex of L_s has between d and c0^2 d children;
///   (C) the subgraph induced by L_s and L_{s+1} has at most c1 |V| edges.
/// For a trial branching b, every L_s vertex in increasing order claims its
/// b least unclaimed children (a disjoint star); then, bottom-up, a vertex
/// survives when at least b of its children survive and keeps the first b.
/// The largest b whose root survives is returned; it is at least ceil(d/K).
GrowResult grow_regular_tree(const LayeredGraph& lg, std::size_t d, std::size_t s, std::uint64_t c0,
                             std::uint64_t c1);

/// Largest regular tree of type (b, s) on layers 0..s whose leaves have
/// between b and c0^2 b children in L_{s+1}; works on hosts where parents
/// are not unique (a child goes to the first parent that claims it).
/// nullopt when no b >= 1 works.
std::optional<RegularTreeCert> extract_regular_tree(const LayeredGraph& lg, std::size_t s, std::uint64_t c0);

/// The cert's tree edges, every host edge between the cert's last layer L_s
/// and host layer L_{s+1}, and the host edges among the L_{s+1} vertices so
/// reached. Layering it from the root gives an
/// almost-tree of type (branching, s + 1) in the relaxed sense used by
/// classify_strong_thick().
SubgraphView almost_tree_view(const LayeredGraph& lg, const RegularTreeCert& cert);

struct BadSets {
    std::size_t s = 0;
    std::size_t theta_top = 0;
    std::size_t theta_inner = 0;
    /// sets[i] is B_i for i = 1..s+1; sets[0] stays empty.
    std::vector<std::vector<Vertex>> sets;

    [[nodiscard]] std::size_t top_size() const { return sets.empty() ? 0 : sets.back().size(); }
};

/// B_{s+1}: vertices of L_{s+1} with >= theta_top parents. Then for
/// i = s..1, B_i: vertices of L_i with >= theta_inner neighbours in B_{i+1}.
BadSets compute_bad_sets(const LayeredGraph& lg, std::size_t s, std::size_t theta_top, std::size_t theta_inner);

/// Deletes every bad vertex and everything below L_{s+1}; the result is
/// re-layered from the (mapped) root.
struct PrunedLayers {
    SubgraphView view;
    LayeredGraph layers;
};
PrunedLayers prune_bad_sets(const LayeredGraph& lg, const BadSets& bad);

/// tau_t = k_1 + k_t - 2s - 1 for t = 2..l. RangeError unless
/// k_1 + 1 <= s and every tau_t >= 1.
std::vector<int> gamma_lengths(const ThetaSpec& spec, std::size_t s);

/// l - 1 disjoint paths of lengths tau_2..tau_l, numbered path by path.
Graph build_gamma_forest(const ThetaSpec& spec, std::size_t s);

struct StrongWitness {
    Vertex vertex = 0;
    /// paths[t] runs from `vertex` with tau_{t+2} edges and ends in L_s;
    /// endpoints lie in pairwise distinct L_1 subtrees.
    std::vector<std::vector<Vertex>> paths;
};

struct ThickThinLabels {
    std::size_t s = 0;
    std::size_t branching = 0;
    std::vector<Vertex> strong;  // subset of L_{s+1}
    std::vector<StrongWitness> witnesses;  // parallel to strong
    std::vector<Vertex> thick;  // L_s vertices with a strong neighbour
    std::vector<Vertex> thin;
};

/// Labels L_{s+1} strong/weak and L_s thick/thin inside the two-layer
/// subgraph on L_s and L_{s+1}. Requires layers 0..s to form a regular tree
/// of type (d, s) and s in the gamma range (RangeError).
ThickThinLabels classify_strong_thick(const LayeredGraph& lg, std::size_t d, const ThetaSpec& spec, std::size_t s);

/// (l - 2) d^{s-1}
std::uint64_t thick_bound(const ThetaSpec& spec, std::size_t d, std::size_t s);

/// Builds a theta copy from an over-threshold thick set: finds an L_{k1}
/// vertex a whose L_s descendants hold thick vertices under l - 1 distinct
/// L_{k1+1} vertices, then routes each through a strong neighbour and a
/// witness path into a fresh L_1 subtree and up to the root. The poles are a
/// and the root. PreconditionError when |thick| <= (l-2) d^{s-1} or no
/// disjoint routing exists.
Embedding embed_theta_from_thick(const LayeredGraph& lg, std::size_t d, const ThetaSpec& spec, std::size_t s,
                                 const ThickThinLabels& labels);

}  // namespace theta
