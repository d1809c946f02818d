#pragma once

#include "theta/graph.hpp"

#include <cstdint>
#include <vector>

namespace theta {

/// Dense adjacency for graphs on at most 16 vertices: bit j of rows[i] is
/// the edge {i, j}.
struct SmallGraph {
    std::uint8_t n = 0;
    std::vector<std::uint16_t> rows;

    static SmallGraph from_graph(const Graph& g);
    [[nodiscard]] Graph to_graph() const;
    [[nodiscard]] std::size_t edge_count() const;
    [[nodiscard]] bool adjacent(unsigned a, unsigned b) const { return (rows[a] >> b) & 1u; }
    void toggle(unsigned a, unsigned b) {
        rows[a] ^= static_cast<std::uint16_t>(1u << b);
        rows[b] ^= static_cast<std::uint16_t>(1u << a);
    }

    friend bool operator==(const SmallGraph&, const SmallGraph&) = default;
    friend auto operator<=>(const SmallGraph&, const SmallGraph&) = default;
};

struct SmallGraphHash {
    std::size_t operator()(const SmallGraph& g) const noexcept;
};

struct CanonicalForm {
    SmallGraph graph;                // relabelled copy, identical for isomorphic inputs
    std::vector<std::uint8_t> label;  // label[v] = position of v in the canonical order
};

/// Equitable refinement plus individualization; the least relabelled
/// adjacency over the search tree is the canonical form. Automorphisms found
/// at equal leaves prune siblings in the same orbit of the prefix stabilizer.
/// Throws SizeLimit above 16 vertices.
CanonicalForm canonical_form(const SmallGraph& g);

}  // namespace theta
