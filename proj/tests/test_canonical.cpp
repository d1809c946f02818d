#include "support.hpp"

#include "theta/canonical.hpp"
#include "theta/error.hpp"
#include "theta/graph_io.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

using namespace theta;

namespace {

SmallGraph relabel(const SmallGraph& g, const std::vector<unsigned>& perm) {
    SmallGraph h{g.n, std::vector<std::uint16_t>(g.n, 0)};
    for (unsigned a = 0; a < g.n; ++a)
        for (unsigned b = a + 1; b < g.n; ++b)
            if (g.adjacent(a, b)) h.toggle(perm[a], perm[b]);
    return h;
}

/// Least relabelled adjacency over all n! permutations.
SmallGraph brute_min(const SmallGraph& g) {
    std::vector<unsigned> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0u);
    SmallGraph best = g;
    do {
        best = std::min(best, relabel(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

SmallGraph from_mask(unsigned n, std::uint32_t mask) {
    SmallGraph g{static_cast<std::uint8_t>(n), std::vector<std::uint16_t>(n, 0)};
    unsigned bit = 0;
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = a + 1; b < n; ++b, ++bit)
            if (mask >> bit & 1) g.toggle(a, b);
    return g;
}

std::vector<unsigned> shuffled(unsigned n, Rng& rng) {
    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 0u);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

SmallGraph grid_graph(bool shrikhande) {
    SmallGraph g{16, std::vector<std::uint16_t>(16, 0)};
    auto id = [](int i, int j) { return static_cast<unsigned>(((i + 4) % 4) * 4 + (j + 4) % 4); };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::vector<std::pair<int, int>> steps;
            if (shrikhande)
                steps = {{1, 0}, {0, 1}, {1, 1}};
            else
                steps = {{1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 3}};
            for (auto [di, dj] : steps)
                if (!g.adjacent(id(i, j), id(i + di, j + dj))) g.toggle(id(i, j), id(i + di, j + dj));
        }
    return g;
}

}  // namespace

TEST_CASE("small graph conversions") {
    std::vector<Edge> e{{0, 1}, {1, 2}, {3, 4}};
    const Graph g = Graph::from_edge_list(5, e);
    const SmallGraph s = SmallGraph::from_graph(g);
    CHECK(s.edge_count() == 3);
    CHECK(s.adjacent(2, 1));
    CHECK_FALSE(s.adjacent(0, 2));
    CHECK(s.to_graph().edges() == g.edges());
    CHECK_THROWS_AS(SmallGraph::from_graph(Graph::from_edge_list(17, {})), SizeLimit);
}

TEST_CASE("canonical forms agree with brute-force minimisation on all 5- and 6-vertex graphs") {
    for (unsigned n : {5u, 6u}) {
        const std::uint32_t total = 1u << (n * (n - 1) / 2);
        std::set<SmallGraph> forms;
        std::set<SmallGraph> brute;
        std::map<SmallGraph, SmallGraph> pairing;  // brute -> canonical
        for (std::uint32_t mask = 0; mask < total; ++mask) {
            const SmallGraph g = from_mask(n, mask);
            const CanonicalForm c = canonical_form(g);
            const SmallGraph b = brute_min(g);
            forms.insert(c.graph);
            brute.insert(b);
            auto [it, fresh] = pairing.emplace(b, c.graph);
            REQUIRE(it->second == c.graph);
            (void)fresh;
        }
        // graph counts on 5 and 6 vertices up to isomorphism
        CHECK(brute.size() == (n == 5 ? 34u : 156u));
        CHECK(forms.size() == brute.size());
    }
}

TEST_CASE("labels map the input onto the canonical graph") {
    Rng rng(mix_seed(51, 0));
    for (int i = 0; i < 300; ++i) {
        const unsigned n = 1 + static_cast<unsigned>(uniform_below(rng, 16));
        const SmallGraph g = SmallGraph::from_graph(testing::random_graph(n, uniform_below(rng, n * (n - 1) / 2 + 1), rng));
        const CanonicalForm c = canonical_form(g);
        REQUIRE(c.label.size() == n);
        std::vector<unsigned> perm(c.label.begin(), c.label.end());
        std::vector<unsigned> sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        for (unsigned v = 0; v < n; ++v) REQUIRE(sorted[v] == v);
        REQUIRE(relabel(g, perm) == c.graph);
        // any relabelling lands on the same form
        REQUIRE(canonical_form(relabel(g, shuffled(n, rng))).graph == c.graph);
    }
}

TEST_CASE("regular graphs that refinement cannot split") {
    Rng rng(mix_seed(52, 0));
    const SmallGraph rook = grid_graph(false);
    const SmallGraph shrikhande = grid_graph(true);
    for (unsigned v = 0; v < 16; ++v) {
        REQUIRE(__builtin_popcount(rook.rows[v]) == 6);
        REQUIRE(__builtin_popcount(shrikhande.rows[v]) == 6);
    }
    const SmallGraph a = canonical_form(rook).graph;
    const SmallGraph b = canonical_form(shrikhande).graph;
    CHECK(a != b);
    for (int i = 0; i < 20; ++i) {
        CHECK(canonical_form(relabel(rook, shuffled(16, rng))).graph == a);
        CHECK(canonical_form(relabel(shrikhande, shuffled(16, rng))).graph == b);
    }

    // Petersen against the pentagonal prism, both cubic on 10 vertices
    const SmallGraph petersen = SmallGraph::from_graph(decode_graph6("IheA@GUAo"));
    std::vector<Edge> prism;
    for (Vertex i = 0; i < 5; ++i) {
        prism.emplace_back(i, (i + 1) % 5);
        prism.emplace_back(5 + i, 5 + (i + 1) % 5);
        prism.emplace_back(i, 5 + i);
    }
    const SmallGraph p = SmallGraph::from_graph(Graph::from_edge_list(10, prism));
    CHECK(canonical_form(petersen).graph != canonical_form(p).graph);
    CHECK(canonical_form(relabel(petersen, shuffled(10, rng))).graph == canonical_form(petersen).graph);
}
