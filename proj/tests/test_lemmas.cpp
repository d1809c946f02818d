#include "support.hpp"

#include "theta/error.hpp"
#include "theta/lemmas.hpp"
#include "theta/reference.hpp"

#include <doctest.h>

using namespace theta;

namespace {

Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) e.emplace_back(a, b);
    return Graph::from_edge_list(n, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Edge> e;
    std::vector<Side> sides(a + b, Side::Right);
    for (Vertex x = 0; x < a; ++x) {
        sides[x] = Side::Left;
        for (Vertex y = 0; y < b; ++y) e.emplace_back(x, static_cast<Vertex>(a + y));
    }
    return Graph::from_edge_list(a + b, e).with_sides(sides);
}

Graph star(std::size_t leaves) {
    std::vector<Edge> e;
    for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edge_list(leaves + 1, e);
}

/// Bipartite graph with explicit centre neighbourhoods; centres come first.
Graph star_host(const std::vector<std::vector<Vertex>>& nbrs, std::size_t leaves) {
    const std::size_t m = nbrs.size();
    std::vector<Edge> e;
    for (Vertex c = 0; c < m; ++c)
        for (Vertex w : nbrs[c]) e.emplace_back(c, static_cast<Vertex>(m + w));
    std::vector<Side> sides(m + leaves, Side::Right);
    std::fill(sides.begin(), sides.begin() + static_cast<std::ptrdiff_t>(m), Side::Left);
    return Graph::from_edge_list(m + leaves, e).with_sides(sides);
}

void check_stars(const Graph& g, const std::vector<Star>& stars, std::size_t m, std::size_t d, std::size_t c) {
    REQUIRE(stars.size() >= (m + c) / (c + 1));
    std::set<Vertex> seen;
    for (const Star& s : stars) {
        REQUIRE(g.side(s.center) == Side::Left);
        REQUIRE(s.leaves.size() >= star_leaf_target(d, c));
        for (Vertex w : s.leaves) {
            REQUIRE(g.adjacent(s.center, w));
            REQUIRE(seen.insert(w).second);
        }
    }
}

}  // namespace

TEST_CASE("peeling examples") {
    CHECK(peel_to_min_degree(complete(5), 2).graph.vertex_count() == 5);
    CHECK(peel_to_min_degree(star(5), 2).graph.vertex_count() == 0);
}

TEST_CASE("peeling matches queue-based reference and leaves min degree") {
    Rng rng(mix_seed(31, 0));
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 20;
        const std::size_t ell = 2 + uniform_below(rng, 2);
        const Graph g = testing::random_graph(n, ell * n + uniform_below(rng, 20), rng);
        const SubgraphView core = peel_to_min_degree(g, ell);
        REQUIRE(core.to_parent == reference::min_degree_core(g, ell));
        REQUIRE(core.graph.vertex_count() > 0);
        for (Vertex v = 0; v < core.graph.vertex_count(); ++v) REQUIRE(core.graph.degree(v) >= ell);
    }
    // sparse graphs peel differently at other thresholds too
    for (int i = 0; i < 100; ++i) {
        const Graph g = testing::random_graph(40, uniform_below(rng, 80), rng);
        for (std::size_t k = 0; k < 5; ++k) REQUIRE(peel_to_min_degree(g, k).to_parent == reference::min_degree_core(g, k));
    }
}

TEST_CASE("greedy tree embedding examples") {
    std::vector<Edge> claw{{0, 1}, {0, 2}, {0, 3}};
    const Graph k13 = Graph::from_edge_list(4, claw);
    auto map = greedy_embed_tree(complete(4), k13);
    CHECK(is_injective_homomorphism(complete(4), k13, map));

    std::vector<Edge> p4{{0, 1}, {1, 2}, {2, 3}};
    const Graph path = Graph::from_edge_list(4, p4);
    const Graph k44 = complete_bipartite(4, 4);
    for (Side side : {Side::Left, Side::Right}) {
        auto m = greedy_embed_tree(k44, path, TreeAnchor{0, side});
        CHECK(is_injective_homomorphism(k44, path, m));
        CHECK(k44.side(m[0]) == side);
    }
}

TEST_CASE("greedy tree embedding preconditions") {
    std::vector<Edge> p4{{0, 1}, {1, 2}, {2, 3}};
    const Graph path = Graph::from_edge_list(4, p4);
    std::vector<Edge> c{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    const Graph c4 = Graph::from_edge_list(4, c);
    CHECK_THROWS_AS(greedy_embed_tree(c4, path), PreconditionError);  // min degree 2 < 3
    CHECK_THROWS_AS(greedy_embed_tree(complete(5), c4), PreconditionError);  // not a tree
    CHECK_THROWS_AS(greedy_embed_tree(complete(5), path, TreeAnchor{0, Side::Left}), PreconditionError);
}

TEST_CASE("every labelled tree on up to 6 vertices embeds with either anchor side") {
    Rng rng(mix_seed(32, 0));
    for (std::size_t ell = 1; ell <= 5; ++ell) {
        // bipartite host with min degree >= ell
        Graph host;
        do {
            host = peel_to_min_degree(testing::random_bipartite(12, 12, 12 * (ell + 2), rng), ell).graph;
        } while (host.vertex_count() == 0);
        for (const Graph& tree : testing::all_labelled_trees(ell + 1)) {
            REQUIRE(is_injective_homomorphism(host, tree, greedy_embed_tree(host, tree)));
            for (Vertex a = 0; a < tree.vertex_count(); ++a)
                for (Side side : {Side::Left, Side::Right}) {
                    const auto m = greedy_embed_tree(host, tree, TreeAnchor{a, side});
                    REQUIRE(is_injective_homomorphism(host, tree, m));
                    REQUIRE(host.side(m[a]) == side);
                }
        }
    }
    // Cayley: n^(n-2) labelled trees
    CHECK(testing::all_labelled_trees(5).size() == 125);
    CHECK(testing::all_labelled_trees(6).size() == 1296);
}

TEST_CASE("stars: private leaves") {
    const Graph g = star_host({{0, 1}, {2, 3}, {4, 5}}, 6);
    const auto stars = extract_disjoint_stars(g, 2, 1);
    REQUIRE(stars.size() == 3);
    for (const auto& s : stars) CHECK(s.leaves.size() == 2);
}

TEST_CASE("stars: shared leaves, worked by hand") {
    // c0 takes {0,1} and removes 0..5; c1 has 6..9 left, takes {6,7} and
    // removes 4..9; c2 has 10, 11 left and takes them.
    const Graph g = star_host({{0, 1, 2, 3, 4, 5}, {4, 5, 6, 7, 8, 9}, {8, 9, 10, 11, 0, 1}}, 12);
    const auto stars = extract_disjoint_stars(g, 4, 2);
    REQUIRE(stars.size() == 3);
    CHECK(stars[0].leaves == std::vector<Vertex>{3, 4});
    CHECK(stars[1].leaves == std::vector<Vertex>{9, 10});
    CHECK(stars[2].leaves == std::vector<Vertex>{13, 14});
    check_stars(g, stars, 3, 4, 2);
}

TEST_CASE("stars: preconditions") {
    CHECK_THROWS_AS(extract_disjoint_stars(complete_bipartite(2, 4), 4, 1), PreconditionError);
    // a leaf without a neighbour in V
    CHECK_THROWS_AS(extract_disjoint_stars(star_host({{0, 1}}, 3), 2, 1), PreconditionError);
    // degree above C d
    CHECK_THROWS_AS(extract_disjoint_stars(star_host({{0, 1, 2}}, 3), 1, 2), PreconditionError);
}

TEST_CASE("regularize: regular graphs are kept whole") {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 10; ++i) e.emplace_back(i, (i + 1) % 10);
    const auto r = regularize_degrees(Graph::from_edge_list(10, e), 2);
    CHECK(r.report.kept_edges == 10);
    CHECK(r.report.retention == Rational(1));
    CHECK_FALSE(r.report.fallback);
    CHECK(r.report.threshold == 1);
}

TEST_CASE("regularize: star plus triangle keeps the triangle") {
    std::vector<Edge> e;
    for (Vertex i = 1; i <= 9; ++i) e.emplace_back(0, i);
    e.emplace_back(10, 11);
    e.emplace_back(11, 12);
    e.emplace_back(10, 12);
    const Graph g = Graph::from_edge_list(13, e);
    // oracle: upper bound, best edge count over all induced subgraphs with min degree >= 1
    // and max/min <= 2
    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < (1u << 13); ++mask) {
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < 13; ++v)
            if (mask >> v & 1) keep.push_back(v);
        const Graph h = induced_subgraph(g, keep).graph;
        const DegreeStats s = degree_stats(h);
        if (s.min >= 1 && s.max <= 2 * s.min) best = std::max(best, h.edge_count());
    }
    // centre with two leaves next to the triangle
    CHECK(best == 5);
    const auto r = regularize_degrees(g, 2);
    CHECK(r.report.kept_edges <= best);
    CHECK(r.report.kept_edges == 3);
    CHECK(r.view.to_parent == std::vector<Vertex>{10, 11, 12});
    CHECK(r.report.retention == Rational(3, 12));
}

TEST_CASE("regularize: ratio holds on random graphs") {
    Rng rng(mix_seed(33, 0));
    for (int i = 0; i < 100; ++i) {
        const Graph g = testing::random_graph(50, 1 + uniform_below(rng, 300), rng);
        const std::size_t ratio = 2 + uniform_below(rng, 3);
        const auto r = regularize_degrees(g, ratio);
        REQUIRE(r.view.graph.edge_count() > 0);
        const DegreeStats s = degree_stats(r.view.graph);
        REQUIRE(s.min >= 1);
        REQUIRE(s.max <= ratio * s.min);
        REQUIRE(r.report.kept_edges == r.view.graph.edge_count());
    }
    CHECK_THROWS_AS(regularize_degrees(complete(3), 1), PreconditionError);
    CHECK_THROWS_AS(regularize_degrees(Graph::from_edge_list(3, {}), 2), PreconditionError);
}
