#include "support.hpp"

#include "theta/error.hpp"
#include "theta/graph.hpp"
#include "theta/graph_io.hpp"

#include <doctest.h>

#include <sstream>

using namespace theta;

namespace {

Graph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph::from_edge_list(n, e);
}

Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) e.emplace_back(a, b);
    return Graph::from_edge_list(n, e);
}

}  // namespace

TEST_CASE("edge lists are deduplicated and validated") {
    std::vector<Edge> e{{0, 1}, {1, 0}, {1, 2}};
    Graph g = Graph::from_edge_list(3, e);
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.degree(1) == 2);

    std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph::from_edge_list(3, loop), InvalidEdge);
    std::vector<Edge> out{{0, 3}};
    CHECK_THROWS_AS(Graph::from_edge_list(3, out), InvalidEdge);
}

TEST_CASE("adjacency input must be symmetric") {
    CHECK_THROWS(Graph::from_adjacency({{1}, {}}));
    Graph g = Graph::from_adjacency({{1}, {0, 2}, {1}});
    CHECK(g.edge_count() == 2);
}

TEST_CASE("sides must form a proper bipartition") {
    Graph p = cycle(4);
    CHECK_NOTHROW((void)p.with_sides({Side::Left, Side::Right, Side::Left, Side::Right}));
    CHECK_THROWS_AS((void)p.with_sides({Side::Left, Side::Left, Side::Left, Side::Right}), InvalidEdge);
    auto coloring = p.two_coloring();
    REQUIRE(coloring);
    CHECK((*coloring)[0] == Side::Left);
    CHECK_FALSE(cycle(5).two_coloring());
}

TEST_CASE("edges come out sorted") {
    std::vector<Edge> e{{3, 2}, {0, 3}, {1, 0}};
    auto edges = Graph::from_edge_list(4, e).edges();
    CHECK(edges == std::vector<Edge>{{0, 1}, {0, 3}, {2, 3}});
}

TEST_CASE("graph6 matches networkx on fixed graphs") {
    CHECK(encode_graph6(complete(3)) == "Bw");
    CHECK(encode_graph6(complete(4)) == "C~");
    CHECK(encode_graph6(cycle(5)) == "Dhc");
    CHECK(encode_graph6(Graph::from_edge_list(0, {})) == "?");
    CHECK(encode_graph6(Graph::from_edge_list(1, {})) == "@");
    std::vector<Edge> path{{0, 1}, {1, 2}, {2, 3}};
    CHECK(encode_graph6(Graph::from_edge_list(4, path)) == "Ch");
    std::vector<Edge> petersen{{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                               {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}};
    CHECK(encode_graph6(Graph::from_edge_list(10, petersen)) == "IheA@GUAo");
    std::vector<Edge> k23{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}};
    CHECK(encode_graph6(Graph::from_edge_list(5, k23)) == "D]o");
    // 70 vertices uses the 4-byte size prefix
    CHECK(encode_graph6(cycle(70)) == "~?@EhCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_?????????G?????????@??????????C??????????G??????????G??????????C??????????@_??????????G");
    CHECK(decode_graph6("~?@EhCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_?????????G?????????@??????????C??????????G??????????G??????????C??????????@_??????????G") == cycle(70));
}

TEST_CASE("graph6 decoding") {
    CHECK(decode_graph6(">>graph6<<Bw") == complete(3));
    CHECK_THROWS_AS(decode_graph6("C"), ParseError);     // truncated
    CHECK_THROWS_AS(decode_graph6("B "), ParseError);    // byte below 63
    CHECK_THROWS_AS(decode_graph6("B\x7f"), ParseError);  // byte above 126
    CHECK_THROWS_AS(decode_graph6("Bx"), ParseError);    // nonzero padding
}

TEST_CASE("graph6 and edge-list round trips on random graphs") {
    Rng rng(mix_seed(7, 0));
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = uniform_below(rng, 90);
        const std::size_t m = n < 2 ? 0 : uniform_below(rng, n * (n - 1) / 2 + 1);
        Graph g = testing::random_graph(n, m, rng);
        REQUIRE(decode_graph6(encode_graph6(g)) == g);
        std::stringstream ss;
        write_edge_list(ss, g);
        REQUIRE(read_edge_list(ss) == g);
    }
}

TEST_CASE("malformed edge lists are rejected") {
    std::stringstream a("3 1\n0 5\n");
    CHECK_THROWS(read_edge_list(a));
    std::stringstream b("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(b), ParseError);
    std::stringstream c("x");
    CHECK_THROWS_AS(read_edge_list(c), ParseError);
}

TEST_CASE("BFS layers agree with Floyd-Warshall distances") {
    Rng rng(mix_seed(11, 0));
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + uniform_below(rng, 30);
        Graph g = testing::random_graph(n, uniform_below(rng, 2 * n + 1), rng);
        const auto dist = testing::floyd_warshall(g);
        const Vertex root = static_cast<Vertex>(uniform_below(rng, n));
        const LayeredGraph lg = bfs_layers(g, root);
        for (Vertex v = 0; v < n; ++v) REQUIRE(lg.layer_of[v] == dist[root][v]);
        for (std::size_t l = 0; l < lg.layers.size(); ++l)
            for (Vertex v : lg.layers[l]) {
                for (Vertex c : lg.children(v)) REQUIRE(dist[root][c] == static_cast<int>(l) + 1);
                for (Vertex p : lg.parents(v)) REQUIRE(dist[root][p] + 1 == static_cast<int>(l));
            }
    }
    CHECK_THROWS_AS(bfs_layers(cycle(3), 3), InvalidVertex);
}

TEST_CASE("induced subgraphs keep sides and relabel in order") {
    Graph g = cycle(6).with_sides({Side::Left, Side::Right, Side::Left, Side::Right, Side::Left, Side::Right});
    std::vector<Vertex> keep{4, 0, 1, 5};
    SubgraphView view = induced_subgraph(g, keep);
    CHECK(view.to_parent == std::vector<Vertex>{0, 1, 4, 5});
    CHECK(view.graph.edge_count() == 3);  // 0-1, 4-5, 5-0
    CHECK(view.graph.side(2) == Side::Left);
}

TEST_CASE("degree statistics are exact") {
    std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
    DegreeStats s = degree_stats(Graph::from_edge_list(4, star));
    CHECK(s.min == 1);
    CHECK(s.max == 3);
    CHECK(s.mean == Rational(3, 2));
}
