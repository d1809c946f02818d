#include "support.hpp"

#include "theta/detect.hpp"
#include "theta/error.hpp"
#include "theta/theta_family.hpp"

#include <doctest.h>

using namespace theta;

namespace {

ThetaSpec spec(std::vector<int> v) { return validate_spec(v); }

// min over pairs i < j of (k_i + k_j) / 2, straight from the definition
int kstar_oracle(const std::vector<int>& k) {
    int best = 1 << 30;
    for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = i + 1; j < k.size(); ++j) best = std::min(best, (k[i] + k[j]) / 2);
    return best;
}

}  // namespace

TEST_CASE("spec validation errors in order") {
    CHECK_THROWS_AS(spec({3}), SpecError);
    CHECK_THROWS_AS(spec({0, 2}), SpecError);
    CHECK_THROWS_AS(spec({-1, 3}), SpecError);
    CHECK_THROWS_AS(spec({2, 3}), ParityError);
    CHECK_THROWS_AS(spec({1, 1, 3}), MultiplicityError);
    CHECK_NOTHROW(spec({1, 3, 3}));
    CHECK(spec({5, 3, 5}).lengths() == std::vector<int>{3, 5, 5});
}

TEST_CASE("spec parsing") {
    CHECK(parse_spec("3,5,5") == spec({3, 5, 5}));
    CHECK(parse_spec(" 5, 3 ,5 ") == spec({3, 5, 5}));
    CHECK_THROWS_AS(parse_spec("3,,5"), SpecError);
    CHECK_THROWS_AS(parse_spec("a,b"), SpecError);
    CHECK_THROWS_AS(parse_spec("2,3"), ParityError);
    CHECK(parse_spec("3,5,5").to_string() == "3,5,5");
}

TEST_CASE("k* and the exponent") {
    CHECK(k_star(spec({3, 5, 5})) == 4);
    CHECK(upper_bound_exponent(spec({3, 5, 5})) == Rational(5, 4));
    CHECK(to_string(upper_bound_exponent(spec({3, 5, 5}))) == "5/4");
    CHECK(k_star(spec({1, 3})) == 2);
    CHECK(k_star(spec({2, 2, 2})) == 2);
    for (int k = 1; k <= 10; ++k) {
        CHECK(k_star(spec({k, k + 2})) == k + 1);
        if (k > 1) CHECK(k_star(spec({k, k})) == k);
    }
}

TEST_CASE("k* is invariant under permutation and matches the pairwise definition") {
    Rng rng(mix_seed(5, 0));
    for (int i = 0; i < 1000; ++i) {
        const std::size_t l = 2 + uniform_below(rng, 5);
        const int parity = static_cast<int>(uniform_below(rng, 2));
        std::vector<int> k;
        for (std::size_t j = 0; j < l; ++j) k.push_back(2 + parity + 2 * static_cast<int>(uniform_below(rng, 6)));
        std::vector<int> shuffled = k;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        REQUIRE(k_star(spec(k)) == k_star(spec(shuffled)));
        REQUIRE(k_star(spec(k)) == kstar_oracle(k));
        REQUIRE(upper_bound_exponent(spec(k)) == Rational(1) + Rational(1, kstar_oracle(k)));
    }
}

TEST_CASE("built theta graphs have the expected shape") {
    for (auto s : {spec({3, 5, 5}), spec({1, 3, 5}), spec({2, 2, 2, 2}), spec({2, 4})}) {
        ThetaGraph t = build_theta(s);
        CHECK(t.graph.vertex_count() == s.vertex_count());
        CHECK(t.graph.edge_count() == s.edge_count());
        CHECK(t.graph.degree(0) == s.path_count());
        CHECK(t.graph.degree(1) == s.path_count());
        for (Vertex v = 2; v < t.graph.vertex_count(); ++v) CHECK(t.graph.degree(v) == 2);
        Embedding e{t.pole, t.other_pole, t.paths};
        CHECK(verify_embedding(t.graph, s, e));
    }
    CHECK(spec({3, 5, 5}).vertex_count() == 12);
    CHECK(spec({3, 5, 5}).edge_count() == 13);
}
