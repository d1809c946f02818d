#pragma once

#include "theta/graph.hpp"
#include "theta/rational.hpp"
#include "theta/theta_family.hpp"

#include <cstdint>
#include <vector>

namespace theta {

enum class ExtremalMethod { Exhaustive, Search };
const char* to_string(ExtremalMethod method);

struct ExtremalResult {
    std::size_t n = 0;
    ThetaSpec spec;
    std::size_t max_edges = 0;  // exact for Exhaustive, a lower bound for Search
    Graph witness;
    ExtremalMethod method = ExtremalMethod::Exhaustive;
    std::uint64_t seed = 0;    // Search only
    std::uint64_t budget = 0;  // Search only: number of moves
    std::uint64_t classes = 0;  // Exhaustive only: free isomorphism classes visited
};

constexpr std::size_t kExhaustiveMaxVertices = 9;
constexpr std::size_t kSearchMaxVertices = 200;

/// Exact ex(n, spec) by edge augmentation of theta-free graphs, one edge
/// count per level, with isomorph rejection through canonical forms. The
/// witness is the least canonical form at the top level. Throws SizeLimit
/// for n > 9.
ExtremalResult ex_exhaustive(std::size_t n, const ThetaSpec& spec);

/// Seeded hill climb for a dense theta-free graph: add a random non-edge and
/// keep it when no copy runs through it, removing a random edge every 50th
/// move. The best graph is certified by an exhausted search before return.
/// Throws SizeLimit for n > 200.
ExtremalResult ex_search_lower(std::size_t n, const ThetaSpec& spec, std::uint64_t budget, std::uint64_t seed);

struct ScalingRow {
    std::uint32_t q = 0;
    std::uint64_t n = 0;      // 2 q^4
    std::uint64_t edges = 0;  // measured on the built graph
    std::uint64_t bound = 0;  // (n/2)^(5/4), exact
    Rational ratio;           // edges / bound
};

/// Rows for the moment-curve incidence graphs. Needs k* = 4 (PreconditionError);
/// NotPrimePower and SizeLimit propagate from the construction.
std::vector<ScalingRow> scaling_report(const ThetaSpec& spec, const std::vector<std::uint32_t>& qs);

}  // namespace theta
