#pragma once

#include "theta/graph.hpp"
#include "theta/theta_family.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace theta {

/// A theta copy in a host: every path runs from `pole` to `other_pole` and
/// paths[i] has spec.length(i) edges (so length(i) + 1 vertices).
struct Embedding {
    Vertex pole = 0;
    Vertex other_pole = 0;
    std::vector<std::vector<Vertex>> paths;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

enum class SearchMode { First, Count, All };

/// Found: at least one copy. Exhausted: the search completed without one,
/// which proves the host free. Budget: the node budget ran out first.
enum class SearchStatus { Found, Exhausted, Budget };

const char* to_string(SearchMode mode);
const char* to_string(SearchStatus status);

struct DetectOptions {
    SearchMode mode = SearchMode::First;
    /// Limit on search-tree node expansions (one per pole pair tried plus one
    /// per vertex appended to a partial path).
    std::uint64_t budget = 100'000'000;
    /// When non-empty, both poles must be flagged here.
    std::vector<bool> pole_filter;
};

/// Count and All enumerate copies in canonical form: pole < other_pole, and
/// among equal-length paths the second vertices increase. For l >= 3 this is
/// one record per theta subgraph.
struct DetectResult {
    SearchStatus status = SearchStatus::Exhausted;
    bool complete = true;  // false when the budget cut the search short
    std::optional<Embedding> embedding;  // least pole pair, least path system
    std::uint64_t count = 0;
    std::vector<Embedding> embeddings;  // All mode only
    std::uint64_t expansions = 0;
    std::uint64_t pole_pairs = 0;

    [[nodiscard]] bool found() const { return status == SearchStatus::Found; }
    [[nodiscard]] bool proves_free() const { return status == SearchStatus::Exhausted; }
};

/// Exact backtracking search for a theta copy. Pole pairs are examined in
/// increasing order; roots are processed in fixed-size waves across OpenMP
/// workers and merged in order, so the result (including a budget cut) does
/// not depend on the worker count.
DetectResult detect_theta(const Graph& host, const ThetaSpec& spec, const DetectOptions& options = {});

/// Independent checker: path lengths, host edges, shared poles, internal
/// disjointness, and no repeated vertex within a path.
bool verify_embedding(const Graph& host, const ThetaSpec& spec, const Embedding& embedding);

/// Distinct cycles of a fixed length, each written as its lexicographically
/// least rotation/reflection, sorted.
struct CycleList {
    std::size_t length = 0;
    std::vector<std::vector<Vertex>> cycles;
};

/// Throws RangeError when length < 3.
CycleList enumerate_cycles(const Graph& host, std::size_t length);

/// Lexicographically least rotation of the lesser orientation.
std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle);

}  // namespace theta
