#pragma once

#include "theta/report.hpp"

#include <optional>
#include <string>

namespace theta {

/// Explicit parameters of the layered walkthrough. Thresholds are required;
/// the rest default as documented.
struct PipelineConfig {
    ThetaSpec spec;
    std::size_t theta_top = 0;
    std::size_t theta_inner = 0;
    std::uint64_t c0 = 2;
    std::uint64_t c1 = 0;  // 0 means |V(theta)|
    Vertex root = 0;
    std::optional<std::size_t> s;  // default: k1 + 1 when that is below k*, else k1
};

struct PipelineResult {
    bool ok = true;
    bool flagged = false;  // pruning left no tree whose leaves have disjoint root paths
    std::string failed_stage;  // empty when ok
    std::string message;
    std::string outcome;
    Json stages = Json::array();
    std::optional<Embedding> embedding;  // host vertex ids
};

/// Stages, in order: bfs_layers, compute_bad_sets, prune_bad_sets,
/// extract_regular_tree (ancestor-disjoint leaves), grow_regular_tree,
/// classify_strong_thick (only when k1 + 1 <= s <= k* - 1) and, when the
/// thick count exceeds (l-2) d^{s-1}, embed_theta_from_thick. A stage
/// precondition failure stops the run with ok = false. When no tree survives
/// the extraction the run ends early, flagged but ok.
PipelineResult run_layered_pipeline(const Graph& host, const PipelineConfig& config);

/// Depth used when config.s is unset.
std::size_t default_depth(const ThetaSpec& spec);

}  // namespace theta
