#pragma once

// Plain serial versions of the parallel kernels. They share no code with
// the kernels beyond Graph and Field, and exist to be compared against them
// in tests and benchmarks.

#include "theta/detect.hpp"
#include "theta/geometry.hpp"

namespace theta::reference {

/// Every pair u < v, every path system in canonical form, no distance or
/// parity pruning and no budget. Status is Found or Exhausted.
DetectResult detect_theta(const Graph& host, const ThetaSpec& spec, SearchMode mode = SearchMode::First);

/// All closed walks without repeated vertices, canonicalized and deduplicated.
CycleList enumerate_cycles(const Graph& host, std::size_t length);

/// Edge list from the point/line formulas, one line at a time.
Graph incidence_graph(std::uint32_t q);

/// Queue-based k-core peeling; returns the surviving vertices in order.
std::vector<Vertex> min_degree_core(const Graph& g, std::size_t min_degree);

}  // namespace theta::reference
