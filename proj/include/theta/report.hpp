#pragma once

#include "theta/almost_tree.hpp"
#include "theta/detect.hpp"
#include "theta/extremal.hpp"
#include "theta/geometry.hpp"
#include "theta/lemmas.hpp"

#include <json.hpp>

#include <string_view>

namespace theta {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "theta_extremal";
inline constexpr std::string_view kToolVersion = "1.0.0";

// JSON views of library results. None of them carry timing or addresses, so
// equal inputs give byte-identical dumps.
Json to_json(const Rational& r);
Json to_json(const Embedding& e);
Json to_json(const DetectResult& r);
Json to_json(const RegularTreeCert& cert);
Json to_json(const BadSets& bad);
Json to_json(const ThickThinLabels& labels);
Json to_json(const Star& star);
Json to_json(const RegularizeReport& report);
Json to_json(const C8Report& report);
Json to_json(const ExtremalResult& result);
Json to_json(const ScalingRow& row);
Json to_json(const TreeCheck& check);
Json graph_summary(const Graph& g);

/// Maps every vertex id inside an embedding through `to_parent`.
Embedding lift(const Embedding& e, const std::vector<Vertex>& to_parent);

}  // namespace theta
