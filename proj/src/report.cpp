#include "theta/report.hpp"

#include "theta/graph_io.hpp"

namespace theta {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Embedding& e) {
    return Json{{"pole", e.pole}, {"other_pole", e.other_pole}, {"paths", e.paths}};
}

Json to_json(const DetectResult& r) {
    Json j{{"status", to_string(r.status)},
           {"complete", r.complete},
           {"expansions", r.expansions},
           {"pole_pairs", r.pole_pairs},
           {"count", r.count},
           {"embedding", nullptr}};
    if (r.embedding) j["embedding"] = to_json(*r.embedding);
    if (!r.embeddings.empty()) {
        Json all = Json::array();
        for (const auto& e : r.embeddings) all.push_back(to_json(e));
        j["embeddings"] = std::move(all);
    }
    return j;
}

Json to_json(const RegularTreeCert& cert) {
    return Json{{"root", cert.root},
                {"branching", cert.branching},
                {"depth", cert.depth()},
                {"layers", cert.layers},
                {"parents", cert.parents}};
}

Json to_json(const BadSets& bad) {
    Json sizes = Json::array();
    for (std::size_t i = 1; i < bad.sets.size(); ++i) sizes.push_back(bad.sets[i].size());
    Json sets = Json::array();
    for (std::size_t i = 1; i < bad.sets.size(); ++i) sets.push_back(bad.sets[i]);
    return Json{{"s", bad.s},
                {"theta_top", bad.theta_top},
                {"theta_inner", bad.theta_inner},
                {"sizes", sizes},
                {"sets", sets}};
}

Json to_json(const ThickThinLabels& labels) {
    Json witnesses = Json::array();
    for (const auto& w : labels.witnesses) witnesses.push_back(Json{{"vertex", w.vertex}, {"paths", w.paths}});
    return Json{{"s", labels.s},
                {"branching", labels.branching},
                {"strong", labels.strong},
                {"thick", labels.thick},
                {"thin_count", labels.thin.size()},
                {"witnesses", witnesses}};
}

Json to_json(const Star& star) { return Json{{"center", star.center}, {"leaves", star.leaves}}; }

Json to_json(const RegularizeReport& r) {
    return Json{{"threshold", r.threshold},     {"min_degree", r.min_degree},
                {"max_degree", r.max_degree},   {"kept_edges", r.kept_edges},
                {"original_edges", r.original_edges}, {"retention", to_json(r.retention)},
                {"fallback", r.fallback}};
}

Json to_json(const C8Report& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations) violations.push_back(Json{{"cycle", v.cycle}, {"directions", v.directions}});
    Json j{{"mode", r.sampled ? "sampled" : "exhaustive"}, {"cycles_checked", r.cycles_checked}};
    if (r.sampled) {
        j["seed"] = r.seed;
        j["samples"] = r.samples;
    }
    j["violations"] = r.violations.size();
    j["violation_cycles"] = std::move(violations);
    return j;
}

Json to_json(const ExtremalResult& r) {
    Json j{{"n", r.n},
           {"spec", r.spec.to_string()},
           {"method", to_string(r.method)},
           {"max_edges", r.max_edges},
           {"exact", r.method == ExtremalMethod::Exhaustive},
           {"witness_graph6", encode_graph6(r.witness)}};
    if (r.method == ExtremalMethod::Search) {
        j["seed"] = r.seed;
        j["budget"] = r.budget;
    } else {
        j["classes"] = r.classes;
    }
    return j;
}

Json to_json(const ScalingRow& row) {
    return Json{{"q", row.q}, {"n", row.n}, {"edges", row.edges}, {"bound", row.bound}, {"ratio", to_json(row.ratio)}};
}

Json to_json(const TreeCheck& check) {
    Json j{{"ok", check.ok}};
    if (check.violation)
        j["violation"] = Json{{"vertex", check.violation->vertex},
                              {"layer", check.violation->layer},
                              {"reason", check.violation->reason}};
    return j;
}

Json graph_summary(const Graph& g) {
    const DegreeStats stats = degree_stats(g);
    return Json{{"vertices", g.vertex_count()},
                {"edges", g.edge_count()},
                {"min_degree", stats.min},
                {"max_degree", stats.max},
                {"mean_degree", to_json(stats.mean)}};
}

Embedding lift(const Embedding& e, const std::vector<Vertex>& to_parent) {
    Embedding out{to_parent.at(e.pole), to_parent.at(e.other_pole), e.paths};
    for (auto& path : out.paths)
        for (auto& v : path) v = to_parent.at(v);
    return out;
}

}  // namespace theta
