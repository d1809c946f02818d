#include "theta/pipeline.hpp"

#include "theta/error.hpp"

#include <algorithm>

namespace theta {

std::size_t default_depth(const ThetaSpec& spec) {
    const int k1 = spec.shortest();
    return static_cast<std::size_t>(k1 + 1 <= k_star(spec) - 1 ? k1 + 1 : k1);
}

namespace {

Json layer_sizes(const LayeredGraph& lg) {
    Json sizes = Json::array();
    for (const auto& layer : lg.layers) sizes.push_back(layer.size());
    return sizes;
}

}  // namespace

PipelineResult run_layered_pipeline(const Graph& host, const PipelineConfig& config) {
    PipelineResult out;
    const ThetaSpec& spec = config.spec;
    const std::size_t s = config.s.value_or(default_depth(spec));
    const std::uint64_t c1 = config.c1 == 0 ? spec.vertex_count() : config.c1;
    const int k1 = spec.shortest();
    const int kstar = k_star(spec);
    std::string stage;

    auto stage_json = [&](const char* name) -> Json& {
        stage = name;
        out.stages.push_back(Json{{"stage", name}});
        return out.stages.back();
    };

    try {
        Json& bfs = stage_json("bfs_layers");
        const LayeredGraph lg = bfs_layers(host, config.root);
        bfs["root"] = config.root;
        bfs["s"] = s;
        bfs["layer_sizes"] = layer_sizes(lg);

        Json& bad_stage = stage_json("compute_bad_sets");
        const BadSets bad = compute_bad_sets(lg, s, config.theta_top, config.theta_inner);
        bad_stage["bad_sets"] = to_json(bad);
        bad_stage["bad_sets"].erase("sets");

        Json& prune_stage = stage_json("prune_bad_sets");
        const PrunedLayers pruned = prune_bad_sets(lg, bad);
        prune_stage["vertices"] = pruned.view.graph.vertex_count();
        prune_stage["edges"] = pruned.view.graph.edge_count();
        prune_stage["layer_sizes"] = layer_sizes(pruned.layers);

        Json& extract_stage = stage_json("extract_regular_tree");
        const auto tree = extract_regular_tree(pruned.layers, s, config.c0);
        if (!tree) {
            extract_stage["flagged"] = "no ancestor-disjoint regular tree of depth " + std::to_string(s);
            out.flagged = true;
            out.outcome = "completed; ancestor-disjoint filtering failed (flagged), no embedding attempted";
            return out;
        }
        extract_stage["branching"] = tree->branching;
        extract_stage["depth"] = tree->depth();
        extract_stage["leaves"] = tree->layers.back().size();

        const SubgraphView view = almost_tree_view(pruned.layers, *tree);
        const auto root_at = std::lower_bound(view.to_parent.begin(), view.to_parent.end(), tree->root);
        const LayeredGraph vlg = bfs_layers(view.graph, static_cast<Vertex>(root_at - view.to_parent.begin()));
        std::vector<Vertex> to_host(view.to_parent.size());
        for (std::size_t i = 0; i < to_host.size(); ++i) to_host[i] = pruned.view.to_parent[view.to_parent[i]];

        Json& grow_stage = stage_json("grow_regular_tree");
        const std::size_t d = tree->branching;
        const GrowResult grown = grow_regular_tree(vlg, d, s, config.c0, c1);
        const std::size_t top = vlg.layer(s + 1).size();
        const std::size_t below = vlg.layer(s).size();
        grow_stage["d"] = d;
        grow_stage["d_prime"] = grown.cert.branching;
        grow_stage["constant"] = grown.constant;
        grow_stage["guaranteed"] = grown.guaranteed;
        grow_stage["layer_growth"] = to_json(Rational(static_cast<std::int64_t>(top), static_cast<std::int64_t>(below)));
        const TreeCheck grown_ok = validate_regular_tree_cert(view.graph, grown.cert);
        grow_stage["certificate"] = to_json(grown_ok);
        if (!grown_ok.ok) throw PreconditionError("grown certificate failed validation");

        Json& classify_stage = stage_json("classify_strong_thick");
        if (static_cast<int>(s) < k1 + 1 || static_cast<int>(s) > kstar - 1) {
            classify_stage["skipped"] = "depth outside [k1 + 1, k* - 1]";
            out.outcome = "completed; classification range is empty for this spec";
            return out;
        }
        const ThickThinLabels labels = classify_strong_thick(vlg, d, spec, s);
        const std::uint64_t bound = thick_bound(spec, d, s);
        classify_stage["strong"] = labels.strong.size();
        classify_stage["thick"] = labels.thick.size();
        classify_stage["thin"] = labels.thin.size();
        classify_stage["thick_bound"] = bound;

        if (labels.thick.size() <= bound) {
            out.outcome = "completed; thick count within bound, no embedding attempted";
            return out;
        }
        Json& embed_stage = stage_json("embed_theta_from_thick");
        const Embedding local = embed_theta_from_thick(vlg, d, spec, s, labels);
        Embedding lifted = lift(local, to_host);
        const bool verified = verify_embedding(host, spec, lifted);
        embed_stage["embedding"] = to_json(lifted);
        embed_stage["verified"] = verified;
        if (!verified) throw PreconditionError("embedding failed verification in the host");
        out.embedding = std::move(lifted);
        out.outcome = "completed; verified embedding";
    } catch (const Error& e) {
        out.ok = false;
        out.failed_stage = stage;
        out.message = e.what();
        out.outcome = "failed at " + stage;
        out.stages.back()["error"] = e.what();
    }
    return out;
}

}  // namespace theta
