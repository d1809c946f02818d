#include "theta/cli.hpp"

#include "theta/error.hpp"
#include "theta/graph_io.hpp"
#include "theta/pipeline.hpp"
#include "theta/reference.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace theta::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Outcome {
    Json result = Json::object();
    int code = kOk;
    std::string summary;  // first line of the text format
    std::string csv;      // only for tabular commands
};

/// Every option any command can take; a run binds only its own.
struct Options {
    std::string format = "json";
    bool schema = false;
    std::string graph;
    std::uint32_t q = 0;
    std::string spec;
    std::string out;
    std::string sidecar;
    std::string mode = "first";
    std::uint64_t budget = 100'000'000;
    std::uint64_t moves = 2000;  // extremal search budget
    std::uint64_t seed = 0;
    std::uint64_t sample = 0;
    std::size_t min_degree = 0;
    std::string tree;
    std::string tree_g6;
    std::optional<Vertex> anchor;
    std::string side = "left";
    std::size_t d = 0;
    std::size_t c = 0;
    std::size_t ratio = 0;
    Vertex root = 0;
    std::optional<std::size_t> s;
    std::uint64_t c0 = 2;
    std::uint64_t c1 = 0;
    std::size_t theta_top = 0;
    std::size_t theta_inner = 0;
    std::size_t n = 0;
    std::vector<std::uint32_t> qs;
};

using Field_ = std::pair<const char*, const char*>;  // result key, JSON type

struct Command {
    std::string name;
    CLI::App* app = nullptr;
    std::vector<Field_> fields;
    std::function<Outcome()> action;
};

void need(bool present, const char* flag) {
    if (!present) throw UsageError(std::string("missing required option ") + flag);
}

ThetaSpec spec_of(const Options& o) {
    need(!o.spec.empty(), "--spec");
    return parse_spec(o.spec);
}

struct Host {
    Graph graph;
    std::string source;
};

Host load_host(const Options& o) {
    if (o.graph.empty() == (o.q == 0)) throw UsageError("give exactly one of --graph and --q");
    if (o.q != 0) return {build_incidence_graph(o.q).graph(), "moment-curve incidence graph q=" + std::to_string(o.q)};
    Graph g = load_graph(o.graph);
    if (auto sides = g.two_coloring()) g = g.with_sides(std::move(*sides));
    return {std::move(g), o.graph};
}

Json schema_for(const Command& c) {
    Json props = Json::object();
    std::vector<std::string> keys;
    for (const auto& [key, type] : c.fields) {
        props[key] = Json{{"type", type}};
        keys.emplace_back(key);
    }
    return Json{{"$schema", "https://json-schema.org/draft/2020-12/schema"},
                {"title", std::string(kToolName) + " " + c.name + " report"},
                {"type", "object"},
                {"required", {"tool", "version", "command", "config", "result"}},
                {"properties",
                 {{"tool", {{"const", kToolName}}},
                  {"version", {{"type", "string"}}},
                  {"command", {{"const", c.name}}},
                  {"config", {{"type", "object"}, {"additionalProperties", {{"type", "string"}}}}},
                  {"exit_code", {{"type", "integer"}}},
                  {"result", {{"type", "object"}, {"required", keys}, {"properties", props}}}}}};
}

Json config_echo(const CLI::App* app) {
    Json config = Json::object();
    for (const CLI::Option* opt : app->get_options()) {
        if (opt->get_lnames().empty()) continue;
        const std::string& name = opt->get_lnames().front();
        if (name == "help" || name == "schema") continue;
        std::string value;
        if (opt->count() > 0) {
            for (const auto& r : opt->results()) value += (value.empty() ? "" : ",") + r;
        } else {
            value = opt->get_default_str();
        }
        config[name] = value;
    }
    return config;
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void write_text(std::ostream& out, const Outcome& o) {
    if (!o.summary.empty()) out << o.summary << '\n';
    for (const auto& [key, value] : o.result.items()) {
        if (key == "summary" || value.is_null() || value.is_object()) continue;
        const std::string line = key + ": " + (value.is_array() ? std::to_string(value.size()) : scalar_text(value));
        if (line != o.summary) out << line << '\n';
    }
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

// ---- commands -----------------------------------------------------------

Outcome theta_build(const Options& o) {
    const ThetaSpec spec = spec_of(o);
    const ThetaGraph t = build_theta(spec);
    if (!o.out.empty()) save_graph(o.out, t.graph);
    Outcome r;
    r.result = Json{{"spec", spec.to_string()},   {"paths", spec.path_count()},
                    {"vertices", t.graph.vertex_count()}, {"edges", t.graph.edge_count()},
                    {"poles", {t.pole, t.other_pole}},    {"path_vertices", t.paths},
                    {"graph6", encode_graph6(t.graph)}};
    return r;
}

Outcome theta_kstar(const Options& o) {
    const ThetaSpec spec = spec_of(o);
    const int k = k_star(spec);
    const Rational e = upper_bound_exponent(spec);
    Outcome r;
    r.summary = "k*=" + std::to_string(k) + ", exponent=" + to_string(e);
    r.result = Json{{"spec", spec.to_string()}, {"k_star", k}, {"exponent", to_string(e)}, {"summary", r.summary}};
    return r;
}

Outcome detect(const Options& o) {
    const ThetaSpec spec = spec_of(o);
    const Host host = load_host(o);
    DetectOptions opt;
    opt.budget = o.budget;
    opt.mode = o.mode == "count" ? SearchMode::Count : o.mode == "all" ? SearchMode::All : SearchMode::First;
    const DetectResult d = detect_theta(host.graph, spec, opt);
    Outcome r;
    Json verified = nullptr;
    if (d.embedding) {
        verified = verify_embedding(host.graph, spec, *d.embedding);
        if (!verified.get<bool>()) r.code = kVerificationFailed;
    }
    r.summary = std::string("status: ") + to_string(d.status);
    r.result = Json{{"host", host.source},
                    {"graph", graph_summary(host.graph)},
                    {"spec", spec.to_string()},
                    {"status", to_string(d.status)},
                    {"proves_free", d.proves_free()},
                    {"verified", verified},
                    {"search", to_json(d)}};
    return r;
}

Outcome construct(const Options& o) {
    need(o.q != 0, "--q");
    const IncidenceGraph ig = build_incidence_graph(o.q);
    const Graph& g = ig.graph();
    const std::uint64_t q = o.q;
    const std::uint64_t q4 = q * q * q * q;
    bool regular = true;
    for (Vertex v = 0; v < g.vertex_count(); ++v) regular = regular && g.degree(v) == q;
    // each class z holds q^3 lines and every point lies on exactly one of them
    bool classes = true;
    std::vector<std::uint64_t> class_size(q, 0);
    for (Vertex l = static_cast<Vertex>(q4); l < g.vertex_count(); ++l) ++class_size[ig.direction_of(l).code];
    for (auto size : class_size) classes = classes && size == q * q * q;
    for (Vertex p = 0; p < q4 && classes; ++p) {
        std::vector<int> seen(q, 0);
        for (Vertex l : g.neighbors(p)) ++seen[ig.direction_of(l).code];
        classes = std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; });
    }
    if (!o.out.empty()) save_graph(o.out, g);
    if (!o.sidecar.empty()) {
        std::ofstream side(o.sidecar);
        if (!side) throw UsageError("cannot write " + o.sidecar);
        write_vertex_table(side, ig);
    }
    Outcome r;
    const bool holds = ig.point_count() == q4 && ig.line_count() == q4 && g.edge_count() == q4 * q && regular && classes;
    r.code = holds ? kOk : kVerificationFailed;
    r.result = Json{{"q", q},
                    {"modulus", ig.field().modulus()},
                    {"points", ig.point_count()},
                    {"lines", ig.line_count()},
                    {"vertices", g.vertex_count()},
                    {"edges", g.edge_count()},
                    {"regular", regular},
                    {"parallel_classes_partition", classes},
                    {"identities_hold", holds}};
    return r;
}

Outcome verify_c8(const Options& o) {
    need(o.q != 0, "--q");
    const IncidenceGraph ig = build_incidence_graph(o.q);
    const C8Report report = o.sample > 0 ? verify_c8_sampled(ig, o.seed, o.sample) : verify_c8_exhaustive(ig);
    Outcome r;
    r.result = to_json(report);
    r.result["q"] = o.q;
    r.code = report.violations.empty() ? kOk : kVerificationFailed;
    return r;
}

Outcome verify_free(const Options& o) {
    need(o.q != 0, "--q");
    const FreenessReport f = freeness_certificate(o.q, o.budget);
    Outcome r;
    r.summary = std::string("verdict: ") + f.verdict();
    r.result = Json{{"q", o.q}, {"spec", "3,5,5"}, {"budget", o.budget}, {"verdict", f.verdict()},
                    {"search", to_json(f.search)}};
    r.code = f.search.found() ? kVerificationFailed : kOk;
    return r;
}

Outcome lemma_core(const Options& o) {
    need(o.min_degree > 0, "--min-degree");
    const Host host = load_host(o);
    const SubgraphView core = peel_to_min_degree(host.graph, o.min_degree);
    const DegreeStats stats = degree_stats(core.graph);
    Outcome r;
    const bool ok = core.graph.vertex_count() == 0 || stats.min >= o.min_degree;
    r.code = ok ? kOk : kVerificationFailed;
    r.result = Json{{"host", host.source},      {"min_degree", o.min_degree},
                    {"vertices", core.graph.vertex_count()}, {"edges", core.graph.edge_count()},
                    {"core_min_degree", core.graph.vertex_count() ? stats.min : 0},
                    {"empty", core.graph.vertex_count() == 0},
                    {"kept", core.to_parent}};
    return r;
}

Outcome lemma_embed_tree(const Options& o) {
    if (o.tree.empty() == o.tree_g6.empty()) throw UsageError("give exactly one of --tree and --tree-g6");
    const Host host = load_host(o);
    const Graph tree = o.tree.empty() ? decode_graph6(o.tree_g6) : load_graph(o.tree);
    std::optional<TreeAnchor> anchor;
    if (o.anchor) anchor = TreeAnchor{*o.anchor, o.side == "right" ? Side::Right : Side::Left};
    const std::vector<Vertex> map = greedy_embed_tree(host.graph, tree, anchor);
    Outcome r;
    const bool valid = is_injective_homomorphism(host.graph, tree, map);
    r.code = valid ? kOk : kVerificationFailed;
    r.result = Json{{"host", host.source}, {"tree_vertices", tree.vertex_count()}, {"map", map}, {"valid", valid}};
    if (anchor) r.result["anchor_side"] = o.side;
    return r;
}

Outcome lemma_stars(const Options& o) {
    need(o.d > 0, "--d");
    need(o.c > 0, "--c");
    const Host host = load_host(o);
    if (!host.graph.has_sides()) throw UsageError("stars need a bipartite host");
    const std::vector<Star> stars = extract_disjoint_stars(host.graph, o.d, o.c);
    std::size_t m = 0;
    for (Vertex v = 0; v < host.graph.vertex_count(); ++v) m += host.graph.side(v) == Side::Left;
    std::vector<std::uint8_t> seen(host.graph.vertex_count(), 0);
    bool disjoint = true;
    std::size_t least_leaves = stars.empty() ? 0 : stars.front().leaves.size();
    for (const Star& s : stars) {
        least_leaves = std::min(least_leaves, s.leaves.size());
        for (Vertex x : s.leaves) {
            disjoint = disjoint && !seen[x] && host.graph.adjacent(s.center, x);
            seen[x] = 1;
        }
    }
    const std::uint64_t target = ceil_div(m, o.c + 1);
    Outcome r;
    const bool ok = disjoint && stars.size() >= target && least_leaves >= star_leaf_target(o.d, o.c);
    r.code = ok ? kOk : kVerificationFailed;
    Json list = Json::array();
    for (const Star& s : stars) list.push_back(to_json(s));
    r.result = Json{{"host", host.source},          {"centres", m},
                    {"stars_found", stars.size()}, {"star_target", target},
                    {"leaf_target", star_leaf_target(o.d, o.c)}, {"disjoint", disjoint},
                    {"ok", ok},                    {"stars", list}};
    return r;
}

Outcome lemma_regularize(const Options& o) {
    need(o.ratio > 0, "--ratio");
    const Host host = load_host(o);
    const RegularizeResult res = regularize_degrees(host.graph, o.ratio);
    Outcome r;
    const bool ok = res.report.max_degree <= o.ratio * std::max<std::size_t>(res.report.min_degree, 1);
    r.code = ok ? kOk : kVerificationFailed;
    r.result = to_json(res.report);
    r.result["host"] = host.source;
    r.result["ratio"] = o.ratio;
    r.result["kept"] = res.view.to_parent;
    return r;
}

Outcome lemma_grow_tree(const Options& o) {
    need(o.d > 0, "--d");
    need(o.s.has_value(), "--s");
    need(o.c1 > 0, "--c1");
    const Host host = load_host(o);
    const LayeredGraph lg = bfs_layers(host.graph, o.root);
    const GrowResult g = grow_regular_tree(lg, o.d, *o.s, o.c0, o.c1);
    const TreeCheck check = validate_regular_tree_cert(host.graph, g.cert);
    Outcome r;
    const bool ok = check.ok && g.cert.branching >= g.guaranteed;
    r.code = ok ? kOk : kVerificationFailed;
    r.result = Json{{"host", host.source}, {"d", o.d},          {"s", *o.s},
                    {"branching", g.cert.branching}, {"constant", g.constant}, {"guaranteed", g.guaranteed},
                    {"valid", to_json(check)},       {"certificate", to_json(g.cert)}};
    return r;
}

Outcome lemma_badsets(const Options& o) {
    need(o.s.has_value(), "--s");
    need(o.theta_top > 0, "--theta-top");
    need(o.theta_inner > 0, "--theta-inner");
    const Host host = load_host(o);
    const LayeredGraph lg = bfs_layers(host.graph, o.root);
    const BadSets bad = compute_bad_sets(lg, *o.s, o.theta_top, o.theta_inner);
    Outcome r;
    r.result = to_json(bad);
    r.result["host"] = host.source;
    r.result["top_size"] = bad.top_size();
    return r;
}

Outcome lemma_classify(const Options& o) {
    const ThetaSpec spec = spec_of(o);
    need(o.d > 0, "--d");
    need(o.s.has_value(), "--s");
    const Host host = load_host(o);
    const LayeredGraph lg = bfs_layers(host.graph, o.root);
    const ThickThinLabels labels = classify_strong_thick(lg, o.d, spec, *o.s);
    Outcome r;
    r.result = to_json(labels);
    r.result["host"] = host.source;
    r.result["spec"] = spec.to_string();
    r.result["thick_count"] = labels.thick.size();
    r.result["thick_bound"] = thick_bound(spec, o.d, *o.s);
    return r;
}

Outcome lemma_embed_thick(const Options& o) {
    const ThetaSpec spec = spec_of(o);
    need(o.d > 0, "--d");
    need(o.s.has_value(), "--s");
    const Host host = load_host(o);
    const LayeredGraph lg = bfs_layers(host.graph, o.root);
    const ThickThinLabels labels = classify_strong_thick(lg, o.d, spec, *o.s);
    const Embedding e = embed_theta_from_thick(lg, o.d, spec, *o.s, labels);
    Outcome r;
    const bool verified = verify_embedding(host.graph, spec, e);
    r.code = verified ? kOk : kVerificationFailed;
    r.result = Json{{"host", host.source},
                    {"spec", spec.to_string()},
                    {"thick_count", labels.thick.size()},
                    {"thick_bound", thick_bound(spec, o.d, *o.s)},
                    {"verified", verified},
                    {"embedding", to_json(e)}};
    return r;
}

Outcome extremal_exact(const Options& o) {
    const ThetaSpec spec = spec_of(o);
    need(o.n > 0, "--n");
    const ExtremalResult res = ex_exhaustive(o.n, spec);
    Outcome r;
    r.result = to_json(res);
    r.summary = "ex(" + std::to_string(o.n) + ", theta " + spec.to_string() + ") = " + std::to_string(res.max_edges);
    return r;
}

Outcome extremal_search(const Options& o) {
    const ThetaSpec spec = spec_of(o);
    need(o.n > 0, "--n");
    const ExtremalResult res = ex_search_lower(o.n, spec, o.moves, o.seed);
    Outcome r;
    r.result = to_json(res);
    r.summary = "ex(" + std::to_string(o.n) + ", theta " + spec.to_string() + ") >= " + std::to_string(res.max_edges);
    return r;
}

Outcome extremal_scaling(const Options& o) {
    const ThetaSpec spec = spec_of(o);
    need(!o.qs.empty(), "--q");
    const std::vector<ScalingRow> rows = scaling_report(spec, o.qs);
    Outcome r;
    std::ostringstream csv;
    csv << "q,n,edges,bound,ratio\n";
    Json list = Json::array();
    bool all_one = true;
    for (const auto& row : rows) {
        csv << row.q << ',' << row.n << ',' << row.edges << ',' << row.bound << ',' << to_string(row.ratio) << '\n';
        list.push_back(to_json(row));
        all_one = all_one && row.ratio == Rational(1);
    }
    r.csv = csv.str();
    r.result = Json{{"spec", spec.to_string()}, {"all_ratios_one", all_one}, {"rows", list}};
    return r;
}

Outcome pipeline_layered(const Options& o) {
    const ThetaSpec spec = spec_of(o);
    need(o.theta_top > 0, "--theta-top");
    need(o.theta_inner > 0, "--theta-inner");
    const Host host = load_host(o);
    PipelineConfig config;
    config.spec = spec;
    config.theta_top = o.theta_top;
    config.theta_inner = o.theta_inner;
    config.c0 = o.c0;
    config.c1 = o.c1;
    config.root = o.root;
    config.s = o.s;
    const PipelineResult p = run_layered_pipeline(host.graph, config);
    Outcome r;
    r.code = p.ok ? kOk : kVerificationFailed;
    r.summary = "outcome: " + p.outcome;
    r.result = Json{{"host", host.source},
                    {"spec", spec.to_string()},
                    {"s", o.s.value_or(default_depth(spec))},
                    {"ok", p.ok},
                    {"flagged", p.flagged},
                    {"outcome", p.outcome},
                    {"failed_stage", p.failed_stage.empty() ? Json(nullptr) : Json(p.failed_stage)},
                    {"embedding", p.embedding ? to_json(*p.embedding) : Json(nullptr)},
                    {"stages", p.stages}};
    return r;
}

// ---- wiring -------------------------------------------------------------

void add_common(CLI::App* app, Options& o, bool csv = false) {
    std::vector<std::string> formats{"json", "text"};
    if (csv) formats.push_back("csv");
    app->add_option("--format", o.format, "Report format")->check(CLI::IsMember(formats));
    app->add_flag("--schema", o.schema, "Print the JSON schema of the report and exit");
}

void add_host(CLI::App* app, Options& o) {
    app->add_option("--graph", o.graph, "Host graph file (.g6/.graph6 or edge list)");
    app->add_option("--q", o.q, "Use the moment-curve incidence graph of order q");
}

void add_layered(CLI::App* app, Options& o) {
    app->add_option("--root", o.root, "BFS root");
    app->add_option("--d", o.d, "Branching of the regular tree");
    app->add_option("--s", o.s, "Tree depth s");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Generalized theta graphs: detection, constructions, lemma certificates, extremal numbers",
                 std::string(kToolName)};
    app.option_defaults()->always_capture_default();
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    std::vector<Command> commands;
    auto add = [&](CLI::App* parent, const std::string& name, const std::string& path, const std::string& help,
                   std::vector<Field_> fields, std::function<Outcome()> action) {
        CLI::App* sub = parent->add_subcommand(name, help);
        commands.push_back({path, sub, std::move(fields), std::move(action)});
        return sub;
    };

    CLI::App* theta = app.add_subcommand("theta", "Theta graph utilities")->require_subcommand(1);
    auto* sub = add(theta, "build", "theta build", "Build a theta graph",
                    {{"spec", "string"}, {"vertices", "integer"}, {"edges", "integer"}, {"graph6", "string"}},
                    [&] { return theta_build(o); });
    sub->add_option("--spec", o.spec, "Path lengths, e.g. 3,5,5");
    sub->add_option("--out", o.out, "Write the graph (.g6 or edge list)");
    add_common(sub, o);
    sub = add(theta, "kstar", "theta kstar", "Exponent parameter k* and 1 + 1/k*",
              {{"spec", "string"}, {"k_star", "integer"}, {"exponent", "string"}}, [&] { return theta_kstar(o); });
    sub->add_option("--spec", o.spec, "Path lengths");
    add_common(sub, o);

    sub = add(&app, "detect", "detect", "Search a host for a theta copy",
              {{"spec", "string"}, {"status", "string"}, {"proves_free", "boolean"}, {"search", "object"}},
              [&] { return detect(o); });
    sub->add_option("--spec", o.spec, "Path lengths");
    add_host(sub, o);
    sub->add_option("--mode", o.mode, "first, count or all")->check(CLI::IsMember({"first", "count", "all"}));
    sub->add_option("--budget", o.budget, "Node expansion budget");
    add_common(sub, o);

    sub = add(&app, "construct", "construct", "Build the moment-curve incidence graph",
              {{"q", "integer"}, {"points", "integer"}, {"lines", "integer"}, {"edges", "integer"},
               {"identities_hold", "boolean"}},
              [&] { return construct(o); });
    sub->add_option("--q", o.q, "Field order (prime power <= 16)");
    sub->add_option("--out", o.out, "Write the graph (.g6 or edge list)");
    sub->add_option("--sidecar", o.sidecar, "Write the vertex table as CSV");
    add_common(sub, o);

    CLI::App* verify = app.add_subcommand("verify", "Verify properties of the construction")->require_subcommand(1);
    sub = add(verify, "c8", "verify c8", "Check the direction pattern of every 8-cycle",
              {{"q", "integer"}, {"mode", "string"}, {"cycles_checked", "integer"}, {"violations", "integer"}},
              [&] { return verify_c8(o); });
    sub->add_option("--q", o.q, "Field order");
    sub->add_option("--sample", o.sample, "Check cycles through this many random points (0: all cycles)");
    sub->add_option("--seed", o.seed, "Sampling seed");
    add_common(sub, o);
    sub = add(verify, "free", "verify free", "Search G(q) for a theta 3,5,5 copy",
              {{"q", "integer"}, {"verdict", "string"}, {"search", "object"}}, [&] { return verify_free(o); });
    sub->add_option("--q", o.q, "Field order");
    sub->add_option("--budget", o.budget, "Node expansion budget");
    add_common(sub, o);

    CLI::App* lemma = app.add_subcommand("lemma", "Certificates for the structural lemmas")->require_subcommand(1);
    sub = add(lemma, "core", "lemma core", "Peel to a minimum-degree core",
              {{"vertices", "integer"}, {"edges", "integer"}, {"kept", "array"}}, [&] { return lemma_core(o); });
    add_host(sub, o);
    sub->add_option("--min-degree", o.min_degree, "Minimum degree l");
    add_common(sub, o);
    sub = add(lemma, "embed-tree", "lemma embed-tree", "Greedy tree embedding",
              {{"map", "array"}, {"valid", "boolean"}}, [&] { return lemma_embed_tree(o); });
    add_host(sub, o);
    sub->add_option("--tree", o.tree, "Tree file");
    sub->add_option("--tree-g6", o.tree_g6, "Tree as graph6 text");
    sub->add_option("--anchor", o.anchor, "Tree vertex to anchor");
    sub->add_option("--side", o.side, "Side for the anchor")->check(CLI::IsMember({"left", "right"}));
    add_common(sub, o);
    sub = add(lemma, "stars", "lemma stars", "Disjoint stars in a bipartite graph",
              {{"stars_found", "integer"}, {"star_target", "integer"}, {"disjoint", "boolean"}, {"stars", "array"}},
              [&] { return lemma_stars(o); });
    add_host(sub, o);
    sub->add_option("--d", o.d, "Least centre degree d");
    sub->add_option("--c", o.c, "Degree spread C");
    add_common(sub, o);
    sub = add(lemma, "regularize", "lemma regularize", "Near-regular subgraph",
              {{"threshold", "integer"}, {"min_degree", "integer"}, {"max_degree", "integer"},
               {"kept_edges", "integer"}, {"retention", "string"}},
              [&] { return lemma_regularize(o); });
    add_host(sub, o);
    sub->add_option("--ratio", o.ratio, "Allowed max/min degree ratio (>= 2)");
    add_common(sub, o);
    sub = add(lemma, "grow-tree", "lemma grow-tree", "Grow a regular tree by one layer",
              {{"branching", "integer"}, {"constant", "integer"}, {"guaranteed", "integer"}, {"certificate", "object"}},
              [&] { return lemma_grow_tree(o); });
    add_host(sub, o);
    add_layered(sub, o);
    sub->add_option("--c0", o.c0, "Degree constant C0");
    sub->add_option("--c1", o.c1, "Density constant C1");
    add_common(sub, o);
    sub = add(lemma, "badsets", "lemma badsets", "Bad sets of a BFS layering",
              {{"s", "integer"}, {"sizes", "array"}, {"sets", "array"}, {"top_size", "integer"}},
              [&] { return lemma_badsets(o); });
    add_host(sub, o);
    add_layered(sub, o);
    sub->add_option("--theta-top", o.theta_top, "Parent threshold for the top layer");
    sub->add_option("--theta-inner", o.theta_inner, "Threshold for the inner layers");
    add_common(sub, o);
    sub = add(lemma, "classify", "lemma classify", "Strong/thick labels of the top two layers",
              {{"strong", "array"}, {"thick", "array"}, {"thick_count", "integer"}, {"thick_bound", "integer"}},
              [&] { return lemma_classify(o); });
    add_host(sub, o);
    add_layered(sub, o);
    sub->add_option("--spec", o.spec, "Path lengths");
    add_common(sub, o);
    sub = add(lemma, "embed-thick", "lemma embed-thick", "Embed a theta from an over-threshold thick set",
              {{"thick_count", "integer"}, {"verified", "boolean"}, {"embedding", "object"}},
              [&] { return lemma_embed_thick(o); });
    add_host(sub, o);
    add_layered(sub, o);
    sub->add_option("--spec", o.spec, "Path lengths");
    add_common(sub, o);

    CLI::App* extremal = app.add_subcommand("extremal", "Extremal numbers")->require_subcommand(1);
    sub = add(extremal, "exact", "extremal exact", "Exact ex(n, theta) for n <= 9",
              {{"n", "integer"}, {"spec", "string"}, {"max_edges", "integer"}, {"witness_graph6", "string"}},
              [&] { return extremal_exact(o); });
    sub->add_option("--n", o.n, "Vertex count");
    sub->add_option("--spec", o.spec, "Path lengths");
    add_common(sub, o);
    sub = add(extremal, "search", "extremal search", "Seeded lower-bound search",
              {{"n", "integer"}, {"max_edges", "integer"}, {"seed", "integer"}, {"witness_graph6", "string"}},
              [&] { return extremal_search(o); });
    sub->add_option("--n", o.n, "Vertex count (<= 200)");
    sub->add_option("--spec", o.spec, "Path lengths");
    sub->add_option("--budget", o.moves, "Number of moves");
    sub->add_option("--seed", o.seed, "Seed");
    add_common(sub, o);
    sub = add(extremal, "scaling", "extremal scaling", "Edge counts of G(q) against (n/2)^(5/4)",
              {{"spec", "string"}, {"all_ratios_one", "boolean"}, {"rows", "array"}},
              [&] { return extremal_scaling(o); });
    sub->add_option("--spec", o.spec, "Path lengths (k* must be 4)");
    sub->add_option("--q", o.qs, "Field orders, comma separated")->delimiter(',');
    add_common(sub, o, true);
    sub->get_option("--format")->default_str("csv");

    CLI::App* pipeline = app.add_subcommand("pipeline", "Scripted proof walkthroughs")->require_subcommand(1);
    sub = add(pipeline, "layered", "pipeline layered",
              "Bad-set pruning, tree growth, thick/thin classification and embedding",
              {{"ok", "boolean"}, {"outcome", "string"}, {"stages", "array"}}, [&] { return pipeline_layered(o); });
    add_host(sub, o);
    sub->add_option("--spec", o.spec, "Path lengths");
    sub->add_option("--theta-top", o.theta_top, "Parent threshold for the top layer");
    sub->add_option("--theta-inner", o.theta_inner, "Threshold for the inner layers");
    sub->add_option("--c0", o.c0, "Degree constant C0");
    sub->add_option("--c1", o.c1, "Density constant C1 (0: |V(theta)|)");
    sub->add_option("--root", o.root, "BFS root");
    sub->add_option("--s", o.s, "Tree depth (default k1 + 1 when below k*, else k1)");
    add_common(sub, o);

    std::vector<std::string> storage{std::string(kToolName)};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : storage) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const Command* chosen = nullptr;
    for (const auto& c : commands)
        if (c.app->parsed()) chosen = &c;
    if (chosen == nullptr) {
        err << "no command selected\n";
        return kUsage;
    }
    if (o.schema) {
        out << schema_for(*chosen).dump(2) << '\n';
        return kOk;
    }
    // scaling defaults to CSV
    if (chosen->name == "extremal scaling" && chosen->app->get_option("--format")->count() == 0) o.format = "csv";

    Outcome outcome;
    try {
        outcome = chosen->action();
    } catch (const UsageError& e) {
        err << chosen->name << ": " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        err << chosen->name << ": precondition failed: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const Error& e) {
        err << chosen->name << ": " << e.what() << '\n';
        return kUsage;
    }

    if (o.format == "csv") {
        if (outcome.csv.empty()) {
            err << chosen->name << ": no CSV form for this report\n";
            return kUsage;
        }
        out << outcome.csv;
    } else if (o.format == "text") {
        write_text(out, outcome);
    } else {
        Json report{{"tool", kToolName},
                    {"version", kToolVersion},
                    {"command", chosen->name},
                    {"config", config_echo(chosen->app)},
                    {"exit_code", outcome.code},
                    {"result", outcome.result}};
        out << report.dump(2) << '\n';
    }
    return outcome.code;
}

}  // namespace theta::cli
