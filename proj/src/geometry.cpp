#include "theta/geometry.hpp"

#include "theta/error.hpp"
#include "theta/parallel.hpp"
#include "theta/random.hpp"
#include "theta/theta_family.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace theta {

namespace {

constexpr std::uint32_t kMaxConstructionOrder = 16;

std::size_t pow4(std::size_t q) { return q * q * q * q; }

}  // namespace

IncidenceGraph::IncidenceGraph(Field field, Graph graph)
    : field_(std::move(field)), graph_(std::move(graph)), points_(pow4(field_.order())) {}

Vertex IncidenceGraph::point_vertex(const Vec4& x) const {
    std::size_t code = 0;
    for (auto c : x) code = code * q() + c.code;
    return static_cast<Vertex>(code);
}

Vec4 IncidenceGraph::point_of(Vertex v) const {
    if (v >= points_) throw InvalidVertex("vertex " + std::to_string(v) + " is not a point");
    Vec4 x{};
    for (int i = 3; i >= 0; --i) {
        x[i] = {static_cast<std::uint32_t>(v % q())};
        v /= q();
    }
    return x;
}

Vertex IncidenceGraph::line_vertex(const Line& line) const {
    if (line.base[0].code != 0) throw InvalidVertex("line base must have first coordinate 0");
    const std::size_t q3 = std::size_t{q()} * q() * q();
    std::size_t code = 0;
    for (int i = 1; i < 4; ++i) code = code * q() + line.base[i].code;
    return static_cast<Vertex>(points_ + line.direction.code * q3 + code);
}

Line IncidenceGraph::line_of(Vertex v) const {
    if (v < points_ || v >= 2 * points_) throw InvalidVertex("vertex " + std::to_string(v) + " is not a line");
    std::size_t code = v - points_;
    Line line{};
    for (int i = 3; i >= 1; --i) {
        line.base[i] = {static_cast<std::uint32_t>(code % q())};
        code /= q();
    }
    line.direction = {static_cast<std::uint32_t>(code)};
    return line;
}

FieldElement IncidenceGraph::direction_of(Vertex line) const {
    if (line < points_ || line >= 2 * points_) throw InvalidVertex("vertex " + std::to_string(line) + " is not a line");
    const std::size_t q3 = std::size_t{q()} * q() * q();
    return {static_cast<std::uint32_t>((line - points_) / q3)};
}

Line IncidenceGraph::line_through(const Vec4& x, FieldElement z) const {
    const Vec4 v = moment_curve(field_, z);
    Line line{z, {}};
    for (int i = 0; i < 4; ++i) line.base[i] = field_.sub(x[i], field_.mul(x[0], v[i]));
    return line;
}

std::vector<Vec4> IncidenceGraph::points_on(const Line& line) const {
    const Vec4 v = moment_curve(field_, line.direction);
    std::vector<Vec4> out;
    out.reserve(q());
    for (std::uint32_t y = 0; y < q(); ++y) {
        Vec4 x{};
        for (int i = 0; i < 4; ++i) x[i] = field_.add(line.base[i], field_.mul({y}, v[i]));
        out.push_back(x);
    }
    return out;
}

IncidenceGraph build_incidence_graph(std::uint32_t q) {
    Field field = Field::make(q);
    if (q > kMaxConstructionOrder) throw SizeLimit("construction is limited to q <= 16");
    const std::size_t points = pow4(q);
    IncidenceGraph shell(field, Graph());
    std::vector<std::vector<Vertex>> adj(2 * points);

    const long long np = static_cast<long long>(points);
#pragma omp parallel for schedule(static) num_threads(thread_cap())
    for (long long p = 0; p < np; ++p) {
        const Vec4 x = shell.point_of(static_cast<Vertex>(p));
        auto& row = adj[static_cast<std::size_t>(p)];
        row.reserve(q);
        for (std::uint32_t z = 0; z < q; ++z) row.push_back(shell.line_vertex(shell.line_through(x, {z})));
    }
#pragma omp parallel for schedule(static) num_threads(thread_cap())
    for (long long l = 0; l < np; ++l) {
        const Vertex v = static_cast<Vertex>(points + static_cast<std::size_t>(l));
        auto& row = adj[v];
        for (const Vec4& x : shell.points_on(shell.line_of(v))) row.push_back(shell.point_vertex(x));
        std::sort(row.begin(), row.end());
    }

    std::vector<Side> sides(2 * points, Side::Right);
    std::fill(sides.begin(), sides.begin() + static_cast<std::ptrdiff_t>(points), Side::Left);
    Graph g = Graph::from_adjacency(std::move(adj)).with_sides(std::move(sides));
    return IncidenceGraph(std::move(field), std::move(g));
}

void write_vertex_table(std::ostream& os, const IncidenceGraph& ig) {
    os << "id,kind,z,x0,x1,x2,x3\n";
    for (Vertex v = 0; v < ig.graph().vertex_count(); ++v) {
        if (ig.is_point(v)) {
            const Vec4 x = ig.point_of(v);
            os << v << ",point,," << x[0].code << ',' << x[1].code << ',' << x[2].code << ',' << x[3].code << '\n';
        } else {
            const Line l = ig.line_of(v);
            os << v << ",line," << l.direction.code << ',' << l.base[0].code << ',' << l.base[1].code << ','
               << l.base[2].code << ',' << l.base[3].code << '\n';
        }
    }
}

bool c8_pattern_holds(const IncidenceGraph& ig, std::span<const Vertex> cycle) {
    if (cycle.size() != 8) return false;
    const std::size_t offset = ig.is_point(cycle[0]) ? 1 : 0;
    std::array<std::uint32_t, 4> d{};
    for (std::size_t i = 0; i < 4; ++i) {
        const Vertex line = cycle[(offset + 2 * i) % 8];
        if (ig.is_point(line)) return false;
        d[i] = ig.direction_of(line).code;
    }
    return d[0] == d[2] && d[1] == d[3] && d[0] != d[1];
}

namespace {

C8Violation violation_of(const IncidenceGraph& ig, const std::vector<Vertex>& cycle) {
    C8Violation v{cycle, {}};
    const std::size_t offset = ig.is_point(cycle[0]) ? 1 : 0;
    for (std::size_t i = 0; i < 4; ++i) {
        const Vertex line = cycle[(offset + 2 * i) % 8];
        v.directions[i] = ig.is_point(line) ? ~0U : ig.direction_of(line).code;
    }
    return v;
}

}  // namespace

C8Report verify_c8_exhaustive(const IncidenceGraph& ig) {
    C8Report report;
    const CycleList list = enumerate_cycles(ig.graph(), 8);
    report.cycles_checked = list.cycles.size();
    for (const auto& c : list.cycles)
        if (!c8_pattern_holds(ig, c)) report.violations.push_back(violation_of(ig, c));
    return report;
}

std::vector<std::vector<Vertex>> c8_through(const Graph& g, Vertex v) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> path{v};
    std::vector<std::uint8_t> on_path(g.vertex_count(), 0);
    on_path[v] = 1;
    auto dfs = [&](auto&& self, Vertex x) -> void {
        if (path.size() == 8) {
            if (path[1] < path[7] && g.adjacent(x, v)) out.push_back(canonical_cycle(path));
            return;
        }
        for (Vertex y : g.neighbors(x)) {
            if (on_path[y]) continue;
            on_path[y] = 1;
            path.push_back(y);
            self(self, y);
            path.pop_back();
            on_path[y] = 0;
        }
    };
    dfs(dfs, v);
    std::sort(out.begin(), out.end());
    return out;
}

C8Report verify_c8_sampled(const IncidenceGraph& ig, std::uint64_t seed, std::uint64_t count) {
    C8Report report;
    report.sampled = true;
    report.seed = seed;
    report.samples = count;
    std::vector<C8Report> parts(count);
    const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_cap())
    for (long long i = 0; i < n; ++i) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
        const Vertex p = static_cast<Vertex>(uniform_below(rng, ig.point_count()));
        auto& part = parts[static_cast<std::size_t>(i)];
        for (const auto& c : c8_through(ig.graph(), p)) {
            ++part.cycles_checked;
            if (!c8_pattern_holds(ig, c)) part.violations.push_back(violation_of(ig, c));
        }
    }
    for (auto& part : parts) {
        report.cycles_checked += part.cycles_checked;
        for (auto& v : part.violations) report.violations.push_back(std::move(v));
    }
    return report;
}

const char* FreenessReport::verdict() const {
    switch (search.status) {
        case SearchStatus::Found: return "copy found";
        case SearchStatus::Exhausted: return "free (exhausted)";
        case SearchStatus::Budget: return "no copy found (budget)";
    }
    return "?";
}

FreenessReport freeness_certificate(std::uint32_t q, std::uint64_t budget) {
    const IncidenceGraph ig = build_incidence_graph(q);
    const std::vector<int> lengths{3, 5, 5};
    DetectOptions options;
    options.budget = budget;
    return {q, budget, detect_theta(ig.graph(), validate_spec(lengths), options)};
}

}  // namespace theta
