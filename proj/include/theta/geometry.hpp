#pragma once

#include "theta/detect.hpp"
#include "theta/field.hpp"
#include "theta/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace theta {

/// Line {base + y * v_z : y in F_q}; base is the unique point of the line
/// with first coordinate 0.
struct Line {
    FieldElement direction;
    Vec4 base;

    friend bool operator==(const Line&, const Line&) = default;
};

/// Point-line incidence graph of the moment-curve directions over F_q^4.
/// Points take vertices 0..q^4-1 in lexicographic coordinate order; lines
/// follow, ordered by (direction, base).
class IncidenceGraph {
public:
    IncidenceGraph(Field field, Graph graph);

    [[nodiscard]] const Field& field() const noexcept { return field_; }
    [[nodiscard]] const Graph& graph() const noexcept { return graph_; }
    [[nodiscard]] std::uint32_t q() const noexcept { return field_.order(); }
    [[nodiscard]] std::size_t point_count() const noexcept { return points_; }
    [[nodiscard]] std::size_t line_count() const noexcept { return points_; }

    [[nodiscard]] bool is_point(Vertex v) const { return v < points_; }
    [[nodiscard]] Vertex point_vertex(const Vec4& x) const;
    [[nodiscard]] Vec4 point_of(Vertex v) const;
    [[nodiscard]] Vertex line_vertex(const Line& line) const;
    [[nodiscard]] Line line_of(Vertex v) const;
    [[nodiscard]] FieldElement direction_of(Vertex line) const;

    /// The line with direction z through x.
    [[nodiscard]] Line line_through(const Vec4& x, FieldElement z) const;
    [[nodiscard]] std::vector<Vec4> points_on(const Line& line) const;

private:
    Field field_;
    Graph graph_;
    std::size_t points_ = 0;
};

/// q must be a prime power <= 16 (NotPrimePower / SizeLimit).
IncidenceGraph build_incidence_graph(std::uint32_t q);

/// CSV sidecar: id,kind,z,x0,x1,x2,x3 (z empty for points; lines list base).
void write_vertex_table(std::ostream& os, const IncidenceGraph& ig);

struct C8Violation {
    std::vector<Vertex> cycle;
    std::array<std::uint32_t, 4> directions{};
};

struct C8Report {
    bool sampled = false;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    std::uint64_t cycles_checked = 0;
    std::vector<C8Violation> violations;
};

/// For an 8-cycle alternating points and lines, true iff the line
/// directions d1..d4 (in cycle order) satisfy d1 = d3, d2 = d4, d1 != d2.
bool c8_pattern_holds(const IncidenceGraph& ig, std::span<const Vertex> cycle);

/// Exhaustive: every 8-cycle in the graph.
C8Report verify_c8_exhaustive(const IncidenceGraph& ig);

/// Sampled: `count` points drawn from a seeded generator; every 8-cycle
/// through each drawn point is checked.
C8Report verify_c8_sampled(const IncidenceGraph& ig, std::uint64_t seed, std::uint64_t count);

/// 8-cycles through a vertex, canonical form, sorted.
std::vector<std::vector<Vertex>> c8_through(const Graph& g, Vertex v);

struct FreenessReport {
    std::uint32_t q = 0;
    std::uint64_t budget = 0;
    DetectResult search;

    [[nodiscard]] const char* verdict() const;
};

/// Runs the (3,5,5) search on G(q).
FreenessReport freeness_certificate(std::uint32_t q, std::uint64_t budget);

}  // namespace theta
