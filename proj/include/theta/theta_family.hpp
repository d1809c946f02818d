#pragma once

#include "theta/graph.hpp"
#include "theta/rational.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace theta {

/// Path lengths k1 <= ... <= kl of a generalized theta graph. Only
/// validate_spec() produces one, so every instance satisfies: l >= 2, all
/// lengths positive and of one parity, and the length 1 at most once.
class ThetaSpec {
public:
    [[nodiscard]] const std::vector<int>& lengths() const noexcept { return lengths_; }
    [[nodiscard]] std::size_t path_count() const noexcept { return lengths_.size(); }
    [[nodiscard]] int length(std::size_t i) const { return lengths_.at(i); }
    [[nodiscard]] int shortest() const { return lengths_.front(); }
    [[nodiscard]] int longest() const { return lengths_.back(); }

    /// 2 + sum(k_i - 1)
    [[nodiscard]] std::size_t vertex_count() const;
    /// sum(k_i)
    [[nodiscard]] std::size_t edge_count() const;

    /// "k1,k2,...,kl"
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const ThetaSpec&, const ThetaSpec&) = default;

private:
    friend ThetaSpec validate_spec(std::span<const int> lengths);
    std::vector<int> lengths_;
};

/// Throws SpecError (l < 2 or a nonpositive length), ParityError or
/// MultiplicityError.
ThetaSpec validate_spec(std::span<const int> lengths);

/// Parses "3,5,5" (whitespace tolerated) then validates. Throws SpecError on
/// malformed text.
ThetaSpec parse_spec(std::string_view text);

/// Half the least pairwise sum, (k1 + k2) / 2 for the sorted spec.
int k_star(const ThetaSpec& spec);

/// 1 + 1/k*
Rational upper_bound_exponent(const ThetaSpec& spec);

struct ThetaGraph {
    Graph graph;
    Vertex pole = 0;        // always 0
    Vertex other_pole = 1;  // always 1
    std::vector<std::vector<Vertex>> paths;  // full vertex sequences pole..other_pole, spec order
};

/// Poles are 0 and 1; internal vertices are numbered path by path in spec
/// order.
ThetaGraph build_theta(const ThetaSpec& spec);

}  // namespace theta
