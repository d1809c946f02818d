#include "theta/theta_family.hpp"

#include "theta/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace theta {

std::size_t ThetaSpec::vertex_count() const {
    std::size_t total = 2;
    for (int k : lengths_) total += static_cast<std::size_t>(k - 1);
    return total;
}

std::size_t ThetaSpec::edge_count() const {
    return static_cast<std::size_t>(std::accumulate(lengths_.begin(), lengths_.end(), 0));
}

std::string ThetaSpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < lengths_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(lengths_[i]);
    }
    return out;
}

ThetaSpec validate_spec(std::span<const int> lengths) {
    if (lengths.size() < 2) throw SpecError("a theta graph needs at least two paths");
    for (int k : lengths)
        if (k <= 0) throw SpecError("path lengths must be positive, got " + std::to_string(k));
    const int parity = lengths.front() % 2;
    for (int k : lengths)
        if (k % 2 != parity) throw ParityError("path lengths must share parity");
    if (std::count(lengths.begin(), lengths.end(), 1) > 1) throw MultiplicityError("length 1 may appear at most once");
    ThetaSpec spec;
    spec.lengths_.assign(lengths.begin(), lengths.end());
    std::sort(spec.lengths_.begin(), spec.lengths_.end());
    return spec;
}

ThetaSpec parse_spec(std::string_view text) {
    std::vector<int> lengths;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view item = text.substr(pos, end - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
            throw SpecError("malformed spec text \"" + std::string(text) + "\"");
        lengths.push_back(value);
        pos = end + 1;
    }
    return validate_spec(lengths);
}

int k_star(const ThetaSpec& spec) { return (spec.length(0) + spec.length(1)) / 2; }

Rational upper_bound_exponent(const ThetaSpec& spec) { return Rational(1) + Rational(1, k_star(spec)); }

ThetaGraph build_theta(const ThetaSpec& spec) {
    ThetaGraph out;
    std::vector<Edge> edges;
    Vertex next = 2;
    for (int k : spec.lengths()) {
        std::vector<Vertex> path{out.pole};
        for (int i = 1; i < k; ++i) path.push_back(next++);
        path.push_back(out.other_pole);
        for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.emplace_back(path[i], path[i + 1]);
        out.paths.push_back(std::move(path));
    }
    out.graph = Graph::from_edge_list(next, edges);
    return out;
}

}  // namespace theta
