#include "theta/canonical.hpp"

#include "theta/error.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace theta {

SmallGraph SmallGraph::from_graph(const Graph& g) {
    if (g.vertex_count() > 16) throw SizeLimit("small graphs hold at most 16 vertices");
    SmallGraph out;
    out.n = static_cast<std::uint8_t>(g.vertex_count());
    out.rows.assign(out.n, 0);
    for (auto [a, b] : g.edges()) out.toggle(a, b);
    return out;
}

Graph SmallGraph::to_graph() const {
    std::vector<Edge> edges;
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = a + 1; b < n; ++b)
            if (adjacent(a, b)) edges.emplace_back(a, b);
    return Graph::from_edge_list(n, edges);
}

std::size_t SmallGraph::edge_count() const {
    std::size_t twice = 0;
    for (auto r : rows) twice += static_cast<std::size_t>(__builtin_popcount(r));
    return twice / 2;
}

std::size_t SmallGraphHash::operator()(const SmallGraph& g) const noexcept {
    std::size_t h = g.n;
    for (auto r : g.rows) h = h * 0x9E3779B97F4A7C15ull + r + 0x632BE59BD9B4E019ull;
    return h;
}

namespace {

using Partition = std::vector<std::vector<std::uint8_t>>;  // ordered cells

int popcount(std::uint32_t x) { return __builtin_popcount(x); }

std::uint16_t cell_mask(const std::vector<std::uint8_t>& cell) {
    std::uint16_t m = 0;
    for (auto v : cell) m = static_cast<std::uint16_t>(m | (1u << v));
    return m;
}

// Splits cells by neighbour counts into each cell until nothing changes.
// Split pieces keep the position of their parent, ordered by count.
void refine(const SmallGraph& g, Partition& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t w = 0; w < p.size() && !changed; ++w) {
            const std::uint16_t mask = cell_mask(p[w]);
            for (std::size_t x = 0; x < p.size(); ++x) {
                if (p[x].size() < 2) continue;
                std::vector<std::pair<int, std::uint8_t>> keyed;
                for (auto v : p[x]) keyed.emplace_back(popcount(g.rows[v] & mask), v);
                std::sort(keyed.begin(), keyed.end());
                if (keyed.front().first == keyed.back().first) continue;
                Partition pieces;
                for (std::size_t i = 0; i < keyed.size(); ++i) {
                    if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
                    pieces.back().push_back(keyed[i].second);
                }
                p.erase(p.begin() + static_cast<std::ptrdiff_t>(x));
                p.insert(p.begin() + static_cast<std::ptrdiff_t>(x), pieces.begin(), pieces.end());
                changed = true;
                break;
            }
        }
    }
}

struct Search {
    const SmallGraph& g;
    std::optional<SmallGraph> best;
    std::vector<std::uint8_t> best_label;
    std::vector<std::vector<std::uint8_t>> automorphisms;  // as vertex maps

    SmallGraph relabel(const std::vector<std::uint8_t>& label) const {
        SmallGraph out;
        out.n = g.n;
        out.rows.assign(g.n, 0);
        for (unsigned a = 0; a < g.n; ++a)
            for (unsigned b = 0; b < g.n; ++b)
                if (g.adjacent(a, b)) out.rows[label[a]] = static_cast<std::uint16_t>(out.rows[label[a]] | (1u << label[b]));
        return out;
    }

    void leaf(const Partition& p) {
        std::vector<std::uint8_t> label(g.n);
        for (std::size_t i = 0; i < p.size(); ++i) label[p[i][0]] = static_cast<std::uint8_t>(i);
        SmallGraph form = relabel(label);
        if (!best || form < *best) {
            best = std::move(form);
            best_label = std::move(label);
        } else if (form == *best) {
            // v -> best_label^{-1}(label[v]) preserves adjacency
            std::vector<std::uint8_t> inverse(g.n);
            for (unsigned v = 0; v < g.n; ++v) inverse[best_label[v]] = static_cast<std::uint8_t>(v);
            std::vector<std::uint8_t> gamma(g.n);
            for (unsigned v = 0; v < g.n; ++v) gamma[v] = inverse[label[v]];
            automorphisms.push_back(std::move(gamma));
        }
    }

    // Orbits of the group generated by automorphisms fixing `prefix`.
    std::vector<std::uint8_t> orbits(const std::vector<std::uint8_t>& prefix) const {
        std::vector<std::uint8_t> parent(g.n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::uint8_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : automorphisms) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](auto v) { return gamma[v] == v; });
            if (!fixes) continue;
            for (unsigned v = 0; v < g.n; ++v) {
                auto a = find(static_cast<std::uint8_t>(v));
                auto b = find(gamma[v]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (unsigned v = 0; v < g.n; ++v) parent[v] = find(static_cast<std::uint8_t>(v));
        return parent;
    }

    void run(Partition p, std::vector<std::uint8_t>& prefix) {
        refine(g, p);
        auto target = std::find_if(p.begin(), p.end(), [](const auto& c) { return c.size() > 1; });
        if (target == p.end()) {
            leaf(p);
            return;
        }
        const std::size_t at = static_cast<std::size_t>(target - p.begin());
        std::vector<std::uint8_t> cell = *target;
        std::sort(cell.begin(), cell.end());
        std::vector<std::uint8_t> done;
        for (auto v : cell) {
            const auto orbit = orbits(prefix);
            if (std::any_of(done.begin(), done.end(), [&](auto u) { return orbit[u] == orbit[v]; })) continue;
            done.push_back(v);
            Partition child = p;
            auto& c = child[at];
            c.erase(std::find(c.begin(), c.end(), v));
            child.insert(child.begin() + static_cast<std::ptrdiff_t>(at), std::vector<std::uint8_t>{v});
            prefix.push_back(v);
            run(std::move(child), prefix);
            prefix.pop_back();
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const SmallGraph& g) {
    if (g.n > 16 || g.rows.size() != g.n) throw SizeLimit("canonical form needs at most 16 vertices");
    if (g.n == 0) return {g, {}};
    Search search{g, std::nullopt, {}, {}};
    Partition p(1);
    for (unsigned v = 0; v < g.n; ++v) p[0].push_back(static_cast<std::uint8_t>(v));
    std::vector<std::uint8_t> prefix;
    search.run(std::move(p), prefix);
    return {std::move(*search.best), std::move(search.best_label)};
}

}  // namespace theta
