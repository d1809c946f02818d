#include "theta/almost_tree.hpp"

#include "theta/error.hpp"
#include "theta/parallel.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace theta {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

TreeCheck fail(Vertex v, int layer, std::string reason) {
    return TreeCheck{false, TreeViolation{v, layer, std::move(reason)}};
}

int layer_of(const LayeredGraph& lg, Vertex v) { return lg.layer_of.at(v); }

// AHU encoding of the downward tree below x, down to absolute layer `last`.
// Returns false when some vertex is reached twice (the subgraph is no tree).
bool encode_down(const LayeredGraph& lg, Vertex x, int last, std::vector<std::uint8_t>& seen, std::string& out) {
    if (seen[x]) return false;
    seen[x] = 1;
    std::vector<std::string> parts;
    if (layer_of(lg, x) < last) {
        for (Vertex c : lg.children(x)) {
            std::string sub;
            if (!encode_down(lg, c, last, seen, sub)) return false;
            parts.push_back(std::move(sub));
        }
    }
    std::sort(parts.begin(), parts.end());
    out = "(";
    for (auto& p : parts) out += p;
    out += ")";
    return true;
}

Vertex unique_parent(const LayeredGraph& lg, Vertex v) {
    auto ps = lg.parents(v);
    if (ps.size() != 1) throw PreconditionError("vertex " + std::to_string(v) + " has no unique parent");
    return ps.front();
}

Vertex ancestor_at(const LayeredGraph& lg, Vertex v, int layer) {
    while (layer_of(lg, v) > layer) v = unique_parent(lg, v);
    return v;
}

void require(const TreeCheck& check, const std::string& what) {
    if (!check.ok)
        throw PreconditionError(what + ": " + check.violation->reason + " at vertex " +
                                std::to_string(check.violation->vertex) + " (layer " +
                                std::to_string(check.violation->layer) + ")");
}

}  // namespace

TreeCheck check_regular_almost_tree(const LayeredGraph& lg, std::size_t d, std::size_t s) {
    const int S = static_cast<int>(s);
    for (int i = 0; i <= S; ++i) {
        for (Vertex v : lg.layer(static_cast<std::size_t>(i))) {
            for (Vertex u : lg.base.neighbors(v))
                if (layer_of(lg, u) == i) return fail(v, i, "edge inside layer");
            if (i < S && lg.children(v).size() != d)
                return fail(v, i, "has " + std::to_string(lg.children(v).size()) + " children, expected " +
                                      std::to_string(d));
            if (i >= 1 && i < S && lg.parents(v).size() != 1)
                return fail(v, i, "has " + std::to_string(lg.parents(v).size()) + " parents");
        }
    }
    if (S < 1) return {};

    std::vector<std::uint8_t> seen(lg.base.vertex_count(), 0);
    std::string reference;
    if (!encode_down(lg, lg.root, S - 1, seen, reference)) return fail(lg.root, 0, "upper layers are not a tree");
    for (Vertex v1 : lg.layer(1)) {
        std::fill(seen.begin(), seen.end(), 0);
        std::string shape;
        if (!encode_down(lg, v1, S, seen, shape) || shape != reference)
            return fail(v1, 1, "subtree shape differs from the tree on layers 0..s-1");
    }
    return {};
}

TreeCheck check_regular_tree(const LayeredGraph& lg, std::size_t d, std::size_t s) {
    TreeCheck check = check_regular_almost_tree(lg, d, s);
    if (!check.ok) return check;
    if (s >= 1)
        for (Vertex v : lg.layer(s))
            if (lg.parents(v).size() != 1)
                return fail(v, static_cast<int>(s), "has " + std::to_string(lg.parents(v).size()) + " parents");
    return check;
}

TreeCheck validate_regular_tree_cert(const Graph& host, const RegularTreeCert& cert) {
    if (cert.layers.empty() || cert.layers[0] != std::vector<Vertex>{cert.root})
        return fail(cert.root, 0, "layer 0 must hold exactly the root");
    if (cert.parents.size() != cert.layers.size()) return fail(cert.root, 0, "parent table has the wrong shape");
    std::map<Vertex, int> layer;
    std::map<Vertex, std::size_t> children;
    for (std::size_t i = 0; i < cert.layers.size(); ++i) {
        if (i > 0 && cert.parents[i].size() != cert.layers[i].size())
            return fail(cert.root, static_cast<int>(i), "parent table has the wrong shape");
        for (Vertex v : cert.layers[i]) {
            if (v >= host.vertex_count()) return fail(v, static_cast<int>(i), "vertex out of range");
            if (!layer.emplace(v, static_cast<int>(i)).second) return fail(v, static_cast<int>(i), "repeated vertex");
        }
    }
    for (std::size_t i = 1; i < cert.layers.size(); ++i) {
        for (std::size_t j = 0; j < cert.layers[i].size(); ++j) {
            const Vertex v = cert.layers[i][j];
            const Vertex p = cert.parents[i][j];
            auto it = layer.find(p);
            if (it == layer.end() || it->second != static_cast<int>(i) - 1)
                return fail(v, static_cast<int>(i), "parent is not in the previous layer");
            if (!host.adjacent(v, p)) return fail(v, static_cast<int>(i), "parent edge missing from host");
            ++children[p];
        }
    }
    for (std::size_t i = 0; i + 1 < cert.layers.size(); ++i)
        for (Vertex v : cert.layers[i])
            if (children[v] != cert.branching)
                return fail(v, static_cast<int>(i), "has " + std::to_string(children[v]) + " children, expected " +
                                                        std::to_string(cert.branching));
    return {};
}

std::uint64_t growth_constant(std::uint64_t c0, std::uint64_t c1, std::size_t s) {
    const std::uint64_t c0sq = sat_mul(c0, c0);
    std::uint64_t k = sat_mul(c1, c0sq == kSaturated ? kSaturated : c0sq + 1);
    for (std::size_t t = 0; t < s; ++t) k = sat_mul(k, sat_mul(2, c0sq));
    return k;
}

namespace {

// Top-down certificate from per-vertex kept children.
RegularTreeCert assemble(Vertex root, std::size_t b, std::size_t depth,
                         const std::map<Vertex, std::vector<Vertex>>& kept) {
    RegularTreeCert cert;
    cert.root = root;
    cert.branching = b;
    cert.layers.push_back({root});
    cert.parents.emplace_back();
    for (std::size_t i = 0; i < depth; ++i) {
        std::vector<Vertex> next;
        std::vector<Vertex> next_parents;
        for (Vertex v : cert.layers[i])
            for (Vertex c : kept.at(v)) {
                next.push_back(c);
                next_parents.push_back(v);
            }
        cert.layers.push_back(std::move(next));
        cert.parents.push_back(std::move(next_parents));
    }
    return cert;
}

}  // namespace

GrowResult grow_regular_tree(const LayeredGraph& lg, std::size_t d, std::size_t s, std::uint64_t c0,
                             std::uint64_t c1) {
    if (d == 0 || c0 == 0 || c1 == 0) throw PreconditionError("d, C0 and C1 must be positive");
    require(check_regular_tree(lg, d, s), "condition (A)");
    const std::uint64_t upper = sat_mul(sat_mul(c0, c0), d);
    for (Vertex v : lg.layer(s)) {
        const std::size_t c = lg.children(v).size();
        if (c < d || c > upper)
            throw PreconditionError("condition (B): vertex " + std::to_string(v) + " has " + std::to_string(c) +
                                    " children");
    }
    std::size_t h_vertices = lg.layer(s).size() + lg.layer(s + 1).size();
    std::size_t h_edges = 0;
    for (std::size_t i : {s, s + 1})
        for (Vertex v : lg.layer(i))
            for (Vertex u : lg.base.neighbors(v)) {
                const int lu = layer_of(lg, u);
                if ((lu == static_cast<int>(s) || lu == static_cast<int>(s) + 1) && v < u) ++h_edges;
            }
    if (h_edges > sat_mul(c1, h_vertices))
        throw PreconditionError("condition (C): " + std::to_string(h_edges) + " edges on " +
                                std::to_string(h_vertices) + " vertices");

    GrowResult out;
    out.constant = growth_constant(c0, c1, s);
    out.guaranteed = static_cast<std::size_t>((d + out.constant - 1) / out.constant);

    std::vector<std::uint8_t> claimed(lg.base.vertex_count(), 0);
    for (std::size_t b = d; b >= 1; --b) {
        std::fill(claimed.begin(), claimed.end(), 0);
        std::map<Vertex, std::vector<Vertex>> kept;
        std::vector<std::uint8_t> alive(lg.base.vertex_count(), 0);
        for (Vertex v : lg.layer(s)) {
            std::vector<Vertex> leaves;
            for (Vertex c : lg.children(v)) {
                if (claimed[c]) continue;
                leaves.push_back(c);
                if (leaves.size() == b) break;
            }
            if (leaves.size() < b) continue;
            for (Vertex c : leaves) claimed[c] = 1;
            kept[v] = std::move(leaves);
            alive[v] = 1;
        }
        for (std::size_t t = s; t-- > 0;) {
            for (Vertex v : lg.layer(t)) {
                std::vector<Vertex> keep;
                for (Vertex c : lg.children(v)) {
                    if (!alive[c]) continue;
                    keep.push_back(c);
                    if (keep.size() == b) break;
                }
                if (keep.size() < b) continue;
                kept[v] = std::move(keep);
                alive[v] = 1;
            }
        }
        if (alive[lg.root]) {
            out.cert = assemble(lg.root, b, s + 1, kept);
            return out;
        }
    }
    throw PreconditionError("no regular tree could be grown");  // unreachable given (B)
}

std::optional<RegularTreeCert> extract_regular_tree(const LayeredGraph& lg, std::size_t s, std::uint64_t c0) {
    const std::size_t top = lg.children(lg.root).size();
    const std::uint64_t c0sq = sat_mul(c0, c0);
    std::vector<std::uint8_t> alive(lg.base.vertex_count(), 0);
    std::vector<std::uint8_t> claimed(lg.base.vertex_count(), 0);
    for (std::size_t b = std::max<std::size_t>(top, 1); b >= 1; --b) {
        std::fill(alive.begin(), alive.end(), 0);
        std::fill(claimed.begin(), claimed.end(), 0);
        std::map<Vertex, std::vector<Vertex>> kept;
        for (Vertex v : lg.layer(s)) {
            const std::size_t c = lg.children(v).size();
            if (c >= b && c <= sat_mul(c0sq, b)) {
                alive[v] = 1;
                kept[v] = {};
            }
        }
        for (std::size_t t = s; t-- > 0;) {
            for (Vertex v : lg.layer(t)) {
                std::vector<Vertex> keep;
                for (Vertex c : lg.children(v)) {
                    if (!alive[c] || claimed[c]) continue;
                    keep.push_back(c);
                    if (keep.size() == b) break;
                }
                if (keep.size() < b) continue;
                for (Vertex c : keep) claimed[c] = 1;
                kept[v] = std::move(keep);
                alive[v] = 1;
            }
        }
        if (alive[lg.root]) return assemble(lg.root, b, s, kept);
    }
    return std::nullopt;
}

SubgraphView almost_tree_view(const LayeredGraph& lg, const RegularTreeCert& cert) {
    const std::size_t s = cert.depth();
    std::vector<Edge> edges;
    std::vector<Vertex> keep;
    for (std::size_t i = 0; i < cert.layers.size(); ++i) {
        keep.insert(keep.end(), cert.layers[i].begin(), cert.layers[i].end());
        for (std::size_t j = 0; i > 0 && j < cert.layers[i].size(); ++j)
            edges.emplace_back(cert.parents[i][j], cert.layers[i][j]);
    }
    for (Vertex v : cert.layers[s])
        for (Vertex u : lg.base.neighbors(v))
            if (layer_of(lg, u) == static_cast<int>(s) + 1) {
                keep.push_back(u);
                edges.emplace_back(v, u);
            }
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (Vertex v : keep)
        if (layer_of(lg, v) == static_cast<int>(s) + 1)
            for (Vertex u : lg.base.neighbors(v))
                if (v < u && layer_of(lg, u) == static_cast<int>(s) + 1 &&
                    std::binary_search(keep.begin(), keep.end(), u))
                    edges.emplace_back(v, u);
    std::map<Vertex, Vertex> index;
    for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Vertex>(i);
    for (auto& [a, b] : edges) {
        a = index.at(a);
        b = index.at(b);
    }
    Graph g = Graph::from_edge_list(keep.size(), edges);
    if (lg.base.has_sides()) {
        std::vector<Side> sides(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) sides[i] = lg.base.side(keep[i]);
        g = g.with_sides(std::move(sides));
    }
    return {std::move(g), std::move(keep)};
}

BadSets compute_bad_sets(const LayeredGraph& lg, std::size_t s, std::size_t theta_top, std::size_t theta_inner) {
    if (theta_top < 1 || theta_inner < 1) throw PreconditionError("thresholds must be at least 1");
    BadSets out;
    out.s = s;
    out.theta_top = theta_top;
    out.theta_inner = theta_inner;
    out.sets.assign(s + 2, {});
    for (Vertex v : lg.layer(s + 1))
        if (lg.parents(v).size() >= theta_top) out.sets[s + 1].push_back(v);
    std::vector<std::uint8_t> in_next(lg.base.vertex_count(), 0);
    for (std::size_t i = s; i >= 1; --i) {
        std::fill(in_next.begin(), in_next.end(), 0);
        for (Vertex v : out.sets[i + 1]) in_next[v] = 1;
        for (Vertex v : lg.layer(i)) {
            std::size_t hits = 0;
            for (Vertex u : lg.base.neighbors(v)) hits += in_next[u];
            if (hits >= theta_inner) out.sets[i].push_back(v);
        }
    }
    return out;
}

PrunedLayers prune_bad_sets(const LayeredGraph& lg, const BadSets& bad) {
    std::vector<std::uint8_t> drop(lg.base.vertex_count(), 0);
    for (const auto& set : bad.sets)
        for (Vertex v : set) drop[v] = 1;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < lg.base.vertex_count(); ++v) {
        const int l = layer_of(lg, v);
        if (l != LayeredGraph::kUnreached && l <= static_cast<int>(bad.s) + 1 && !drop[v]) keep.push_back(v);
    }
    SubgraphView view = induced_subgraph(lg.base, keep);
    const auto it = std::lower_bound(view.to_parent.begin(), view.to_parent.end(), lg.root);
    const Vertex root = static_cast<Vertex>(it - view.to_parent.begin());
    LayeredGraph layers = bfs_layers(view.graph, root);
    return {std::move(view), std::move(layers)};
}

std::vector<int> gamma_lengths(const ThetaSpec& spec, std::size_t s) {
    const int k1 = spec.shortest();
    const int S = static_cast<int>(s);
    if (S < k1 + 1) throw RangeError("s must be at least k1 + 1");
    std::vector<int> out;
    for (std::size_t t = 1; t < spec.path_count(); ++t) {
        const int tau = k1 + spec.length(t) - 2 * S - 1;
        if (tau < 1) throw RangeError("path length k1 + k_t - 2s - 1 = " + std::to_string(tau) + " is not positive");
        out.push_back(tau);
    }
    return out;
}

Graph build_gamma_forest(const ThetaSpec& spec, std::size_t s) {
    std::vector<Edge> edges;
    Vertex next = 0;
    for (int tau : gamma_lengths(spec, s)) {
        for (int i = 0; i < tau; ++i) edges.emplace_back(next + i, next + i + 1);
        next += static_cast<Vertex>(tau) + 1;
    }
    return Graph::from_edge_list(next, edges);
}

std::uint64_t thick_bound(const ThetaSpec& spec, std::size_t d, std::size_t s) {
    std::uint64_t b = spec.path_count() - 2;
    for (std::size_t i = 1; i < s; ++i) b = sat_mul(b, d);
    return b;
}

namespace {

/// Shared machinery for the two-layer graph H[L_s u L_{s+1}].
class TwoLayer {
public:
    TwoLayer(const LayeredGraph& lg, std::size_t s) : lg_(lg), s_(static_cast<int>(s)), block_(lg.base.vertex_count(), -1) {
        const auto& l1 = lg.layer(1);
        for (Vertex v : lg.layer(s)) {
            const Vertex top = ancestor_at(lg, v, 1);
            block_[v] = static_cast<int>(std::lower_bound(l1.begin(), l1.end(), top) - l1.begin());
        }
        blocks_ = l1.size();
    }

    [[nodiscard]] bool inside(Vertex v) const {
        const int l = layer_of(lg_, v);
        return l == s_ || l == s_ + 1;
    }
    [[nodiscard]] bool in_bottom(Vertex v) const { return layer_of(lg_, v) == s_; }
    [[nodiscard]] int block(Vertex v) const { return block_[v]; }
    [[nodiscard]] std::size_t blocks() const { return blocks_; }
    [[nodiscard]] const Graph& graph() const { return lg_.base; }

    /// Enumerates paths from `from` with `length` edges through unused
    /// vertices, ending in L_s in a block not yet used. Calls `on_path` with
    /// the path (from .. end); stops when it returns true.
    template <typename F>
    bool paths(Vertex from, int length, std::vector<std::uint8_t>& used, const std::vector<std::uint8_t>& used_block,
               std::uint64_t& steps, std::uint64_t cap, F&& on_path) const {
        std::vector<Vertex> path{from};
        auto rec = [&](auto&& self, Vertex x, int remaining) -> bool {
            if (remaining == 0) {
                if (!in_bottom(x) || used_block[block_[x]]) return false;
                return on_path(path);
            }
            for (Vertex y : lg_.base.neighbors(x)) {
                if (!inside(y) || used[y]) continue;
                if (++steps > cap) throw PreconditionError("path search exceeded its step cap");
                used[y] = 1;
                path.push_back(y);
                const bool stop = self(self, y, remaining - 1);
                path.pop_back();
                used[y] = 0;
                if (stop) return true;
            }
            return false;
        };
        return rec(rec, from, length);
    }

private:
    const LayeredGraph& lg_;
    int s_;
    std::vector<int> block_;
    std::size_t blocks_ = 0;
};

constexpr std::uint64_t kClassifyCap = 50'000'000;
constexpr std::uint64_t kRoutingCap = 50'000'000;

std::optional<StrongWitness> find_witness(const TwoLayer& two, Vertex v, const std::vector<int>& tau) {
    const std::size_t n = two.graph().vertex_count();
    std::vector<std::uint8_t> used(n, 0);
    std::vector<std::uint8_t> used_block(two.blocks(), 0);
    used[v] = 1;
    StrongWitness w{v, {}};
    std::uint64_t steps = 0;
    auto place = [&](auto&& self, std::size_t t) -> bool {
        if (t == tau.size()) return true;
        return two.paths(v, tau[t], used, used_block, steps, kClassifyCap, [&](const std::vector<Vertex>& path) {
            // path vertices stay marked by paths() while this callback runs
            used_block[two.block(path.back())] = 1;
            w.paths.push_back(path);
            if (self(self, t + 1)) return true;
            w.paths.pop_back();
            used_block[two.block(path.back())] = 0;
            return false;
        });
    };
    if (place(place, 0)) return w;
    return std::nullopt;
}

}  // namespace

ThickThinLabels classify_strong_thick(const LayeredGraph& lg, std::size_t d, const ThetaSpec& spec, std::size_t s) {
    const std::vector<int> tau = gamma_lengths(spec, s);
    require(check_regular_tree(lg, d, s), "classification needs a regular tree on layers 0..s");
    const TwoLayer two(lg, s);

    const auto& top = lg.layer(s + 1);
    std::vector<std::optional<StrongWitness>> found(top.size());
    const long long count = static_cast<long long>(top.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_cap())
    for (long long i = 0; i < count; ++i) found[i] = find_witness(two, top[i], tau);

    ThickThinLabels out;
    out.s = s;
    out.branching = d;
    std::vector<std::uint8_t> thick(lg.base.vertex_count(), 0);
    for (std::size_t i = 0; i < top.size(); ++i) {
        if (!found[i]) continue;
        out.strong.push_back(top[i]);
        out.witnesses.push_back(std::move(*found[i]));
        for (Vertex u : lg.base.neighbors(top[i]))
            if (two.in_bottom(u)) thick[u] = 1;
    }
    for (Vertex u : lg.layer(s)) (thick[u] ? out.thick : out.thin).push_back(u);
    return out;
}

Embedding embed_theta_from_thick(const LayeredGraph& lg, std::size_t d, const ThetaSpec& spec, std::size_t s,
                                 const ThickThinLabels& labels) {
    const std::vector<int> tau = gamma_lengths(spec, s);
    const std::uint64_t bound = thick_bound(spec, d, s);
    if (labels.thick.size() <= bound)
        throw PreconditionError("thick count " + std::to_string(labels.thick.size()) + " does not exceed (l-2) d^(s-1) = " +
                                std::to_string(bound));
    require(check_regular_tree(lg, d, s), "embedding needs a regular tree on layers 0..s");
    const TwoLayer two(lg, s);
    const int k1 = spec.shortest();
    const std::size_t routes = spec.path_count() - 1;
    const std::size_t n = lg.base.vertex_count();

    std::vector<std::uint8_t> strong(n, 0);
    for (Vertex w : labels.strong) strong[w] = 1;

    // a (layer k1) -> b (layer k1+1) -> thick vertices below b
    std::map<Vertex, std::map<Vertex, std::vector<Vertex>>> groups;
    for (Vertex u : labels.thick) {
        const Vertex a = ancestor_at(lg, u, k1);
        const Vertex b = ancestor_at(lg, u, k1 + 1);
        groups[a][b].push_back(u);
    }

    auto chain_up = [&](Vertex v) {
        std::vector<Vertex> out{v};
        while (v != lg.root) {
            v = unique_parent(lg, v);
            out.push_back(v);
        }
        return out;
    };

    std::uint64_t steps = 0;
    for (const auto& [a, by_b] : groups) {
        if (by_b.size() < routes) continue;
        std::vector<Vertex> b_keys;
        for (const auto& entry : by_b) b_keys.push_back(entry.first);

        std::vector<std::uint8_t> used(n, 0);
        std::vector<std::uint8_t> used_block(two.blocks(), 0);
        used_block[two.block(ancestor_at(lg, *by_b.begin()->second.begin(), static_cast<int>(s)))] = 1;
        std::vector<std::uint8_t> used_b(b_keys.size(), 0);

        struct Route {
            Vertex u, w;
            std::vector<Vertex> witness;  // w .. e
        };
        std::vector<Route> chosen;

        auto route = [&](auto&& self, std::size_t i) -> bool {
            if (i == routes) return true;
            for (std::size_t bi = 0; bi < b_keys.size(); ++bi) {
                if (used_b[bi]) continue;
                for (Vertex u : by_b.at(b_keys[bi])) {
                    if (used[u]) continue;
                    used[u] = 1;
                    used_b[bi] = 1;
                    for (Vertex w : lg.base.neighbors(u)) {
                        if (!strong[w] || used[w]) continue;
                        if (++steps > kRoutingCap) throw PreconditionError("routing search exceeded its step cap");
                        used[w] = 1;
                        const bool done =
                            two.paths(w, tau[i], used, used_block, steps, kRoutingCap, [&](const std::vector<Vertex>& p) {
                                used_block[two.block(p.back())] = 1;
                                chosen.push_back({u, w, p});
                                if (self(self, i + 1)) return true;
                                chosen.pop_back();
                                used_block[two.block(p.back())] = 0;
                                return false;
                            });
                        if (done) return true;
                        used[w] = 0;
                    }
                    used_b[bi] = 0;
                    used[u] = 0;
                }
            }
            return false;
        };
        if (!route(route, 0)) continue;

        Embedding e;
        e.pole = a;
        e.other_pole = lg.root;
        e.paths.push_back(chain_up(a));
        for (const Route& r : chosen) {
            auto down = chain_up(r.u);  // u .. root
            std::vector<Vertex> path(down.rbegin() + static_cast<std::ptrdiff_t>(k1), down.rend());  // a .. u
            path.insert(path.end(), r.witness.begin(), r.witness.end());
            auto up = chain_up(r.witness.back());
            path.insert(path.end(), up.begin() + 1, up.end());
            e.paths.push_back(std::move(path));
        }
        if (!verify_embedding(lg.base, spec, e))
            throw std::logic_error("assembled theta embedding failed verification");
        return e;
    }
    throw PreconditionError("no disjoint routing through the thick vertices exists");
}

}  // namespace theta
