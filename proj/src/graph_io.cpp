#include "theta/graph_io.hpp"

#include "theta/error.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace theta {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void put_size(std::string& out, std::size_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

int sextet(char c) {
    const int v = static_cast<unsigned char>(c) - 63;
    if (v < 0 || v > 63) throw ParseError(std::string("graph6: byte out of range: '") + c + "'");
    return v;
}

bool ends_with(const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::string out;
    put_size(out, n);
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph decode_graph6(std::string_view text) {
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("graph6: empty input");

    std::size_t pos = 0;
    std::size_t n = 0;
    auto take = [&](int count) {
        std::size_t v = 0;
        for (int i = 0; i < count; ++i) {
            if (pos >= text.size()) throw ParseError("graph6: truncated size field");
            v = (v << 6) | static_cast<std::size_t>(sextet(text[pos++]));
        }
        return v;
    };
    if (text[0] != 126) {
        n = take(1);
    } else if (text.size() > 1 && text[1] == 126) {
        pos = 2;
        n = take(6);
    } else {
        pos = 1;
        n = take(3);
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw ParseError("graph6: expected " + std::to_string(bytes) + " edge bytes, found " +
                         std::to_string(text.size() - pos));

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int byte = sextet(text[pos + k / 6]);
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    if (bits % 6 != 0) {
        const int last = sextet(text.back());
        if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError("graph6: nonzero padding bits");
    }
    return Graph::from_edge_list(n, edges);
}

void write_edge_list(std::ostream& os, const Graph& g) {
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& is) {
    long long n = -1;
    long long m = -1;
    if (!(is >> n >> m) || n < 0 || m < 0) throw ParseError("edge list: expected header \"n m\"");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = -1;
        long long v = -1;
        if (!(is >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        if (u < 0 || v < 0) throw InvalidEdge("edge list: negative vertex id");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    if (ends_with(path, ".g6") || ends_with(path, ".graph6")) {
        std::string line;
        std::getline(in, line);
        return decode_graph6(line);
    }
    return read_edge_list(in);
}

void save_graph(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    if (ends_with(path, ".g6") || ends_with(path, ".graph6"))
        out << encode_graph6(g) << '\n';
    else
        write_edge_list(out, g);
}

}  // namespace theta
