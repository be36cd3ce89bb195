#include "eulerplanar/format.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace eulerplanar {

namespace {

constexpr int kGraph6Bias = 63;
constexpr long long kGraph6MaxN = 258047;  // largest size the 4-byte header carries

int data_byte(std::string_view s, std::size_t at) {
    unsigned char c = static_cast<unsigned char>(s[at]);
    if (c < 63 || c > 126) throw Graph6ParseError("graph6: invalid data byte", at);
    return c - kGraph6Bias;
}

}  // namespace

Graph parse_graph6(std::string_view s) {
    if (s.empty()) throw Graph6ParseError("graph6: empty input", 0);
    long long n;
    std::size_t header;
    unsigned char b0 = static_cast<unsigned char>(s[0]);
    if (b0 == 126) {
        if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
            throw Graph6ParseError("graph6: sizes above 258047 not supported", 1);
        if (s.size() < 4) throw Graph6ParseError("graph6: truncated size header", s.size());
        n = (static_cast<long long>(data_byte(s, 1)) << 12) |
            (static_cast<long long>(data_byte(s, 2)) << 6) | data_byte(s, 3);
        header = 4;
    } else {
        if (b0 < 63 || b0 > 125) throw Graph6ParseError("graph6: invalid size byte", 0);
        n = b0 - kGraph6Bias;
        header = 1;
    }

    const long long slots = n * (n - 1) / 2;
    const std::size_t need = header + static_cast<std::size_t>((slots + 5) / 6);
    if (s.size() < need) throw Graph6ParseError("graph6: truncated edge data", s.size());
    if (s.size() > need) throw Graph6ParseError("graph6: trailing bytes", need);

    std::vector<std::pair<int, int>> edges;
    long long slot = 0;
    int i = 0, j = 1;
    for (std::size_t t = header; t < need; ++t) {
        int val = data_byte(s, t);
        for (int b = 5; b >= 0; --b, ++slot) {
            int bit = (val >> b) & 1;
            if (slot >= slots) {
                if (bit) throw Graph6ParseError("graph6: nonzero padding bit", t);
                continue;
            }
            if (bit) edges.emplace_back(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    if (n > kGraph6MaxN)
        throw std::invalid_argument("write_graph6: sizes above 258047 not supported");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kGraph6Bias));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kGraph6Bias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kGraph6Bias));
        out.push_back(static_cast<char>((n & 63) + kGraph6Bias));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kGraph6Bias));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kGraph6Bias));
    return out;
}

Graph parse_edge_list(std::istream& in) {
    long long n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: expected header line \"n m\"");
    if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative counts in header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long k = 0; k < m; ++k) {
        long long u, v;
        if (!(in >> u >> v))
            throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                        " edge lines, got " + std::to_string(k));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge list: endpoint out of range on edge " +
                                        std::to_string(k));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace eulerplanar
