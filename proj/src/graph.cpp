#include "eulerplanar/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace eulerplanar {

namespace {

void check_vertex(int v, int n, const char* what) {
    if (v < 0 || v >= n)
        throw std::invalid_argument(std::string(what) + ": vertex id " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(n) + ")");
}

}  // namespace

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("from_edge_list: negative vertex count");
    Graph g;
    g.n_ = n;
    g.words_ = n == 0 ? 0 : (n + 63) / 64;
    g.bits_.assign(static_cast<std::size_t>(n) * g.words_, 0);
    for (auto [u, v] : edges) {
        check_vertex(u, n, "from_edge_list");
        check_vertex(v, n, "from_edge_list");
        if (u == v)
            throw std::invalid_argument("from_edge_list: self-loop at vertex " + std::to_string(u));
        g.set_edge(u, v);
    }
    for (int v = 0; v < n; ++v) g.m_ += g.degree(v);
    g.m_ /= 2;
    return g;
}

void Graph::set_edge(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u, n_, "has_edge");
    check_vertex(v, n_, "has_edge");
    return (row(u)[v / 64] >> (v % 64)) & 1;
}

int Graph::degree(int v) const {
    check_vertex(v, n_, "degree");
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(row(v)[w]);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v, n_, "neighbors");
    std::vector<int> out;
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = row(v)[w];
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::remove_vertex(int x) const {
    check_vertex(x, n_, "remove_vertex");
    std::vector<std::pair<int, int>> kept;
    for (auto [u, v] : edges()) {
        if (u == x || v == x) continue;
        kept.emplace_back(u > x ? u - 1 : u, v > x ? v - 1 : v);
    }
    return from_edge_list(n_ - 1, kept);
}

bool is_connected(const Graph& g) {
    const int n = g.n_;
    if (n <= 1) return true;
    const int words = g.words_;
    std::vector<std::uint64_t> seen(words, 0), frontier(words, 0);
    seen[0] = frontier[0] = 1;
    bool any = true;
    while (any) {
        std::vector<std::uint64_t> next(words, 0);
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = frontier[w];
            while (bits) {
                int v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                for (int t = 0; t < words; ++t) next[t] |= g.row(v)[t];
            }
        }
        any = false;
        for (int w = 0; w < words; ++w) {
            frontier[w] = next[w] & ~seen[w];
            seen[w] |= next[w];
            any |= frontier[w] != 0;
        }
    }
    int reached = 0;
    for (int w = 0; w < words; ++w) reached += std::popcount(seen[w]);
    return reached == n;
}

namespace {

// Connectivity of g with one vertex masked out (used for cut-vertex detection).
bool connected_without(const Graph& g, int skip) {
    const int n = g.vertex_count();
    int start = skip == 0 ? 1 : 0;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (u == skip || seen[u]) continue;
            seen[u] = 1;
            ++reached;
            stack.push_back(u);
        }
    }
    return reached == n - 1;
}

}  // namespace

bool is_biconnected(const Graph& g) {
    if (g.vertex_count() < 3) return false;
    if (!is_connected(g)) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!connected_without(g, v)) return false;
    return true;
}

bool has_triangle(const Graph& g) {
    for (auto [u, v] : g.edges())
        for (int w = 0; w < g.words_; ++w)
            if (g.row(u)[w] & g.row(v)[w]) return true;
    return false;
}

bool is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace eulerplanar
