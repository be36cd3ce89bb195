#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace eulerplanar {

// Simple undirected graph on vertex ids 0..n-1: no loops, no parallel edges.
// Adjacency is stored as bitset rows (one or more 64-bit words per vertex).
// Graphs are immutable after construction, so they are safe to share between
// threads.
class Graph {
public:
    Graph() = default;

    // Builds a graph containing exactly the given edges, deduplicated.
    // Throws std::invalid_argument on a self-loop or an out-of-range id.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    bool has_edge(int u, int v) const;

    // |adjacency(v)|. Throws std::invalid_argument if v is out of range.
    int degree(int v) const;

    std::vector<int> neighbors(int v) const;

    // All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    // Graph on n-1 vertices with x and its incident edges removed; ids above
    // x shift down by one. Throws std::invalid_argument if x is out of range.
    Graph remove_vertex(int x) const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int words_ = 0;  // 64-bit words per adjacency row
    long long m_ = 0;
    std::vector<std::uint64_t> bits_;

    void set_edge(int u, int v);
    const std::uint64_t* row(int v) const {
        return bits_.data() + static_cast<std::size_t>(v) * words_;
    }

    friend bool is_connected(const Graph&);
    friend bool has_triangle(const Graph&);
    friend bool is_bipartite(const Graph&);
};

// True iff g has a single connected component (vacuously true for n <= 1).
bool is_connected(const Graph& g);

// True iff n >= 3, g is connected and has no cut vertex.
bool is_biconnected(const Graph& g);

// True iff some 3-clique exists.
bool has_triangle(const Graph& g);

// True iff g is 2-colorable.
bool is_bipartite(const Graph& g);

}  // namespace eulerplanar
