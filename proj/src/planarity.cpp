#include "eulerplanar/planarity.hpp"

#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace eulerplanar {

PlanarityVerdict is_planar(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 4) return {true};
    if (g.edge_count() > 3LL * n - 6) return {false};
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> bg(n);
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    return {boost::boyer_myrvold_planarity_test(bg)};
}

long long face_count(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("face_count: connected graphs only");
    if (!is_planar(g).planar) throw std::invalid_argument("face_count: non-planar input");
    return 2 - g.vertex_count() + g.edge_count();
}

}  // namespace eulerplanar
