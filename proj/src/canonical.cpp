#include "eulerplanar/canonical.hpp"

#include <stdexcept>

#include "small_canon.hpp"

namespace eulerplanar {

namespace {

CanonicalForm pack_segments(int n, const std::array<std::uint16_t, detail::kMaxCanonVertices>& seg) {
    CanonicalForm c;
    c.n = static_cast<std::uint8_t>(n);
    int pos = 0;  // next bit slot, MSB-first across bits[0] then bits[1]
    for (int k = 1; k < n; ++k) {
        for (int i = k - 1; i >= 0; --i) {
            if ((seg[k] >> i) & 1) c.bits[pos / 64] |= std::uint64_t{1} << (63 - pos % 64);
            ++pos;
        }
    }
    return c;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    if (n > detail::kMaxCanonVertices)
        throw std::invalid_argument("canonical_form: supported only for n <= 16");
    detail::SmallGraph sg;
    sg.n = n;
    for (auto [u, v] : g.edges()) {
        sg.rows[u] |= static_cast<std::uint16_t>(1u << v);
        sg.rows[v] |= static_cast<std::uint16_t>(1u << u);
    }
    std::array<std::uint16_t, detail::kMaxCanonVertices> seg{};
    detail::canonical_segments(sg, seg);
    return pack_segments(n, seg);
}

Graph canonical_representative(const CanonicalForm& c) {
    std::vector<std::pair<int, int>> edges;
    int pos = 0;
    for (int k = 1; k < c.n; ++k) {
        for (int i = 0; i < k; ++i) {
            bool bit = (c.bits[pos / 64] >> (63 - pos % 64)) & 1;
            ++pos;
            if (bit) edges.emplace_back(i, k);
        }
    }
    return Graph::from_edge_list(c.n, edges);
}

}  // namespace eulerplanar
