#pragma once

// Internal canonical-labeling kernel for graphs with at most 16 vertices.
//
// The canonical form of a graph is the segment-lexicographically minimal
// adjacency encoding over all labelings that respect the refined color
// classes. Segment k (k = 1..n-1) holds the adjacency bits between vertex k
// and vertices 0..k-1, with bit (0,k) most significant; comparing encodings
// segment by segment equals comparing graph6 bit strings left to right.
// Restricting to color-respecting labelings is exact: the refined colors are
// isomorphism-invariant, so isomorphic graphs minimize over the same set.

#include <array>
#include <cstdint>

namespace eulerplanar::detail {

inline constexpr int kMaxCanonVertices = 16;

struct SmallGraph {
    int n = 0;
    std::array<std::uint16_t, kMaxCanonVertices> rows{};  // bit j of rows[i] = edge {i,j}
};

// Iterated neighbor-color refinement starting from degree ranks. Colors are
// numbered 0..classes-1 in an isomorphism-invariant order (ascending degree
// major). Returns the number of classes.
int refine_colors(const SmallGraph& g, std::array<std::uint8_t, kMaxCanonVertices>& colors);

// Segments of the identity labeling.
void identity_segments(const SmallGraph& g, std::array<std::uint16_t, kMaxCanonVertices>& seg);

// True iff the identity labeling of g is canonical. Requires colors from
// refine_colors and colors[0] <= colors[1] <= ... (a necessary condition the
// caller checks first).
bool is_canonical_identity(const SmallGraph& g,
                           const std::array<std::uint8_t, kMaxCanonVertices>& colors);

// Computes the canonical segments of g (minimum over color-respecting
// labelings).
void canonical_segments(const SmallGraph& g, std::array<std::uint16_t, kMaxCanonVertices>& seg);

}  // namespace eulerplanar::detail
