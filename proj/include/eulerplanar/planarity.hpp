#pragma once

#include "eulerplanar/graph.hpp"

namespace eulerplanar {

struct PlanarityVerdict {
    bool planar = false;
};

// Exact planarity test (any n).
PlanarityVerdict is_planar(const Graph& g);

// f2 = 2 - f0 + f1, the number of faces including the unbounded one.
// Throws std::invalid_argument on disconnected or non-planar input.
long long face_count(const Graph& g);

}  // namespace eulerplanar
