#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>

#include "eulerplanar/graph.hpp"

namespace eulerplanar {

// Label-invariant encoding of an isomorphism class (exact for n <= 16): the
// adjacency bit string of the canonically relabeled graph, packed MSB-first
// so that ordering CanonicalForm values orders the encodings.
struct CanonicalForm {
    std::uint8_t n = 0;
    std::array<std::uint64_t, 2> bits{};

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend std::strong_ordering operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& c) const noexcept {
        std::uint64_t h = c.n;
        h = h * 0x9e3779b97f4a7c15ULL + c.bits[0];
        h = h * 0x9e3779b97f4a7c15ULL + c.bits[1];
        return static_cast<std::size_t>(h ^ (h >> 32));
    }
};

// Canonical form of g; identical for all relabelings of g and distinct for
// non-isomorphic graphs. Throws std::invalid_argument for n > 16.
CanonicalForm canonical_form(const Graph& g);

// The relabeled graph the canonical form encodes.
Graph canonical_representative(const CanonicalForm& c);

}  // namespace eulerplanar
