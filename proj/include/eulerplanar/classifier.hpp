#pragma once

#include <complex>
#include <vector>

#include "eulerplanar/graph.hpp"

namespace eulerplanar {

// Vertex, edge and face counts (faces include the unbounded one).
struct FVector {
    long long f0 = 0, f1 = 0, f2 = 0;
    bool operator==(const FVector&) const = default;
};

// f-vector of a connected planar graph. Throws on disconnected/non-planar input.
FVector fvector_of(const Graph& g);

// The cubic f2 x^3 + f1 x^2 + f0 x + 2 together with the discriminant of its
// quadratic cofactor after dividing out (x + 1).
struct EulerPolynomial {
    long long a3 = 0, a2 = 0, a1 = 0, a0 = 2;
    long long delta = 0;  // (f0 - 2)^2 - 8*f2
};

EulerPolynomial euler_polynomial(const FVector& f);

enum class Verdict { Real, Complex };

// Real iff (f0 - 2)^2 >= 8*f2 (boundary equality counts as Real). Accepts any
// FVector, not just graph-derived ones, so pure arithmetic scans can run.
Verdict classify(const FVector& f);

Verdict classify_graph(const Graph& g);

struct RootSet {
    // True when a3 = 0 and the cubic degenerates to a2 x^2 + a1 x + a0.
    bool degenerate = false;
    // The quadratic actually solved: the cofactor (a3, a2 - a3, 2) in the
    // regular case, the degenerate polynomial otherwise.
    long long quad_a = 0, quad_b = 0, quad_c = 0;
    long long quad_disc = 0;
    long long delta = 0;
    bool all_real = false;
    std::vector<std::complex<double>> values;  // includes the exact root -1 when non-degenerate
};

// -1 plus the cofactor roots by the quadratic formula. Exact discriminant
// data, floating approximations. Meaningful as roots of p(x) whenever the
// f-vector satisfies Euler's relation (then p(-1) = 0 exactly).
RootSet roots(const EulerPolynomial& p);

// Lemma check: deleting a degree-2 vertex from a complex planar graph with
// f0 >= 7 leaves a complex graph. Preconditions (connected, planar, complex,
// f0 >= 7, degree(x) = 2, removal keeps connectivity) are rejected by name.
bool delete_degree2_preserves_complex(const Graph& g, int x);

}  // namespace eulerplanar
