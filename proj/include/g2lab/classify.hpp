#ifndef G2LAB_CLASSIFY_HPP
#define G2LAB_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "g2lab/complex.hpp"
#include "g2lab/constructions.hpp"

namespace g2lab {

/// K is combinatorially ∂σ^d (any labels)?
bool is_boundary_simplex(const SimplicialComplex& k);

/// No missing facet and not a simplex boundary. Requires a pure complex.
bool is_prime(const SimplicialComplex& k);

struct GluingEdge {
    int a = 0;
    int b = 0;  // component indices
    Face shared; // the facet both sides gained when the sum was cut
};

/// Connected-sum decomposition into prime components and simplex boundaries.
/// Each shared facet is a facet of exactly its two endpoint components, so
/// gluing the tree back with connected_sum reproduces the input.
struct PrimeDecomposition {
    std::vector<SimplicialComplex> components;
    std::vector<GluingEdge> gluing_tree;
    int simplex_count = 0;
};

PrimeDecomposition prime_decomposition(const SimplicialComplex& k);

struct StackedResult {
    bool stacked = false;
    StackingLog log; // replay(log) == K when stacked
};

/// Greedy un-stacking: repeatedly remove the lowest-id vertex whose link is a
/// simplex boundary and whose neighbor set is absent as a face; true iff the
/// reduction reaches ∂σ^d.
StackedResult is_stacked(const SimplicialComplex& k);

enum class Family { TwoSimplices, PolygonSimplex };

struct DetectedForm {
    Family family = Family::TwoSimplices;
    int a = 0, b = 0; // TwoSimplices: ∂σ^a ∗ ∂σ^b, a ≤ b
    int n = 0;        // PolygonSimplex: cycle length (≥ 4)
    int d = 0;
    VertexMap bijection; // input vertex → canonical generator vertex
};

/// Structural recognition of the two prime g₂ = 1 families through their
/// missing-face fingerprint. The returned bijection maps onto the canonical
/// generator labeling and has been verified by exact relabeled equality.
std::optional<DetectedForm> detect_g2_one_form(const SimplicialComplex& k);

enum class VerdictKind {
    NotASphere,
    Stacked,
    PrimeTwoSimplices,
    PrimePolygonSimplex,
    StackedOverBase,
    Unclassified,
};

struct Classification {
    VerdictKind kind = VerdictKind::Unclassified;
    long long g2 = 0;
    int d = 0;
    std::optional<DetectedForm> form;              // Prime*/StackedOverBase
    int stack_count = 0;                           // StackedOverBase
    std::optional<StackingLog> stacking;           // Stacked
    std::optional<PrimeDecomposition> decomposition; // g₂ = 1 path
};

/// The g₂ ≤ 1 pipeline. With d ≥ 4: g₂ = 0 must un-stack (else
/// theorem_violation); g₂ = 1 must decompose into one recognizable prime plus
/// simplices (else theorem_violation); g₂ ≥ 2 is reported Unclassified.
/// d = 3 inputs get Stacked/Unclassified only. The homology-sphere check is
/// opt-in, being the most expensive step.
Classification classify(const SimplicialComplex& k, bool check_sphere = false);

std::string to_string(const Classification& c);

struct D4Report {
    int d = 0;
    std::vector<Face> missing_triangles;            // d = 4
    std::optional<DetectedForm> form;               // d = 4
    std::optional<Vertex> witness;                  // d > 4
    long long witness_link_g2 = 0;
    bool witness_link_prime = false;
    bool witness_link_spans = false; // lk(u)₀ = K₀ − {u}
};

/// Structural facts every prime g₂ = 1 homology sphere must exhibit: for
/// d = 4 a missing triangle and the join form; for d > 4 a witness vertex
/// whose link is prime, spanning, and has g₂ = 1. Throws theorem_violation
/// if the instance refuses.
D4Report d4_invariant_checks(const SimplicialComplex& k);

} // namespace g2lab

#endif
