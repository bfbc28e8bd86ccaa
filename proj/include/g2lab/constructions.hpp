#ifndef G2LAB_CONSTRUCTIONS_HPP
#define G2LAB_CONSTRUCTIONS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "g2lab/complex.hpp"

namespace g2lab {

/// ∂σ^m: boundary of the m-simplex on vertices 0..m (m ≥ 1).
SimplicialComplex boundary_simplex(int m);

/// The n-cycle on vertices 0..n−1 (n ≥ 3).
SimplicialComplex polygon(int n);

/// ∂σ^a ∗ ∂σ^b with a,b ≥ 2: a prime homology (a+b−1)-sphere with g₂ = 1.
SimplicialComplex family_two_simplices(int a, int b);

/// polygon(n) ∗ ∂σ^{d−2} with n ≥ 3, d ≥ 4: a prime homology (d−1)-sphere
/// with g₂ = 1.
SimplicialComplex family_polygon_simplex(int n, int d);

/// m-fold join of ∂σ¹: the boundary of the m-dimensional cross-polytope,
/// factor i on vertices {2i, 2i+1}.
SimplicialComplex cross_polytope(int m);

/// Replace `facet` by the cone from `apex` over its boundary.
SimplicialComplex stack(const SimplicialComplex& k, const Face& facet, Vertex apex);

struct StackingStep {
    Face facet;
    Vertex apex;
    bool operator==(const StackingStep&) const = default;
};

/// Replaying `steps` from `base` reproduces the stacked complex bit-exactly.
struct StackingLog {
    SimplicialComplex base;
    std::vector<StackingStep> steps;
};

SimplicialComplex replay(const StackingLog& log);

/// Start from ∂σ^d and stack k times over seeded uniform facet picks; new
/// vertices take the smallest unused nonnegative id.
std::pair<SimplicialComplex, StackingLog> stacked_sphere(int d, int k, std::uint64_t seed);

/// Glue K and L by identifying facet_l with facet_k via `bijection`
/// (facet_l vertex → facet_k vertex) and delete the identified facet.
/// Remaining L vertices are relabeled to fresh ids.
SimplicialComplex connected_sum(const SimplicialComplex& k, const SimplicialComplex& l,
                                const Face& facet_k, const Face& facet_l,
                                const VertexMap& bijection);

/// Replace the star of a ridge by new_vertex ∗ ∂ridge ∗ link(ridge).
/// On a prime homology (d−1)-sphere with d ≥ 4 this adds one vertex,
/// raises g₂ by one and preserves primality.
SimplicialComplex stellar_subdivide_ridge(const SimplicialComplex& k, const Face& ridge);

/// lk({u,v}) = lk(u) ∩ lk(v)?
bool link_condition(const SimplicialComplex& k, Vertex u, Vertex v);

struct ContractionResult {
    SimplicialComplex complex;
    Vertex removed_vertex = -1;
    Vertex kept_vertex = -1;
    long long delta_f0 = 0;
    long long delta_f1 = 0;
    long long delta_g2 = 0;
    std::vector<Vertex> independent_set;   // I = antist(v,lk(u))₀ − lk(v,lk(u))₀
    long long common_link_vertices = 0;    // c = |lk(v,lk(u))₀|
    bool link_condition_held = false;      // false ⇒ no sphere guarantee
};

/// Contract edge {u,v}, deleting u and keeping v:
/// K′ = (K − st(u)) ∪ ({v} ∗ antist(v, lk(u))).
ContractionResult edge_contract(const SimplicialComplex& k, Vertex u, Vertex v);

} // namespace g2lab

#endif
