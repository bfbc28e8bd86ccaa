#ifndef G2LAB_HOMOLOGY_HPP
#define G2LAB_HOMOLOGY_HPP

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "g2lab/complex.hpp"

namespace g2lab {

/// Dense integer matrix with arbitrary-precision entries.
struct IntegerMatrix {
    long long rows = 0;
    long long cols = 0;
    std::vector<mpz_class> a; // row-major

    IntegerMatrix() = default;
    IntegerMatrix(long long r, long long c)
        : rows(r), cols(c), a(static_cast<std::size_t>(r * c)) {}

    mpz_class& at(long long r, long long c) {
        return a[static_cast<std::size_t>(r * cols + c)];
    }
    const mpz_class& at(long long r, long long c) const {
        return a[static_cast<std::size_t>(r * cols + c)];
    }
};

/// ∂ᵢ with lexicographic face order and ascending-vertex orientation: the
/// row of F minus its j-th vertex carries sign (−1)^j. For i = 0 the single
/// augmentation row maps every vertex to ∅ (reduced homology).
IntegerMatrix boundary_matrix(const SimplicialComplex& k, int i);

struct SmithResult {
    std::vector<mpz_class> diagonal;          // full diagonal of D, zeros included
    long long rank = 0;
    std::vector<mpz_class> invariant_factors; // nonzero diagonal, dᵢ | dᵢ₊₁
};

/// Smith normal form by smallest-magnitude pivoting. Exact.
SmithResult smith_normal_form(IntegerMatrix m);

/// Reduced homology over ℤ for degrees −1..dim.
struct HomologyProfile {
    int dim = -1;
    std::vector<long long> betti;                // index k+1 ↔ degree k
    std::vector<std::vector<long long>> torsion; // invariant factors > 1, per degree

    long long betti_at(int k) const {
        int idx = k + 1;
        if (idx < 0 || idx >= static_cast<int>(betti.size())) return 0;
        return betti[static_cast<std::size_t>(idx)];
    }
    const std::vector<long long>& torsion_at(int k) const;

    bool is_acyclic() const;
    /// Exactly the reduced homology of Sᵐ (H̃ₘ = ℤ, all else 0, no torsion).
    bool is_sphere_profile(int m) const;
};

HomologyProfile homology(const SimplicialComplex& k);

/// Every face (including ∅) has the link homology of a sphere of matching
/// dimension.
bool is_homology_sphere(const SimplicialComplex& k);

struct HomologyBallResult {
    bool is_ball = false;
    std::optional<SimplicialComplex> boundary; // faces with acyclic links
};

HomologyBallResult is_homology_ball(const SimplicialComplex& k);

/// Connected components of the facet-adjacency graph of a pure complex,
/// where facets sharing a ridge in `forbidden_ridges` are not connected
/// through it. Components are ordered by their smallest facet.
std::vector<std::vector<Face>> facet_components(const SimplicialComplex& k,
                                                const std::vector<Face>& forbidden_ridges = {});

} // namespace g2lab

#endif
