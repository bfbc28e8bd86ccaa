#ifndef G2LAB_COMPLEX_HPP
#define G2LAB_COMPLEX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2lab/face.hpp"
#include "g2lab/graph.hpp"

namespace g2lab {

/// Face counts (f₋₁, f₀, …, f_dim). counts[i+1] is the number of i-faces.
struct FVector {
    std::vector<long long> counts;

    long long f(int i) const {
        int idx = i + 1;
        if (idx < 0 || idx >= static_cast<int>(counts.size())) return 0;
        return counts[static_cast<std::size_t>(idx)];
    }
    bool operator==(const FVector&) const = default;
};

struct GStats {
    int d;        // maximal face size = dim + 1
    long long g1; // f₀ − (d+1)
    long long g2; // f₁ − d·f₀ + C(d+1,2)
};

/// A finite abstract simplicial complex in canonical facet-set form.
///
/// Facets are stored sorted with no facet contained in another; the full face
/// poset is enumerated by downward closure at construction, so all values are
/// immutable afterwards and every operation on them is a pure function.
/// The empty complex {∅} (dim −1) is valid; the void complex is rejected.
class SimplicialComplex {
public:
    /// Empty placeholder; only from_facets builds a valid complex.
    SimplicialComplex() = default;

    static SimplicialComplex from_facets(std::vector<Face> faces,
                                         std::optional<std::string> name = std::nullopt);

    int dim() const { return dim_; }
    const std::vector<Face>& facets() const { return facets_; }

    /// All i-dimensional faces (i = −1 gives {∅}); empty outside [−1, dim].
    const std::vector<Face>& faces(int i) const;

    /// Faces with exactly `card` vertices; empty outside [0, dim+1].
    const std::vector<Face>& faces_of_card(int card) const;

    bool contains(const Face& f) const;
    const std::vector<Vertex>& vertex_ids() const { return vertices_; }
    long long vertex_count() const { return static_cast<long long>(vertices_.size()); }
    bool is_pure() const;

    const std::optional<std::string>& name() const { return name_; }
    SimplicialComplex renamed(std::optional<std::string> name) const;

    bool operator==(const SimplicialComplex& other) const { return facets_ == other.facets_; }

private:
    std::vector<Face> facets_;
    std::vector<std::vector<Face>> by_card_; // by_card_[c]: faces with c vertices
    std::vector<Vertex> vertices_;
    int dim_ = -1;
    std::optional<std::string> name_;
};

FVector f_vector(const SimplicialComplex& k);

/// g₂ = f₁ − d·f₀ + C(d+1,2) with d = dim+1. Requires dim ≥ 1.
long long g2(const SimplicialComplex& k);
GStats g_stats(const SimplicialComplex& k);

/// Faces disjoint from `f` whose union with `f` is a face. Requires f ∈ K.
SimplicialComplex link(const SimplicialComplex& k, const Face& f);

/// Smallest subcomplex containing every face whose union with `f` is a face.
SimplicialComplex closed_star(const SimplicialComplex& k, const Face& f);

/// Faces containing `f` (not a subcomplex unless f = ∅).
std::vector<Face> open_star(const SimplicialComplex& k, const Face& f);

/// Faces disjoint from `f`; `f` need not be a face of K.
SimplicialComplex antistar(const SimplicialComplex& k, const Face& f);

/// Join K ∗ L: all disjoint unions of a face of K with a face of L.
/// Vertex sets must be disjoint unless `auto_relabel` moves L out of the way.
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l,
                       bool auto_relabel = false);

/// {apex} ∗ K. The apex must be a fresh vertex.
SimplicialComplex cone(const SimplicialComplex& k, Vertex apex);

/// The 1-skeleton as a graph.
Graph skeleton_graph(const SimplicialComplex& k);

/// All minimal non-faces (every proper subset present), smallest first.
std::vector<Face> missing_faces(const SimplicialComplex& k);

/// True iff every missing face is an edge.
bool is_clique_complex(const SimplicialComplex& k);

using VertexMap = std::vector<std::pair<Vertex, Vertex>>; // (from, to), sorted by from

/// Copy of K with vertices renamed through `map` (must cover all vertices injectively).
SimplicialComplex relabel(const SimplicialComplex& k, const VertexMap& map);

/// A facet-set-preserving vertex bijection K → L, or nullopt. Deterministic:
/// vertices are matched in id order, so the lexicographically least bijection
/// compatible with the degree/face-degree refinement is returned.
std::optional<VertexMap> is_isomorphic(const SimplicialComplex& k, const SimplicialComplex& l);

Vertex lowest_unused_vertex(const SimplicialComplex& k);

} // namespace g2lab

#endif
