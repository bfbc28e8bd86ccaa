#include "g2lab/constructions.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "g2lab/errors.hpp"
#include "g2lab/gf61.hpp"

namespace g2lab {

namespace {

// Uniform index pick without modulo bias; deterministic under seed.
std::size_t pick_index(std::mt19937_64& rng, std::size_t n) {
    const std::uint64_t bound = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
        std::uint64_t r = rng();
        if (r < bound) return static_cast<std::size_t>(r % n);
    }
}

} // namespace

SimplicialComplex boundary_simplex(int m) {
    if (m < 1) throw invalid_input("boundary_simplex: m must be >= 1");
    std::vector<Vertex> all;
    for (Vertex v = 0; v <= m; ++v) all.push_back(v);
    Face full{all};
    std::vector<Face> facets;
    for (std::size_t i = 0; i < full.size(); ++i) facets.push_back(full.without_index(i));
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex polygon(int n) {
    if (n < 3) throw invalid_input("polygon: n must be >= 3");
    std::vector<Face> facets;
    for (Vertex v = 0; v < n; ++v)
        facets.push_back(Face{v, (v + 1) % n});
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex family_two_simplices(int a, int b) {
    if (a < 2 || b < 2)
        throw invalid_input("family_two_simplices: both dimensions must be >= 2");
    return join(boundary_simplex(a), boundary_simplex(b), /*auto_relabel=*/true);
}

SimplicialComplex family_polygon_simplex(int n, int d) {
    if (n < 3) throw invalid_input("family_polygon_simplex: n must be >= 3");
    if (d < 4) throw invalid_input("family_polygon_simplex: d must be >= 4");
    return join(polygon(n), boundary_simplex(d - 2), /*auto_relabel=*/true);
}

SimplicialComplex cross_polytope(int m) {
    if (m < 1) throw invalid_input("cross_polytope: m must be >= 1");
    if (m > 16) throw invalid_input("cross_polytope: m too large");
    std::vector<Face> facets;
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        std::vector<Vertex> vs;
        for (int i = 0; i < m; ++i) vs.push_back(2 * i + ((mask >> i) & 1));
        facets.emplace_back(std::move(vs));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex stack(const SimplicialComplex& k, const Face& facet, Vertex apex) {
    const auto& facets = k.facets();
    if (!std::binary_search(facets.begin(), facets.end(), facet))
        throw invalid_input("stack: not a facet of the complex");
    if (std::binary_search(k.vertex_ids().begin(), k.vertex_ids().end(), apex))
        throw invalid_input("stack: apex already a vertex");
    std::vector<Face> out;
    for (const Face& g : facets)
        if (g != facet) out.push_back(g);
    for (std::size_t i = 0; i < facet.size(); ++i)
        out.push_back(facet.without_index(i).with_vertex(apex));
    return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex replay(const StackingLog& log) {
    SimplicialComplex k = log.base;
    for (const StackingStep& s : log.steps) k = stack(k, s.facet, s.apex);
    return k;
}

std::pair<SimplicialComplex, StackingLog> stacked_sphere(int d, int k, std::uint64_t seed) {
    if (d < 2) throw invalid_input("stacked_sphere: d must be >= 2");
    if (k < 0) throw invalid_input("stacked_sphere: stack count must be >= 0");
    StackingLog log{boundary_simplex(d), {}};
    SimplicialComplex cur = log.base;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < k; ++i) {
        const auto& facets = cur.facets();
        Face facet = facets[pick_index(rng, facets.size())];
        Vertex apex = lowest_unused_vertex(cur);
        cur = stack(cur, facet, apex);
        log.steps.push_back({std::move(facet), apex});
    }
    return {std::move(cur), std::move(log)};
}

SimplicialComplex connected_sum(const SimplicialComplex& k, const SimplicialComplex& l,
                                const Face& facet_k, const Face& facet_l,
                                const VertexMap& bijection) {
    if (k.dim() != l.dim())
        throw invalid_input("connected_sum: complexes have different dimensions");
    if (facet_k.size() != facet_l.size())
        throw invalid_input("connected_sum: facets have different sizes");
    if (!std::binary_search(k.facets().begin(), k.facets().end(), facet_k) ||
        !std::binary_search(l.facets().begin(), l.facets().end(), facet_l))
        throw invalid_input("connected_sum: not a facet");

    std::map<Vertex, Vertex> m(bijection.begin(), bijection.end());
    {
        std::set<Vertex> image;
        for (Vertex v : facet_l.verts()) {
            auto it = m.find(v);
            if (it == m.end())
                throw invalid_input("connected_sum: bijection misses a facet vertex");
            if (!facet_k.contains(it->second))
                throw invalid_input("connected_sum: bijection leaves the target facet");
            if (!image.insert(it->second).second)
                throw invalid_input("connected_sum: bijection not injective");
        }
        if (m.size() != facet_l.size())
            throw invalid_input("connected_sum: bijection domain must be the facet");
    }

    std::set<Vertex> used(k.vertex_ids().begin(), k.vertex_ids().end());
    Vertex next = 0;
    auto fresh = [&]() {
        while (used.count(next)) ++next;
        used.insert(next);
        return next;
    };
    VertexMap full(bijection.begin(), bijection.end());
    for (Vertex v : l.vertex_ids())
        if (!m.count(v)) full.emplace_back(v, fresh());
    SimplicialComplex moved = relabel(l, full);

    std::vector<Face> out;
    for (const Face& g : k.facets())
        if (g != facet_k) out.push_back(g);
    for (const Face& g : moved.facets())
        if (g != facet_k) out.push_back(g);
    return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex stellar_subdivide_ridge(const SimplicialComplex& k, const Face& ridge) {
    if (!k.is_pure() || static_cast<int>(ridge.size()) != k.dim() || !k.contains(ridge))
        throw invalid_input("stellar_subdivide_ridge: not a ridge of a pure complex");
    Vertex apex = lowest_unused_vertex(k);
    std::vector<Face> out;
    for (const Face& g : k.facets()) {
        if (!ridge.is_subset_of(g)) {
            out.push_back(g);
            continue;
        }
        for (Vertex r : ridge.verts())
            out.push_back(g.minus(Face{r}).with_vertex(apex));
    }
    return SimplicialComplex::from_facets(std::move(out));
}

bool link_condition(const SimplicialComplex& k, Vertex u, Vertex v) {
    Face edge = Face{u}.united(Face{v});
    if (!k.contains(edge)) throw invalid_input("link_condition: not an edge");
    SimplicialComplex lk_u = link(k, Face{u});
    SimplicialComplex lk_v = link(k, Face{v});
    SimplicialComplex lk_uv = link(k, edge);
    // lk(uv) ⊆ lk(u) ∩ lk(v) always; equality iff every common face is in lk(uv).
    for (int c = 0; c <= lk_u.dim() + 1; ++c)
        for (const Face& f : lk_u.faces_of_card(c))
            if (lk_v.contains(f) && !lk_uv.contains(f)) return false;
    return true;
}

ContractionResult edge_contract(const SimplicialComplex& k, Vertex u, Vertex v) {
    Face edge = Face{u}.united(Face{v});
    if (!k.contains(edge)) throw invalid_input("edge_contract: not an edge");

    SimplicialComplex lk_u = link(k, Face{u});
    SimplicialComplex lk_v_in_lk_u = link(lk_u, Face{v});
    SimplicialComplex anti = antistar(lk_u, Face{v});

    ContractionResult res;
    res.removed_vertex = u;
    res.kept_vertex = v;
    res.link_condition_held = link_condition(k, u, v);
    for (Vertex w : anti.vertex_ids())
        if (!std::binary_search(lk_v_in_lk_u.vertex_ids().begin(),
                                lk_v_in_lk_u.vertex_ids().end(), w))
            res.independent_set.push_back(w);
    res.common_link_vertices = lk_v_in_lk_u.vertex_count();

    SimplicialComplex without_u = antistar(k, Face{u});
    std::vector<Face> out;
    for (const Face& g : without_u.facets()) out.push_back(g);
    for (const Face& g : anti.facets()) out.push_back(g.with_vertex(v));
    res.complex = SimplicialComplex::from_facets(std::move(out));

    FVector before = f_vector(k);
    FVector after = f_vector(res.complex);
    res.delta_f0 = after.f(0) - before.f(0);
    res.delta_f1 = after.f(1) - before.f(1);
    if (k.dim() >= 1 && res.complex.dim() >= 1)
        res.delta_g2 = g2(res.complex) - g2(k);
    return res;
}

} // namespace g2lab
