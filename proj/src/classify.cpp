#include "g2lab/classify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "g2lab/errors.hpp"
#include "g2lab/homology.hpp"

namespace g2lab {

bool is_boundary_simplex(const SimplicialComplex& k) {
    const int d = k.dim() + 1;
    if (d < 1) return false;
    return k.vertex_count() == d + 1 &&
           static_cast<long long>(k.facets().size()) == d + 1 && k.is_pure();
}

bool is_prime(const SimplicialComplex& k) {
    if (!k.is_pure())
        throw invalid_input("is_prime: complex is not pure");
    if (is_boundary_simplex(k)) return false;
    const std::size_t facet_size = static_cast<std::size_t>(k.dim() + 1);
    for (const Face& f : missing_faces(k))
        if (f.size() == facet_size) return false;
    return true;
}

namespace {

std::optional<Face> first_missing_facet(const SimplicialComplex& k) {
    const std::size_t facet_size = static_cast<std::size_t>(k.dim() + 1);
    for (const Face& f : missing_faces(k))
        if (f.size() == facet_size) return f;
    return std::nullopt;
}

void decompose_into(const SimplicialComplex& k, PrimeDecomposition& out) {
    std::optional<Face> cut = first_missing_facet(k);
    if (!cut) {
        out.components.push_back(k);
        return;
    }

    // ∂cut is a codimension-1 sphere inside K; forbidding its ridges as
    // crossings separates the facets into the two sides.
    std::vector<Face> forbidden;
    for (std::size_t i = 0; i < cut->size(); ++i) forbidden.push_back(cut->without_index(i));
    std::vector<std::vector<Face>> sides = facet_components(k, forbidden);
    if (sides.size() != 2) {
        if (is_homology_sphere(k))
            throw theorem_violation(
                "prime_decomposition: a missing facet of a homology sphere did not "
                "separate it into two sides");
        throw invalid_input("prime_decomposition: input is not a homology sphere");
    }

    std::array<int, 2> holder{};
    for (int s = 0; s < 2; ++s) {
        std::vector<Face> facets = sides[static_cast<std::size_t>(s)];
        facets.push_back(*cut);
        SimplicialComplex side = SimplicialComplex::from_facets(std::move(facets));
        std::size_t first_new = out.components.size();
        decompose_into(side, out);
        // The cut facet survives recursion inside exactly one leaf.
        holder[static_cast<std::size_t>(s)] = -1;
        for (std::size_t i = first_new; i < out.components.size(); ++i) {
            const auto& fs = out.components[i].facets();
            if (std::binary_search(fs.begin(), fs.end(), *cut)) {
                holder[static_cast<std::size_t>(s)] = static_cast<int>(i);
                break;
            }
        }
    }
    out.gluing_tree.push_back({holder[0], holder[1], *cut});
}

} // namespace

PrimeDecomposition prime_decomposition(const SimplicialComplex& k) {
    if (!k.is_pure())
        throw invalid_input("prime_decomposition: complex is not pure");
    if (k.dim() + 1 < 3)
        throw invalid_input("prime_decomposition: needs facet size >= 3");
    PrimeDecomposition out;
    decompose_into(k, out);
    for (const SimplicialComplex& c : out.components)
        if (is_boundary_simplex(c)) ++out.simplex_count;
    return out;
}

StackedResult is_stacked(const SimplicialComplex& k) {
    if (!k.is_pure())
        throw invalid_input("is_stacked: complex is not pure");
    const int d = k.dim() + 1;
    if (d < 3) throw invalid_input("is_stacked: needs facet size >= 3");

    SimplicialComplex cur = k;
    std::vector<StackingStep> reversed;
    for (;;) {
        if (is_boundary_simplex(cur)) {
            std::reverse(reversed.begin(), reversed.end());
            return {true, StackingLog{std::move(cur), std::move(reversed)}};
        }
        bool progressed = false;
        for (Vertex v : cur.vertex_ids()) {
            SimplicialComplex lk = link(cur, Face{v});
            if (lk.vertex_count() != d) continue;
            if (!is_boundary_simplex(lk)) continue;
            Face neighbors{lk.vertex_ids()};
            if (cur.contains(neighbors)) continue; // simplex base case, handled above
            // un-stack: star of v collapses back to the facet it replaced
            std::vector<Face> facets;
            for (const Face& g : cur.facets())
                if (!g.contains(v)) facets.push_back(g);
            facets.push_back(neighbors);
            reversed.push_back({std::move(neighbors), v});
            cur = SimplicialComplex::from_facets(std::move(facets));
            progressed = true;
            break;
        }
        if (!progressed) return {};
    }
}

namespace {

// All (|f|−1)-subsets of a vertex set, as a complex.
SimplicialComplex boundary_of(const Face& f) {
    std::vector<Face> facets;
    for (std::size_t i = 0; i < f.size(); ++i) facets.push_back(f.without_index(i));
    return SimplicialComplex::from_facets(std::move(facets));
}

} // namespace

std::optional<DetectedForm> detect_g2_one_form(const SimplicialComplex& k) {
    const int d = k.dim() + 1;
    if (d < 4 || !k.is_pure()) return std::nullopt;
    std::vector<Face> missing = missing_faces(k);

    std::vector<Face> big;
    std::vector<Face> edges;
    for (const Face& f : missing)
        (f.size() >= 3 ? big : edges).push_back(f);

    if (missing.size() == 2 && big.size() == 2 && !big[0].intersects(big[1])) {
        // ∂σ^a ∗ ∂σ^b: the two factors are exactly the two missing faces.
        Face fa = big[0], fb = big[1];
        if (fa.size() > fb.size()) std::swap(fa, fb);
        int a = static_cast<int>(fa.size()) - 1;
        int b = static_cast<int>(fb.size()) - 1;
        if (a < 2 || a + b != d) return std::nullopt;
        if (fa.size() + fb.size() != static_cast<std::size_t>(k.vertex_count()))
            return std::nullopt;
        if (!(k == join(boundary_of(fa), boundary_of(fb)))) return std::nullopt;

        DetectedForm form;
        form.family = Family::TwoSimplices;
        form.a = a;
        form.b = b;
        form.d = d;
        Vertex canon = 0;
        for (Vertex v : fa.verts()) form.bijection.emplace_back(v, canon++);
        for (Vertex v : fb.verts()) form.bijection.emplace_back(v, canon++);
        std::sort(form.bijection.begin(), form.bijection.end());
        if (!(relabel(k, form.bijection) == family_two_simplices(a, b))) return std::nullopt;
        return form;
    }

    if (big.size() == 1 && big[0].size() == static_cast<std::size_t>(d - 1)) {
        // cycle ∗ ∂σ^{d−2}: one fat missing face, its complement an n-cycle.
        const Face& simplex_part = big[0];
        std::vector<Vertex> rest;
        for (Vertex v : k.vertex_ids())
            if (!simplex_part.contains(v)) rest.push_back(v);
        const int n = static_cast<int>(rest.size());
        if (n < 4) return std::nullopt;

        std::map<Vertex, std::vector<Vertex>> adj;
        for (Vertex u : rest)
            for (Vertex w : rest)
                if (u < w && k.contains(Face{u, w})) {
                    adj[u].push_back(w);
                    adj[w].push_back(u);
                }
        for (Vertex u : rest)
            if (adj[u].size() != 2) return std::nullopt;

        std::vector<Vertex> order;
        Vertex start = rest.front();
        Vertex prev = -1, cur = start;
        do {
            order.push_back(cur);
            Vertex lo = std::min(adj[cur][0], adj[cur][1]);
            Vertex hi = std::max(adj[cur][0], adj[cur][1]);
            Vertex nxt = (lo == prev) ? hi : (hi == prev ? lo : lo); // 2nd step: smaller neighbor
            prev = cur;
            cur = nxt;
        } while (cur != start && order.size() <= static_cast<std::size_t>(n));
        if (order.size() != static_cast<std::size_t>(n)) return std::nullopt; // disconnected

        std::vector<Face> cycle_facets;
        for (int i = 0; i < n; ++i)
            cycle_facets.push_back(Face{order[static_cast<std::size_t>(i)]}.united(
                Face{order[static_cast<std::size_t>((i + 1) % n)]}));
        SimplicialComplex cycle = SimplicialComplex::from_facets(std::move(cycle_facets));
        if (!(k == join(cycle, boundary_of(simplex_part)))) return std::nullopt;

        DetectedForm form;
        form.family = Family::PolygonSimplex;
        form.n = n;
        form.d = d;
        for (int i = 0; i < n; ++i)
            form.bijection.emplace_back(order[static_cast<std::size_t>(i)], i);
        Vertex canon = n;
        for (Vertex v : simplex_part.verts()) form.bijection.emplace_back(v, canon++);
        std::sort(form.bijection.begin(), form.bijection.end());
        if (!(relabel(k, form.bijection) == family_polygon_simplex(n, d))) return std::nullopt;
        return form;
    }

    return std::nullopt;
}

Classification classify(const SimplicialComplex& k, bool check_sphere) {
    if (!k.is_pure())
        throw invalid_input("classify: complex is not pure");
    const int d = k.dim() + 1;
    if (d < 3)
        throw invalid_input("classify: needs facet size >= 3");

    Classification c;
    c.d = d;
    if (check_sphere && !is_homology_sphere(k)) {
        c.kind = VerdictKind::NotASphere;
        return c;
    }
    c.g2 = g2(k);

    if (d == 3) {
        // Only stackedness is decidable here; the g₂ = 0 equivalence starts at d = 4.
        StackedResult s = is_stacked(k);
        if (s.stacked) {
            c.kind = VerdictKind::Stacked;
            c.stacking = std::move(s.log);
        }
        return c;
    }

    if (c.g2 == 0) {
        StackedResult s = is_stacked(k);
        if (!s.stacked)
            throw theorem_violation("classify: g2 = 0 but greedy un-stacking failed");
        c.kind = VerdictKind::Stacked;
        c.stacking = std::move(s.log);
        return c;
    }

    if (c.g2 == 1) {
        PrimeDecomposition dec = prime_decomposition(k);
        const SimplicialComplex* prime_part = nullptr;
        for (const SimplicialComplex& comp : dec.components) {
            if (is_boundary_simplex(comp)) continue;
            if (prime_part)
                throw theorem_violation("classify: g2 = 1 with two non-simplex components");
            prime_part = &comp;
        }
        if (!prime_part)
            throw theorem_violation("classify: g2 = 1 but only simplex components");
        if (g2(*prime_part) != 1)
            throw theorem_violation("classify: prime component has unexpected g2");
        std::optional<DetectedForm> form = detect_g2_one_form(*prime_part);
        if (!form)
            throw theorem_violation("classify: prime g2 = 1 component matches neither family");
        c.form = std::move(form);
        c.stack_count = dec.simplex_count;
        c.decomposition = std::move(dec);
        if (c.stack_count == 0)
            c.kind = c.form->family == Family::TwoSimplices ? VerdictKind::PrimeTwoSimplices
                                                            : VerdictKind::PrimePolygonSimplex;
        else
            c.kind = VerdictKind::StackedOverBase;
        return c;
    }

    c.kind = VerdictKind::Unclassified;
    return c;
}

std::string to_string(const Classification& c) {
    auto family_str = [](const DetectedForm& f) {
        if (f.family == Family::TwoSimplices)
            return "PrimeTwoSimplices(a=" + std::to_string(f.a) +
                   ",b=" + std::to_string(f.b) + ")";
        return "PrimePolygonSimplex(n=" + std::to_string(f.n) +
               ",d=" + std::to_string(f.d) + ")";
    };
    switch (c.kind) {
    case VerdictKind::NotASphere: return "NotASphere";
    case VerdictKind::Stacked: return "Stacked";
    case VerdictKind::PrimeTwoSimplices:
    case VerdictKind::PrimePolygonSimplex: return family_str(*c.form);
    case VerdictKind::StackedOverBase:
        return "StackedOverBase(" + family_str(*c.form) +
               ",stacks=" + std::to_string(c.stack_count) + ")";
    case VerdictKind::Unclassified: return "Unclassified(g2=" + std::to_string(c.g2) + ")";
    }
    return "?";
}

D4Report d4_invariant_checks(const SimplicialComplex& k) {
    if (!is_prime(k))
        throw invalid_input("d4_invariant_checks: input must be prime");
    if (g2(k) != 1)
        throw invalid_input("d4_invariant_checks: input must have g2 = 1");
    D4Report rep;
    rep.d = k.dim() + 1;
    if (rep.d < 4)
        throw invalid_input("d4_invariant_checks: needs d >= 4");

    if (rep.d == 4) {
        for (const Face& f : missing_faces(k))
            if (f.size() == 3) rep.missing_triangles.push_back(f);
        if (rep.missing_triangles.empty())
            throw theorem_violation("d4: prime g2 = 1 3-sphere without a missing triangle");
        rep.form = detect_g2_one_form(k);
        if (!rep.form)
            throw theorem_violation("d4: join form ∂T ∗ cycle not confirmed");
        return rep;
    }

    for (Vertex u : k.vertex_ids()) {
        SimplicialComplex lk = link(k, Face{u});
        if (lk.vertex_count() != k.vertex_count() - 1) continue;
        if (g2(lk) != 1) continue;
        if (!is_prime(lk)) continue;
        rep.witness = u;
        rep.witness_link_g2 = 1;
        rep.witness_link_prime = true;
        rep.witness_link_spans = true;
        return rep;
    }
    throw theorem_violation("d>4: no witness vertex with prime spanning g2 = 1 link");
}

} // namespace g2lab
