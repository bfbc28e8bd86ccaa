#include <doctest.h>

#include <random>

#include "g2lab/classify.hpp"
#include "g2lab/errors.hpp"
#include "g2lab/homology.hpp"
#include "oracles.hpp"

using namespace g2lab;

namespace {

SimplicialComplex octahedron() { return cross_polytope(3); }

SimplicialComplex bipyramid() { return join(boundary_simplex(1), polygon(3), true); }

} // namespace

TEST_SUITE_BEGIN("classify");

TEST_CASE("is_prime") {
    CHECK(is_prime(octahedron()));
    CHECK(!is_prime(bipyramid()));
    CHECK(!is_prime(boundary_simplex(4)));
    CHECK(is_prime(family_polygon_simplex(6, 4)));
    CHECK(is_prime(cross_polytope(4)));
    CHECK(!is_prime(stacked_sphere(4, 2, 1).first));
}

TEST_CASE("prime decomposition") {
    for (int k = 0; k <= 4; ++k) {
        PrimeDecomposition dec = prime_decomposition(stacked_sphere(4, k, 7).first);
        CHECK(dec.components.size() == static_cast<std::size_t>(k + 1));
        CHECK(dec.simplex_count == k + 1);
        for (const auto& comp : dec.components)
            CHECK(is_isomorphic(comp, boundary_simplex(4)).has_value());
        CHECK(dec.gluing_tree.size() == static_cast<std::size_t>(k));
    }

    // (∂σ²∗∂σ²) # ∂σ⁴ decomposes into its two summands
    SimplicialComplex j22 = family_two_simplices(2, 2);
    SimplicialComplex s4 = boundary_simplex(4);
    Face fa = j22.facets().front();
    VertexMap bij;
    for (std::size_t i = 0; i < fa.size(); ++i)
        bij.emplace_back(s4.facets().front().verts()[i], fa.verts()[i]);
    SimplicialComplex mixed = connected_sum(j22, s4, fa, s4.facets().front(), bij);
    PrimeDecomposition dec = prime_decomposition(mixed);
    REQUIRE(dec.components.size() == 2);
    CHECK(dec.simplex_count == 1);
    bool found_prime = false, found_simplex = false;
    for (const auto& comp : dec.components) {
        if (is_isomorphic(comp, j22)) found_prime = true;
        if (is_isomorphic(comp, s4)) found_simplex = true;
    }
    CHECK(found_prime);
    CHECK(found_simplex);

    // prime input decomposes into itself
    PrimeDecomposition self = prime_decomposition(octahedron());
    CHECK(self.components.size() == 1);
    CHECK(self.components[0] == octahedron());

    // reassembly through connected_sum is isomorphic to the input
    SimplicialComplex glued = connected_sum(dec.components[0], dec.components[1],
                                            dec.gluing_tree[0].shared, dec.gluing_tree[0].shared,
                                            [&] {
                                                VertexMap id;
                                                for (Vertex v : dec.gluing_tree[0].shared.verts())
                                                    id.emplace_back(v, v);
                                                return id;
                                            }());
    CHECK(is_isomorphic(glued, mixed).has_value());

    // a ball is rejected once the split fails
    std::vector<Face> ball_facets = boundary_simplex(4).facets();
    ball_facets.erase(ball_facets.begin());
    CHECK_THROWS_AS(prime_decomposition(SimplicialComplex::from_facets(ball_facets)),
                    invalid_input);
}

TEST_CASE("gluing the decomposition tree back reproduces the input") {
    // three-part chain: polyjoin # simplex # join2
    std::mt19937_64 rng(31);
    SimplicialComplex k = family_polygon_simplex(5, 4);
    for (const SimplicialComplex& part : {boundary_simplex(4), family_two_simplices(2, 2)}) {
        Face fk = k.facets()[rng() % k.facets().size()];
        Face fl = part.facets()[rng() % part.facets().size()];
        VertexMap bij;
        for (std::size_t i = 0; i < fl.size(); ++i)
            bij.emplace_back(fl.verts()[i], fk.verts()[i]);
        k = connected_sum(k, part, fk, fl, bij);
    }

    PrimeDecomposition dec = prime_decomposition(k);
    REQUIRE(dec.components.size() == 3);
    REQUIRE(dec.gluing_tree.size() == 2);

    // merge tree leaves into their neighbors with the identity bijection on
    // the shared facet; interior labels of the absorbed leaf may move but
    // every remaining shared facet lives in the surviving side
    std::vector<SimplicialComplex> comps = dec.components;
    std::vector<GluingEdge> edges = dec.gluing_tree;
    std::vector<bool> alive(comps.size(), true);
    while (!edges.empty()) {
        std::vector<int> degree(comps.size(), 0);
        for (const GluingEdge& e : edges) {
            ++degree[static_cast<std::size_t>(e.a)];
            ++degree[static_cast<std::size_t>(e.b)];
        }
        std::size_t pick = 0;
        while (degree[edges[pick].a] != 1 && degree[edges[pick].b] != 1) ++pick;
        GluingEdge e = edges[pick];
        int leaf = degree[e.a] == 1 ? e.a : e.b;
        int keep = leaf == e.a ? e.b : e.a;
        VertexMap id;
        for (Vertex v : e.shared.verts()) id.emplace_back(v, v);
        comps[static_cast<std::size_t>(keep)] =
            connected_sum(comps[static_cast<std::size_t>(keep)],
                          comps[static_cast<std::size_t>(leaf)], e.shared, e.shared, id);
        alive[static_cast<std::size_t>(leaf)] = false;
        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(pick));
        for (GluingEdge& rest : edges) {
            if (rest.a == leaf) rest.a = keep;
            if (rest.b == leaf) rest.b = keep;
        }
    }
    std::optional<SimplicialComplex> rebuilt;
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (alive[i]) {
            REQUIRE(!rebuilt.has_value());
            rebuilt = comps[i];
        }
    REQUIRE(rebuilt.has_value());
    CHECK(is_isomorphic(*rebuilt, k).has_value());
    CHECK(g2(*rebuilt) == g2(k));
}

TEST_CASE("is_stacked") {
    auto [big, log] = stacked_sphere(5, 12, 3);
    StackedResult res = is_stacked(big);
    CHECK(res.stacked);
    CHECK(replay(res.log) == big);
    CHECK(res.log.steps.size() == 12); // f₀ − (d+1)

    CHECK(!is_stacked(octahedron()).stacked);

    StackedResult base = is_stacked(boundary_simplex(4));
    CHECK(base.stacked);
    CHECK(base.log.steps.empty());

    for (int d = 3; d <= 6; ++d)
        for (int k = 0; k <= 5; ++k) {
            auto [sphere, glog] = stacked_sphere(d, k, static_cast<std::uint64_t>(10 * d + k));
            StackedResult r = is_stacked(sphere);
            CHECK(r.stacked);
            CHECK(r.log.steps.size() == static_cast<std::size_t>(k));
        }
}

TEST_CASE("detect_g2_one_form") {
    auto two = detect_g2_one_form(family_two_simplices(2, 3));
    REQUIRE(two.has_value());
    CHECK(two->family == Family::TwoSimplices);
    CHECK(two->a == 2);
    CHECK(two->b == 3);

    auto poly = detect_g2_one_form(family_polygon_simplex(7, 5));
    REQUIRE(poly.has_value());
    CHECK(poly->family == Family::PolygonSimplex);
    CHECK(poly->n == 7);
    CHECK(poly->d == 5);

    CHECK(!detect_g2_one_form(cross_polytope(4)).has_value());
    CHECK(!detect_g2_one_form(stacked_sphere(4, 3, 1).first).has_value());

    // detection is label-independent and certifies through the bijection
    SimplicialComplex moved = relabel(family_polygon_simplex(6, 4),
                                      {{0, 13}, {1, 2}, {2, 29}, {3, 4}, {4, 0}, {5, 7},
                                       {6, 11}, {7, 3}, {8, 17}});
    auto form = detect_g2_one_form(moved);
    REQUIRE(form.has_value());
    CHECK(form->n == 6);
    CHECK(relabel(moved, form->bijection) == family_polygon_simplex(6, 4));
}

TEST_CASE("classify verdicts") {
    Classification stacked = classify(stacked_sphere(4, 10, 2).first);
    CHECK(stacked.kind == VerdictKind::Stacked);
    CHECK(stacked.g2 == 0);
    CHECK(to_string(stacked) == "Stacked");

    Classification prime = classify(family_two_simplices(3, 3));
    CHECK(prime.kind == VerdictKind::PrimeTwoSimplices);
    CHECK(prime.form->a == 3);

    // stacking over a base keeps the base recognizable
    std::mt19937_64 rng(8);
    SimplicialComplex k = family_polygon_simplex(6, 4);
    for (int i = 0; i < 3; ++i)
        k = stack(k, k.facets()[rng() % k.facets().size()], lowest_unused_vertex(k));
    Classification over = classify(k);
    CHECK(over.kind == VerdictKind::StackedOverBase);
    CHECK(over.stack_count == 3);
    REQUIRE(over.form.has_value());
    CHECK(over.form->family == Family::PolygonSimplex);
    CHECK(over.form->n == 6);
    CHECK(to_string(over) == "StackedOverBase(PrimePolygonSimplex(n=6,d=4),stacks=3)");

    Classification big = classify(cross_polytope(4));
    CHECK(big.kind == VerdictKind::Unclassified);
    CHECK(big.g2 == 2);

    // d = 3: stackedness only; the octahedron stays unclassified at g2 = 0
    Classification octa = classify(octahedron());
    CHECK(octa.kind == VerdictKind::Unclassified);
    CHECK(octa.g2 == 0);
    Classification s3 = classify(stacked_sphere(3, 5, 4).first);
    CHECK(s3.kind == VerdictKind::Stacked);

    // sphere check opt-in
    std::vector<Face> ball_facets = boundary_simplex(4).facets();
    ball_facets.erase(ball_facets.begin());
    Classification not_sphere =
        classify(SimplicialComplex::from_facets(ball_facets), /*check_sphere=*/true);
    CHECK(not_sphere.kind == VerdictKind::NotASphere);

    CHECK_THROWS_AS(classify(polygon(5)), invalid_input); // d = 2 unsupported
}

TEST_CASE("classification round trip over the family grid") {
    for (int a = 2; a <= 3; ++a)
        for (int b = a; a + b <= 7; ++b) {
            Classification v = classify(family_two_simplices(a, b));
            CHECK(v.kind == VerdictKind::PrimeTwoSimplices);
            CHECK(v.form->a == a);
            CHECK(v.form->b == b);
        }
    for (int n = 3; n <= 8; ++n)
        for (int d = 4; d <= 6; ++d) {
            Classification v = classify(family_polygon_simplex(n, d));
            if (n == 3) {
                CHECK(v.kind == VerdictKind::PrimeTwoSimplices);
                CHECK(v.form->a == 2);
                CHECK(v.form->b == d - 2);
            } else {
                CHECK(v.kind == VerdictKind::PrimePolygonSimplex);
                CHECK(v.form->n == n);
            }
        }
}

TEST_CASE("structural invariants of prime g2 = 1 spheres") {
    D4Report r22 = d4_invariant_checks(family_two_simplices(2, 2));
    CHECK(r22.d == 4);
    CHECK(r22.missing_triangles.size() == 2);
    CHECK(r22.form.has_value());

    D4Report rp8 = d4_invariant_checks(family_polygon_simplex(8, 4));
    REQUIRE(rp8.missing_triangles.size() == 1);
    CHECK(rp8.missing_triangles[0] == Face{8, 9, 10}); // the simplex factor

    D4Report r23 = d4_invariant_checks(family_two_simplices(2, 3));
    CHECK(r23.d == 5);
    REQUIRE(r23.witness.has_value());
    CHECK(*r23.witness >= 3); // witness sits in the σ³ factor (vertices 3..6)
    CHECK(r23.witness_link_prime);
    CHECK(r23.witness_link_spans);

    D4Report rp65 = d4_invariant_checks(family_polygon_simplex(6, 5));
    REQUIRE(rp65.witness.has_value());
    CHECK(*rp65.witness >= 6); // simplex-factor vertices span the whole link
    CHECK(rp65.witness_link_prime);

    CHECK_THROWS_AS(d4_invariant_checks(boundary_simplex(4)), invalid_input);
    CHECK_THROWS_AS(d4_invariant_checks(cross_polytope(4)), invalid_input);
}

TEST_CASE("g2 = 0 non-spheres that cannot un-stack raise a theorem violation") {
    // removing a facet from a stacked sphere keeps g2 = 0 but leaves a ball,
    // and greedy un-stacking cannot reach a simplex boundary
    auto [sphere, log] = stacked_sphere(4, 2, 6);
    std::vector<Face> facets = sphere.facets();
    facets.pop_back();
    SimplicialComplex ball = SimplicialComplex::from_facets(facets);
    REQUIRE(g2(ball) == 0);
    CHECK(!is_stacked(ball).stacked);
    CHECK_THROWS_AS(classify(ball), theorem_violation);
}

TEST_CASE("no corpus prime flag 3-sphere has g2 = 1") {
    // every prime g2 = 1 3-sphere generated here carries a missing triangle,
    // so none of them is a clique complex
    for (int n = 3; n <= 9; ++n) {
        SimplicialComplex k = family_polygon_simplex(n, 4);
        CHECK(g2(k) == 1);
        CHECK(is_prime(k));
        CHECK(!is_clique_complex(k));
    }
}

TEST_SUITE_END();
