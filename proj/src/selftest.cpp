#include "g2lab/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "g2lab/classify.hpp"
#include "g2lab/complex.hpp"
#include "g2lab/constructions.hpp"
#include "g2lab/homology.hpp"
#include "g2lab/json_io.hpp"
#include "g2lab/rigidity.hpp"

namespace g2lab {

namespace {

// Single place all checks report through, so a criterion records its first
// failure with enough context to chase.
struct Checker {
    bool ok = true;
    std::string first_failure;
    long long checks = 0;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond && ok) {
            ok = false;
            first_failure = what;
        }
    }
};

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
    const std::uint64_t bound = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
        std::uint64_t r = rng();
        if (r < bound) return static_cast<std::size_t>(r % n);
    }
}

Face random_facet(std::mt19937_64& rng, const SimplicialComplex& k) {
    return k.facets()[pick(rng, k.facets().size())];
}

// Bijection from facet_l onto facet_k in a seeded random order.
VertexMap random_bijection(std::mt19937_64& rng, const Face& facet_l, const Face& facet_k) {
    std::vector<Vertex> targets = facet_k.verts();
    for (std::size_t i = targets.size(); i > 1; --i)
        std::swap(targets[i - 1], targets[pick(rng, i)]);
    VertexMap out;
    for (std::size_t i = 0; i < facet_l.size(); ++i)
        out.emplace_back(facet_l.verts()[i], targets[i]);
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex octahedron_join(int d) {
    // cross_polytope(3) ∗ ∂σ^{d−3}: a non-stacked homology (d−1)-sphere.
    return join(cross_polytope(3), boundary_simplex(d - 3), /*auto_relabel=*/true);
}

// ---- criterion bodies -----------------------------------------------------

void criterion_polygon_family(Checker& c) {
    for (int d = 4; d <= 7; ++d)
        for (int n = 3; n <= 12; ++n) {
            SimplicialComplex k = family_polygon_simplex(n, d);
            std::string tag = "polyjoin(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")";
            c.expect(g2(k) == 1, tag + ": g2 != 1");
            c.expect(is_prime(k), tag + ": not prime");
        }
}

void criterion_stacked_iff_g2_zero(Checker& c) {
    for (int i = 0; i < 100; ++i) {
        int d = 4 + i % 3;
        std::mt19937_64 rng(9000 + static_cast<std::uint64_t>(i));
        int max_stacks = 40 - (d + 1);
        int stacks = static_cast<int>(pick(rng, static_cast<std::size_t>(max_stacks + 1)));
        auto [k, log] = stacked_sphere(d, stacks, 1000 + static_cast<std::uint64_t>(i));
        std::string tag = "stacked(d=" + std::to_string(d) + ",k=" + std::to_string(stacks) + ")";
        c.expect(g2(k) == 0, tag + ": g2 != 0");
        StackedResult s = is_stacked(k);
        c.expect(s.stacked, tag + ": un-stacking failed");
        if (s.stacked) c.expect(replay(s.log) == k, tag + ": log replay mismatch");
    }
    for (int d = 4; d <= 6; ++d) {
        SimplicialComplex k = octahedron_join(d);
        std::string tag = "octahedron-join(d=" + std::to_string(d) + ")";
        c.expect(g2(k) >= 1, tag + ": g2 < 1");
        c.expect(!is_stacked(k).stacked, tag + ": claimed stacked");
    }
}

void criterion_family_round_trip(Checker& c) {
    for (int a = 2; a <= 6; ++a)
        for (int b = a; a + b <= 8; ++b) {
            Classification v = classify(family_two_simplices(a, b));
            std::string tag = "join2(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")";
            c.expect(v.kind == VerdictKind::PrimeTwoSimplices, tag + ": wrong verdict");
            if (v.form) c.expect(v.form->a == a && v.form->b == b, tag + ": wrong parameters");
        }
    for (int n = 3; n <= 10; ++n)
        for (int d = 4; d <= 7; ++d) {
            Classification v = classify(family_polygon_simplex(n, d));
            std::string tag = "polyjoin(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")";
            if (n == 3) {
                // C₃ = ∂σ², so the join lands in the two-simplices family.
                c.expect(v.kind == VerdictKind::PrimeTwoSimplices, tag + ": wrong verdict");
                if (v.form)
                    c.expect(v.form->a == 2 && v.form->b == d - 2, tag + ": wrong parameters");
            } else {
                c.expect(v.kind == VerdictKind::PrimePolygonSimplex, tag + ": wrong verdict");
                if (v.form)
                    c.expect(v.form->n == n && v.form->d == d, tag + ": wrong parameters");
            }
        }
}

void criterion_stacked_over_base(Checker& c) {
    for (int i = 0; i < 50; ++i) {
        std::mt19937_64 rng(44000 + static_cast<std::uint64_t>(i));
        bool two_simplices = (i % 2) == 0;
        SimplicialComplex base = [&] {
            if (two_simplices) {
                int a = 2 + static_cast<int>(pick(rng, 2));       // 2..3
                int b = a + static_cast<int>(pick(rng, static_cast<std::size_t>(8 - 2 * a)));
                return family_two_simplices(a, b);
            }
            int n = 4 + static_cast<int>(pick(rng, 6));           // 4..9
            int d = 4 + static_cast<int>(pick(rng, 3));           // 4..6
            return family_polygon_simplex(n, d);
        }();
        int d = base.dim() + 1;
        int stacks = 1 + static_cast<int>(pick(rng, 5));
        int extra_summands = static_cast<int>(pick(rng, 3));

        SimplicialComplex k = base;
        for (int s = 0; s < stacks; ++s)
            k = stack(k, random_facet(rng, k), lowest_unused_vertex(k));
        for (int s = 0; s < extra_summands; ++s) {
            SimplicialComplex simplex = boundary_simplex(d);
            Face fk = random_facet(rng, k);
            Face fl = random_facet(rng, simplex);
            k = connected_sum(k, simplex, fk, fl, random_bijection(rng, fl, fk));
        }

        Classification v = classify(k);
        std::string tag = "instance " + std::to_string(i);
        c.expect(v.kind == VerdictKind::StackedOverBase, tag + ": wrong verdict");
        c.expect(v.stack_count == stacks + extra_summands, tag + ": wrong stack count");
        if (!v.form) continue;
        Classification vb = classify(base);
        c.expect(vb.form && vb.form->family == v.form->family &&
                     vb.form->a == v.form->a && vb.form->b == v.form->b &&
                     vb.form->n == v.form->n && vb.form->d == v.form->d,
                 tag + ": base parameters not recovered");
    }
}

void criterion_rigidity_anchors(Checker& c) {
    for (int d = 1; d <= 6; ++d)
        for (int n = d + 1; n <= 10; ++n) {
            long long want = static_cast<long long>(d) * n - static_cast<long long>(d + 1) * d / 2;
            long long got = generic_rank(Graph::complete(n), d, kDefaultTrials, 5);
            c.expect(got == want, "K_" + std::to_string(n) + " in d=" + std::to_string(d) +
                                      ": rank " + std::to_string(got));
        }

    Graph octa = skeleton_graph(cross_polytope(3));
    c.expect(is_generically_rigid(octa, 3), "octahedron graph not 3-rigid");
    c.expect(is_stress_free(octa, 3), "octahedron graph not 3-stress-free");

    std::vector<std::pair<std::string, SimplicialComplex>> corpus;
    corpus.emplace_back("stacked(3,12)", stacked_sphere(3, 12, 2).first);
    corpus.emplace_back("stacked(4,195)", stacked_sphere(4, 195, 7).first); // 200 vertices
    corpus.emplace_back("stacked(5,20)", stacked_sphere(5, 20, 3).first);
    corpus.emplace_back("stacked(6,10)", stacked_sphere(6, 10, 4).first);
    corpus.emplace_back("crosspoly(3)", cross_polytope(3));
    corpus.emplace_back("crosspoly(4)", cross_polytope(4));
    corpus.emplace_back("crosspoly(5)", cross_polytope(5));
    corpus.emplace_back("join2(2,2)", family_two_simplices(2, 2));
    corpus.emplace_back("join2(2,3)", family_two_simplices(2, 3));
    corpus.emplace_back("join2(3,3)", family_two_simplices(3, 3));
    corpus.emplace_back("polyjoin(5,4)", family_polygon_simplex(5, 4));
    corpus.emplace_back("polyjoin(8,4)", family_polygon_simplex(8, 4));
    corpus.emplace_back("polyjoin(6,5)", family_polygon_simplex(6, 5));
    corpus.emplace_back("octa-join(5)", octahedron_join(5));
    corpus.emplace_back("octa-join(6)", octahedron_join(6));
    {
        SimplicialComplex k = family_polygon_simplex(6, 4);
        for (int step = 0; step < 3; ++step) {
            k = stellar_subdivide_ridge(k, k.faces(k.dim() - 1).front());
            corpus.emplace_back("subdivided polyjoin(6,4) x" + std::to_string(step + 1), k);
        }
    }
    for (const auto& [tag, k] : corpus) {
        int d = k.dim() + 1;
        RigidityReport rep = analyze_rigidity(skeleton_graph(k), d, kDefaultTrials, 11);
        c.expect(rep.is_rigid, tag + ": skeleton not generically rigid");
        c.expect(rep.kernel_dim == g2(k), tag + ": kernel_dim != g2");
    }
}

void criterion_cone_lemma(Checker& c) {
    for (int i = 0; i < 50; ++i) {
        std::mt19937_64 rng(7700 + static_cast<std::uint64_t>(i));
        int n = 4 + static_cast<int>(pick(rng, 12)); // 4..15
        Graph g;
        for (Vertex v = 0; v < n; ++v) g.vertices.push_back(v);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (pick(rng, 10) < 4) g.edges.emplace_back(u, v);
        int d = 2 + i % 2;
        std::string tag = "graph " + std::to_string(i);

        RigidityReport base = analyze_rigidity(g, d, kDefaultTrials, 21);
        Vertex apex = n;
        RigidityReport coned = analyze_rigidity(cone_graph(g, apex), d + 1, kDefaultTrials, 22);
        c.expect(coned.kernel_dim == base.kernel_dim, tag + ": cone kernel dim changed");
        if (base.kernel_dim > 0)
            c.expect(std::binary_search(coned.participating_vertices.begin(),
                                        coned.participating_vertices.end(), apex),
                     tag + ": apex not participating");
    }
}

void criterion_prime_stress(Checker& c) {
    std::vector<std::pair<std::string, SimplicialComplex>> corpus;
    for (int a = 2; a <= 6; ++a)
        for (int b = a; a + b <= 8; ++b)
            corpus.emplace_back("join2(" + std::to_string(a) + "," + std::to_string(b) + ")",
                                family_two_simplices(a, b));
    for (int n = 4; n <= 8; ++n)
        for (int d = 4; d <= 6; ++d)
            corpus.emplace_back("polyjoin(" + std::to_string(n) + "," + std::to_string(d) + ")",
                                family_polygon_simplex(n, d));
    {
        SimplicialComplex k = family_polygon_simplex(6, 4);
        for (int step = 0; step < 4; ++step) {
            k = stellar_subdivide_ridge(k, k.faces(k.dim() - 1).front());
            corpus.emplace_back("subdivided polyjoin x" + std::to_string(step + 1), k);
        }
        SimplicialComplex t = family_two_simplices(2, 2);
        t = stellar_subdivide_ridge(t, t.faces(t.dim() - 1).front());
        corpus.emplace_back("subdivided join2(2,2)", t);
    }
    corpus.emplace_back("crosspoly(4)", cross_polytope(4));

    for (const auto& [tag, k] : corpus) {
        int d = k.dim() + 1;
        long long g = g2(k);
        RigidityReport rep = analyze_rigidity(skeleton_graph(k), d, kDefaultTrials, 31);
        c.expect(rep.kernel_dim == g, tag + ": kernel_dim != g2");
        c.expect(rep.participating_vertices == k.vertex_ids(),
                 tag + ": some vertex misses every stress");
        if (g == 1)
            c.expect(rep.participating_edges == skeleton_graph(k).edges,
                     tag + ": some edge misses the stress");
    }
}

void criterion_surgery_ledgers(Checker& c) {
    for (const auto& [tag, base] :
         std::vector<std::pair<std::string, SimplicialComplex>>{
             {"polyjoin(5,4)", family_polygon_simplex(5, 4)},
             {"polyjoin(7,4)", family_polygon_simplex(7, 4)},
             {"join2(2,2)", family_two_simplices(2, 2)},
             {"polyjoin(6,5)", family_polygon_simplex(6, 5)}}) {
        SimplicialComplex k = base;
        long long f0 = f_vector(base).f(0);
        for (int step = 1; step <= 4; ++step) {
            k = stellar_subdivide_ridge(k, k.faces(k.dim() - 1).front());
            std::string t = tag + " subdivision " + std::to_string(step);
            c.expect(g2(k) == 1 + step, t + ": g2 wrong");
            c.expect(f_vector(k).f(0) == f0 + step, t + ": f0 wrong");
            c.expect(is_prime(k), t + ": not prime");
        }
    }

    {
        SimplicialComplex octa = cross_polytope(3);
        ContractionResult res = edge_contract(octa, 0, 2);
        c.expect(res.link_condition_held, "octahedron: link condition should hold");
        c.expect(f_vector(res.complex).f(0) == 5, "octahedron contraction: f0 != 5");
        c.expect(g2(res.complex) == 0, "octahedron contraction: g2 != 0");
        SimplicialComplex bipyramid = join(boundary_simplex(1), polygon(3), true);
        c.expect(is_isomorphic(res.complex, bipyramid).has_value(),
                 "octahedron contraction: not the triangle bipyramid");
    }

    std::vector<std::tuple<std::string, SimplicialComplex, Vertex, Vertex>> cases;
    for (int n = 5; n <= 9; ++n)
        cases.emplace_back("polyjoin(" + std::to_string(n) + ",4) edge {0,1}",
                           family_polygon_simplex(n, 4), 0, 1);
    for (int n = 5; n <= 6; ++n)
        cases.emplace_back("polyjoin(" + std::to_string(n) + ",5) edge {0,1}",
                           family_polygon_simplex(n, 5), 0, 1);
    cases.emplace_back("crosspoly(3) {0,2}", cross_polytope(3), 0, 2);
    cases.emplace_back("crosspoly(3) {0,4}", cross_polytope(3), 0, 4);
    cases.emplace_back("crosspoly(3) {2,4}", cross_polytope(3), 2, 4);
    cases.emplace_back("crosspoly(4) {0,2}", cross_polytope(4), 0, 2);
    cases.emplace_back("crosspoly(4) {4,6}", cross_polytope(4), 4, 6);
    cases.emplace_back("crosspoly(5) {0,2}", cross_polytope(5), 0, 2);
    for (int n = 4; n <= 8; ++n)
        cases.emplace_back("C" + std::to_string(n) + " edge {0,1}", polygon(n), 0, 1);
    cases.emplace_back("join2(2,2) cross edge {0,3}", family_two_simplices(2, 2), 0, 3);
    cases.emplace_back("join2(2,3) cross edge {0,3}", family_two_simplices(2, 3), 0, 3);

    c.expect(cases.size() == 20, "expected exactly 20 contraction cases");
    for (const auto& [tag, k, u, v] : cases) {
        c.expect(link_condition(k, u, v), tag + ": link condition fails");
        ContractionResult res = edge_contract(k, u, v);
        c.expect(res.delta_f0 == -1, tag + ": delta_f0 wrong");
        long long deg_u = static_cast<long long>(link(k, Face{u}).vertex_count());
        c.expect(res.delta_f1 ==
                     -(deg_u - static_cast<long long>(res.independent_set.size())),
                 tag + ": delta_f1 formula broken");
        c.expect(res.delta_g2 == -(res.common_link_vertices + 1) + (k.dim() + 1),
                 tag + ": delta_g2 formula broken");
        c.expect(is_homology_sphere(res.complex), tag + ": contraction left the sphere class");
    }
}

void criterion_homology_anchors(Checker& c) {
    for (int d = 1; d <= 7; ++d)
        c.expect(homology(boundary_simplex(d)).is_sphere_profile(d - 1),
                 "boundary_simplex(" + std::to_string(d) + "): wrong homology");

    SimplicialComplex rp2 = SimplicialComplex::from_facets({
        Face{1, 2, 3}, Face{1, 3, 4}, Face{1, 4, 5}, Face{1, 5, 6}, Face{1, 2, 6},
        Face{2, 3, 5}, Face{2, 4, 5}, Face{2, 4, 6}, Face{3, 4, 6}, Face{3, 5, 6}});
    HomologyProfile p = homology(rp2);
    c.expect(p.betti_at(0) == 0 && p.betti_at(1) == 0 && p.betti_at(2) == 0,
             "projective plane: betti numbers wrong");
    c.expect(p.torsion_at(1) == std::vector<long long>{2},
             "projective plane: torsion is not Z/2");

    std::vector<std::pair<std::string, SimplicialComplex>> corpus = {
        {"crosspoly(3)", cross_polytope(3)},
        {"boundary_simplex(4)", boundary_simplex(4)},
        {"polyjoin(5,4)", family_polygon_simplex(5, 4)},
        {"projective plane", rp2},
        {"C6", polygon(6)},
        {"stacked(4,5)", stacked_sphere(4, 5, 5).first},
    };
    for (const auto& [tag, k] : corpus) {
        for (int i = 0; i <= k.dim(); ++i) {
            SmithResult s = smith_normal_form(boundary_matrix(k, i));
            for (std::size_t j = 1; j < s.invariant_factors.size(); ++j)
                c.expect(s.invariant_factors[j] % s.invariant_factors[j - 1] == 0,
                         tag + ": invariant factors not a divisibility chain");
            if (i == 0) continue;
            IntegerMatrix lo = boundary_matrix(k, i - 1);
            IntegerMatrix hi = boundary_matrix(k, i);
            bool zero = true;
            for (long long r = 0; r < lo.rows && zero; ++r)
                for (long long col = 0; col < hi.cols; ++col) {
                    mpz_class acc = 0;
                    for (long long m = 0; m < lo.cols; ++m)
                        acc += lo.at(r, m) * hi.at(m, col);
                    if (acc != 0) {
                        zero = false;
                        break;
                    }
                }
            c.expect(zero, tag + ": boundary-of-boundary is not zero at degree " +
                               std::to_string(i));
        }
    }
}

void criterion_decomposition(Checker& c) {
    for (int i = 0; i < 30; ++i) {
        std::mt19937_64 rng(12000 + static_cast<std::uint64_t>(i));
        int d = 4 + static_cast<int>(pick(rng, 3));
        std::vector<SimplicialComplex> pool;
        pool.push_back(boundary_simplex(d));
        pool.push_back(family_two_simplices(2, d - 2));
        if (d - 3 >= 2) pool.push_back(family_two_simplices(3, d - 3));
        pool.push_back(family_polygon_simplex(4 + static_cast<int>(pick(rng, 4)), d));

        int part_count = 2 + static_cast<int>(pick(rng, 4)); // 2..5
        std::vector<SimplicialComplex> parts;
        for (int j = 0; j < part_count; ++j) parts.push_back(pool[pick(rng, pool.size())]);

        SimplicialComplex k = parts[0];
        long long g2_sum = g2(parts[0]);
        for (int j = 1; j < part_count; ++j) {
            Face fk = random_facet(rng, k);
            Face fl = random_facet(rng, parts[static_cast<std::size_t>(j)]);
            k = connected_sum(k, parts[static_cast<std::size_t>(j)], fk, fl,
                              random_bijection(rng, fl, fk));
            g2_sum += g2(parts[static_cast<std::size_t>(j)]);
        }

        std::string tag = "sum " + std::to_string(i);
        PrimeDecomposition dec = prime_decomposition(k);
        long long g2_components = 0;
        for (const SimplicialComplex& comp : dec.components) g2_components += g2(comp);
        c.expect(g2_components == g2(k) && g2_components == g2_sum, tag + ": g2 not additive");

        c.expect(dec.components.size() == parts.size(), tag + ": component count wrong");
        std::vector<bool> used(parts.size(), false);
        for (const SimplicialComplex& comp : dec.components) {
            bool matched = false;
            for (std::size_t j = 0; j < parts.size(); ++j) {
                if (used[j]) continue;
                if (is_isomorphic(comp, parts[j])) {
                    used[j] = true;
                    matched = true;
                    break;
                }
            }
            c.expect(matched, tag + ": component without isomorphic input part");
        }

        // Identity-labeled soundness: component facets minus the shared
        // facets (each a facet of exactly two components) give back K.
        std::multiset<Face> facets;
        for (const SimplicialComplex& comp : dec.components)
            for (const Face& f : comp.facets()) facets.insert(f);
        bool shared_ok = true;
        for (const GluingEdge& e : dec.gluing_tree)
            for (int copies = 0; copies < 2; ++copies) {
                auto it = facets.find(e.shared);
                if (it == facets.end()) {
                    shared_ok = false;
                    break;
                }
                facets.erase(it);
            }
        c.expect(shared_ok, tag + ": a shared facet is missing from its components");
        std::vector<Face> flat(facets.begin(), facets.end());
        c.expect(flat == k.facets(), tag + ": reassembled facet set differs");
    }
}

} // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& out) {
    struct Spec {
        int id;
        std::string name;
        double budget_seconds; // 0 = no stated budget
        std::function<void(Checker&)> body;
    };
    const std::vector<Spec> specs = {
        {1, "polygon-simplex joins have g2 = 1 and are prime (d 4..7, n 3..12)", 1.0,
         criterion_polygon_family},
        {2, "stackedness <=> g2 = 0 on 100 seeded stacked spheres + non-stacked joins", 0.0,
         criterion_stacked_iff_g2_zero},
        {3, "classification round-trips both prime families", 10.0, criterion_family_round_trip},
        {4, "stacked-over-base recovery on 50 seeded instances", 0.0,
         criterion_stacked_over_base},
        {5, "rank anchors, octahedron rigidity, kernel_dim = g2 across the corpus", 30.0,
         criterion_rigidity_anchors},
        {6, "coning preserves kernel dimension on 50 seeded graphs", 0.0, criterion_cone_lemma},
        {7, "every vertex (and edge, at g2 = 1) of a prime sphere carries stress", 0.0,
         criterion_prime_stress},
        {8, "surgery ledgers: ridge subdivision and edge contraction", 0.0,
         criterion_surgery_ledgers},
        {9, "homology anchors: simplex boundaries, projective plane, SNF checks", 5.0,
         criterion_homology_anchors},
        {10, "prime decomposition recovers 30 seeded connected sums", 0.0,
         criterion_decomposition},
    };

    std::vector<CriterionResult> results;
    for (const Spec& spec : specs) {
        CriterionResult r;
        r.id = spec.id;
        r.name = spec.name;
        Checker checker;
        auto start = std::chrono::steady_clock::now();
        try {
            spec.body(checker);
        } catch (const std::exception& e) {
            checker.expect(false, std::string("exception: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (checker.ok && spec.budget_seconds > 0 && r.seconds > spec.budget_seconds)
            checker.expect(false, "exceeded " + std::to_string(spec.budget_seconds) +
                                      "s time budget");
        r.passed = checker.ok;
        r.detail = checker.ok ? std::to_string(checker.checks) + " checks" : checker.first_failure;
        results.push_back(r);

        std::ostringstream line;
        line << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.name
             << "  [" << std::fixed << std::setprecision(2) << r.seconds << "s, " << r.detail
             << "]";
        out << line.str() << "\n";
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.passed; });
}

} // namespace g2lab
