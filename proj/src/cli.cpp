#include "g2lab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "g2lab/classify.hpp"
#include "g2lab/constructions.hpp"
#include "g2lab/errors.hpp"
#include "g2lab/homology.hpp"
#include "g2lab/json_io.hpp"
#include "g2lab/rigidity.hpp"
#include "g2lab/selftest.hpp"

namespace g2lab {

namespace {

using nlohmann::json;

SimplicialComplex load_complex(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return read_complex(in);
    std::ifstream file(path);
    if (!file) throw invalid_input("cannot open file: " + path);
    return read_complex(file);
}

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t value) {
    if (opt->count() > 0) return value;
    if (const char* env = std::getenv("G2LAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw invalid_input("G2LAB_SEED is not an unsigned integer");
        }
    }
    return 0;
}

json faces_json(const std::vector<Face>& faces) {
    json a = json::array();
    for (const Face& f : faces) a.push_back(f.verts());
    return a;
}

json edges_json(const std::vector<std::pair<Vertex, Vertex>>& edges) {
    json a = json::array();
    for (auto [u, v] : edges) a.push_back(json::array({u, v}));
    return a;
}

std::string fvector_str(const FVector& fv) {
    std::string s = "(";
    for (std::size_t i = 0; i < fv.counts.size(); ++i)
        s += (i ? ", " : "") + std::to_string(fv.counts[i]);
    return s + ")";
}

void emit_complex(std::ostream& out, const SimplicialComplex& k) {
    out << canonical_json(k) << "\n";
}

Face face_from_csv(const std::vector<int>& ids) {
    std::vector<Vertex> vs;
    for (int v : ids) vs.push_back(v);
    return Face{std::move(vs)};
}

void cmd_info(const SimplicialComplex& k, bool as_json, std::ostream& out) {
    FVector fv = f_vector(k);
    std::vector<Face> missing = missing_faces(k);
    if (as_json) {
        json j;
        if (k.name()) j["name"] = *k.name();
        j["dim"] = k.dim();
        j["f_vector"] = fv.counts;
        j["pure"] = k.is_pure();
        if (k.dim() >= 1) {
            GStats s = g_stats(k);
            j["d"] = s.d;
            j["g1"] = s.g1;
            j["g2"] = s.g2;
        }
        j["missing_faces"] = faces_json(missing);
        j["clique_complex"] = std::all_of(missing.begin(), missing.end(),
                                          [](const Face& f) { return f.size() == 2; });
        out << j.dump() << "\n";
        return;
    }
    if (k.name()) out << "name:           " << *k.name() << "\n";
    out << "dim:            " << k.dim() << "\n";
    out << "f-vector:       " << fvector_str(fv) << "\n";
    out << "pure:           " << (k.is_pure() ? "yes" : "no") << "\n";
    if (k.dim() >= 1) {
        GStats s = g_stats(k);
        out << "d:              " << s.d << "\n";
        out << "g1:             " << s.g1 << "\n";
        out << "g2:             " << s.g2 << "\n";
    }
    out << "missing faces:  " << missing.size();
    if (!missing.empty()) {
        out << " (sizes:";
        for (const Face& f : missing) out << " " << f.size();
        out << ")";
    }
    out << "\n";
}

void cmd_homology(const SimplicialComplex& k, bool as_json, bool check_sphere, bool check_ball,
                  std::ostream& out) {
    HomologyProfile p = homology(k);
    if (as_json) {
        json j;
        j["dim"] = p.dim;
        j["betti"] = p.betti;
        j["torsion"] = p.torsion;
        if (check_sphere) j["homology_sphere"] = is_homology_sphere(k);
        if (check_ball) {
            HomologyBallResult b = is_homology_ball(k);
            j["homology_ball"] = b.is_ball;
            if (b.is_ball) j["boundary"] = complex_to_json(*b.boundary);
        }
        out << j.dump() << "\n";
        return;
    }
    for (int deg = -1; deg <= p.dim; ++deg) {
        out << "H~" << deg << " = ";
        long long b = p.betti_at(deg);
        const auto& tor = p.torsion_at(deg);
        if (b == 0 && tor.empty()) {
            out << "0\n";
            continue;
        }
        bool first = true;
        if (b > 0) {
            out << "Z";
            if (b > 1) out << "^" << b;
            first = false;
        }
        for (long long t : tor) {
            out << (first ? "" : " + ") << "Z/" << t;
            first = false;
        }
        out << "\n";
    }
    if (check_sphere)
        out << "homology sphere: " << (is_homology_sphere(k) ? "yes" : "no") << "\n";
    if (check_ball) {
        HomologyBallResult b = is_homology_ball(k);
        out << "homology ball:   " << (b.is_ball ? "yes" : "no") << "\n";
        if (b.is_ball) out << "boundary:        " << canonical_json(*b.boundary) << "\n";
    }
}

void cmd_rigidity(const SimplicialComplex& k, int dim, int trials, std::uint64_t seed,
                  const std::vector<int>& drop_edge, bool float_check, bool as_json,
                  std::ostream& out) {
    Graph g = skeleton_graph(k);
    if (!drop_edge.empty()) {
        if (drop_edge.size() != 2) throw invalid_input("--drop-edge needs u,v");
        g = without_edge(g, drop_edge[0], drop_edge[1]);
    }
    RigidityReport rep = analyze_rigidity(g, dim, trials, seed);
    if (as_json) {
        json j;
        j["dim"] = rep.dim;
        j["n"] = rep.n;
        j["edges"] = rep.edge_count;
        j["rank"] = rep.rank;
        j["kernel_dim"] = rep.kernel_dim;
        j["is_rigid"] = rep.is_rigid;
        j["is_stress_free"] = rep.is_stress_free;
        j["participating_vertices"] = rep.participating_vertices;
        j["participating_edges"] = edges_json(rep.participating_edges);
        j["trials"] = rep.trials;
        j["seed"] = rep.seed;
        j["per_trial_failure_bound"] = rep.per_trial_failure_bound;
        if (float_check) j["numeric_rank_estimate"] = numeric_rank_estimate(g, dim, seed);
        out << j.dump() << "\n";
        return;
    }
    out << "dim:                 " << rep.dim << "\n";
    out << "vertices / edges:    " << rep.n << " / " << rep.edge_count << "\n";
    out << "rank:                " << rep.rank << "\n";
    out << "kernel dim:          " << rep.kernel_dim << "\n";
    out << "generically rigid:   " << (rep.is_rigid ? "yes" : "no") << "\n";
    out << "stress free:         " << (rep.is_stress_free ? "yes" : "no") << "\n";
    out << "participating:       " << rep.participating_vertices.size() << " vertices, "
        << rep.participating_edges.size() << " edges\n";
    out << "trials / seed:       " << rep.trials << " / " << rep.seed << "\n";
    out << "failure bound/trial: " << rep.per_trial_failure_bound << "\n";
    if (float_check)
        out << "numeric rank (SVD):  " << numeric_rank_estimate(g, dim, seed)
            << "  (sanity only, not authoritative)\n";
}

json classification_json(const Classification& c) {
    json j;
    j["verdict"] = to_string(c);
    j["g2"] = c.g2;
    j["d"] = c.d;
    if (c.form) {
        json f;
        f["family"] = c.form->family == Family::TwoSimplices ? "two_simplices" : "polygon_simplex";
        if (c.form->family == Family::TwoSimplices) {
            f["a"] = c.form->a;
            f["b"] = c.form->b;
        } else {
            f["n"] = c.form->n;
        }
        f["d"] = c.form->d;
        j["base"] = f;
    }
    if (c.kind == VerdictKind::StackedOverBase) j["stacks"] = c.stack_count;
    if (c.stacking) j["stacking_steps"] = c.stacking->steps.size();
    if (c.decomposition) j["components"] = c.decomposition->components.size();
    return j;
}

void cmd_decompose(const SimplicialComplex& k, bool as_json, std::ostream& out) {
    PrimeDecomposition dec = prime_decomposition(k);
    if (as_json) {
        json j;
        json comps = json::array();
        for (const SimplicialComplex& comp : dec.components) {
            json e = complex_to_json(comp);
            e["g2"] = g2(comp);
            e["simplex"] = is_boundary_simplex(comp);
            comps.push_back(e);
        }
        j["components"] = comps;
        json tree = json::array();
        for (const GluingEdge& e : dec.gluing_tree)
            tree.push_back({{"a", e.a}, {"b", e.b}, {"shared", e.shared.verts()}});
        j["gluing_tree"] = tree;
        j["simplex_count"] = dec.simplex_count;
        out << j.dump() << "\n";
        return;
    }
    out << "components: " << dec.components.size() << " (" << dec.simplex_count
        << " simplex boundaries)\n";
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
        const SimplicialComplex& comp = dec.components[i];
        out << "  [" << i << "] f-vector " << fvector_str(f_vector(comp)) << ", g2 " << g2(comp)
            << (is_boundary_simplex(comp) ? ", simplex boundary" : ", prime") << "\n";
    }
    for (const GluingEdge& e : dec.gluing_tree) {
        out << "  glue [" << e.a << "] - [" << e.b << "] along";
        for (Vertex v : e.shared.verts()) out << " " << v;
        out << "\n";
    }
}

} // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact tools for simplicial complexes: g2, homology, rigidity, classification"};
    app.set_help_flag("-h,--help", "print usage");
    app.require_subcommand(1);

    // shared option state
    std::string path;
    bool as_json = false;
    int dim = 0, trials = kDefaultTrials;
    std::uint64_t seed = 0;
    bool check_sphere = false, check_ball = false;
    std::vector<int> edge_ids, ridge_ids, drop_edge;
    std::string name;

    auto* info = app.add_subcommand("info", "f-vector, g-stats and missing faces");
    info->add_option("file", path, "complex JSON (default: stdin)");
    info->add_flag("--json", as_json, "machine output");

    auto* hom = app.add_subcommand("homology", "reduced integer homology profile");
    hom->add_option("file", path);
    hom->add_flag("--json", as_json);
    hom->add_flag("--sphere", check_sphere, "also run the homology-sphere check");
    hom->add_flag("--ball", check_ball, "also run the homology-ball check");

    auto* rig = app.add_subcommand("rigidity", "generic rigidity of the 1-skeleton");
    rig->add_option("file", path);
    rig->add_flag("--json", as_json);
    bool float_check = false;
    auto* rig_dim = rig->add_option("--dim", dim, "embedding dimension (default: dim K + 1)");
    rig->add_option("--trials", trials, "random embeddings to try")->check(CLI::PositiveNumber);
    auto* rig_seed = rig->add_option("--seed", seed);
    rig->add_option("--drop-edge", drop_edge, "experiment: remove one edge u,v first")
        ->delimiter(',')
        ->expected(1, 2);
    rig->add_flag("--float-check", float_check,
                  "also print a floating-point SVD rank estimate (sanity only)");

    auto* cls = app.add_subcommand("classify", "the g2 <= 1 classification pipeline");
    cls->add_option("file", path);
    cls->add_flag("--json", as_json);
    cls->add_flag("--check-sphere", check_sphere, "verify the homology-sphere property first");

    auto* gen = app.add_subcommand("gen", "emit a generated complex as canonical JSON");
    gen->require_subcommand(1);
    int gen_dim = 4, gen_stacks = 0, gen_a = 2, gen_b = 2, gen_n = 5, gen_d = 4, gen_m = 3;
    auto* gen_stacked = gen->add_subcommand("stacked", "seeded stacked sphere");
    gen_stacked->add_option("--dim", gen_dim, "facet size d (sphere dim d-1)")->required();
    gen_stacked->add_option("--stacks", gen_stacks, "number of stackings")->required();
    auto* gen_seed = gen_stacked->add_option("--seed", seed);
    auto* gen_join2 = gen->add_subcommand("join2", "join of two simplex boundaries");
    gen_join2->add_option("--a", gen_a)->required();
    gen_join2->add_option("--b", gen_b)->required();
    auto* gen_poly = gen->add_subcommand("polyjoin", "polygon joined with a simplex boundary");
    gen_poly->add_option("--n", gen_n)->required();
    gen_poly->add_option("--d", gen_d)->required();
    auto* gen_cross = gen->add_subcommand("crosspoly", "cross-polytope boundary");
    gen_cross->add_option("--m", gen_m)->required();
    for (auto* sub : {gen_stacked, gen_join2, gen_poly, gen_cross})
        sub->add_option("--name", name, "name field for the emitted complex");

    bool quiet = false;
    auto* con = app.add_subcommand("contract", "contract an edge (first id is removed)");
    con->add_option("file", path);
    con->add_flag("--json", as_json);
    con->add_flag("--quiet", quiet, "suppress the stderr ledger line");
    con->add_option("--edge", edge_ids, "edge u,v")->delimiter(',')->required()->expected(1, 2);

    auto* sub = app.add_subcommand("subdivide", "stellar subdivision at a ridge");
    sub->add_option("file", path);
    sub->add_option("--ridge", ridge_ids, "ridge vertices a,b,...")
        ->delimiter(',')
        ->required()
        ->expected(1, 64);

    auto* sum = app.add_subcommand("sum", "connected sum of two complexes");
    std::string path_b;
    std::vector<int> facet_a_ids, facet_b_ids;
    sum->add_option("fileA", path, "first complex")->required();
    sum->add_option("fileB", path_b, "second complex")->required();
    sum->add_option("--facet-a", facet_a_ids, "gluing facet of A (default: first facet)")
        ->delimiter(',')
        ->expected(1, 64);
    sum->add_option("--facet-b", facet_b_ids, "gluing facet of B (default: first facet)")
        ->delimiter(',')
        ->expected(1, 64);

    auto* dec = app.add_subcommand("decompose", "connected-sum prime decomposition");
    dec->add_option("file", path);
    dec->add_flag("--json", as_json);

    auto* self = app.add_subcommand("selftest", "run the acceptance suite");
    self->add_flag("--json", as_json);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (*info) {
            cmd_info(load_complex(path, in), as_json, out);
        } else if (*hom) {
            cmd_homology(load_complex(path, in), as_json, check_sphere, check_ball, out);
        } else if (*rig) {
            SimplicialComplex k = load_complex(path, in);
            int d = rig_dim->count() ? dim : k.dim() + 1;
            if (d < 1) throw invalid_input("rigidity: --dim must be >= 1");
            cmd_rigidity(k, d, trials, resolve_seed(rig_seed, seed), drop_edge, float_check,
                         as_json, out);
        } else if (*cls) {
            Classification v = classify(load_complex(path, in), check_sphere);
            if (as_json)
                out << classification_json(v).dump() << "\n";
            else
                out << to_string(v) << "\n";
        } else if (*gen) {
            SimplicialComplex k = [&] {
                if (*gen_stacked)
                    return stacked_sphere(gen_dim, gen_stacks, resolve_seed(gen_seed, seed)).first;
                if (*gen_join2) return family_two_simplices(gen_a, gen_b);
                if (*gen_poly) return family_polygon_simplex(gen_n, gen_d);
                return cross_polytope(gen_m);
            }();
            if (!name.empty()) k = k.renamed(name);
            emit_complex(out, k);
        } else if (*con) {
            if (edge_ids.size() != 2) throw invalid_input("--edge needs exactly u,v");
            SimplicialComplex k = load_complex(path, in);
            ContractionResult res = edge_contract(k, edge_ids[0], edge_ids[1]);
            if (as_json) {
                json j;
                j["complex"] = complex_to_json(res.complex);
                j["removed"] = res.removed_vertex;
                j["kept"] = res.kept_vertex;
                j["link_condition"] = res.link_condition_held;
                j["sphere_guarantee"] = res.link_condition_held;
                j["delta_f0"] = res.delta_f0;
                j["delta_f1"] = res.delta_f1;
                j["delta_g2"] = res.delta_g2;
                j["common_link_vertices"] = res.common_link_vertices;
                j["independent_set"] = res.independent_set;
                out << j.dump() << "\n";
            } else {
                if (!quiet)
                    err << "link condition: " << (res.link_condition_held ? "holds" : "fails")
                        << (res.link_condition_held ? "" : " (no sphere guarantee)")
                        << "; delta f0/f1/g2: " << res.delta_f0 << "/" << res.delta_f1 << "/"
                        << res.delta_g2 << "\n";
                emit_complex(out, res.complex);
            }
        } else if (*sub) {
            SimplicialComplex k = load_complex(path, in);
            emit_complex(out, stellar_subdivide_ridge(k, face_from_csv(ridge_ids)));
        } else if (*sum) {
            std::istringstream empty;
            SimplicialComplex a = load_complex(path, in);
            SimplicialComplex b = load_complex(path_b, empty);
            Face fa = facet_a_ids.empty() ? a.facets().front() : face_from_csv(facet_a_ids);
            Face fb = facet_b_ids.empty() ? b.facets().front() : face_from_csv(facet_b_ids);
            if (fa.size() != fb.size())
                throw invalid_input("sum: facets have different sizes");
            VertexMap bij;
            for (std::size_t i = 0; i < fb.size(); ++i)
                bij.emplace_back(fb.verts()[i], fa.verts()[i]);
            emit_complex(out, connected_sum(a, b, fa, fb, bij));
        } else if (*dec) {
            cmd_decompose(load_complex(path, in), as_json, out);
        } else if (*self) {
            std::vector<CriterionResult> results = run_acceptance(out);
            bool ok = all_passed(results);
            if (as_json) {
                json j = json::array();
                for (const CriterionResult& r : results)
                    j.push_back({{"id", r.id},
                                 {"name", r.name},
                                 {"passed", r.passed},
                                 {"detail", r.detail},
                                 {"seconds", r.seconds}});
                out << j.dump() << "\n";
            }
            return ok ? 0 : 1;
        }
        return 0;
    } catch (const invalid_input& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const theorem_violation& e) {
        err << "theorem violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace g2lab
