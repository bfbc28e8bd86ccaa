#include "g2lab/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace g2lab {

namespace {

const std::vector<Face> kNoFaces{};

// All subsets of `facet`, appended to per-cardinality buckets.
void push_closure(const Face& facet, std::vector<std::vector<Face>>& by_card) {
    const auto& vs = facet.verts();
    const std::size_t m = vs.size();
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        std::vector<Vertex> sub;
        for (std::size_t j = 0; j < m; ++j)
            if (mask & (1ULL << j)) sub.push_back(vs[j]);
        std::size_t card = sub.size();
        Face f{std::move(sub)};
        by_card[card].push_back(std::move(f));
    }
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> faces,
                                                 std::optional<std::string> name) {
    if (faces.empty())
        throw invalid_input("a complex needs at least one face (use [[]] for {∅})");

    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

    // Drop dominated faces so only facets remain.
    std::vector<Face> facets;
    for (const Face& f : faces) {
        bool dominated = false;
        for (const Face& g : faces) {
            if (f.size() < g.size() && f.is_subset_of(g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) facets.push_back(f);
    }

    SimplicialComplex k;
    k.name_ = std::move(name);
    k.facets_ = std::move(facets);
    std::size_t max_card = 0;
    for (const Face& f : k.facets_) max_card = std::max(max_card, f.size());
    if (max_card >= 63)
        throw invalid_input("facet too large");
    k.dim_ = static_cast<int>(max_card) - 1;

    k.by_card_.assign(max_card + 1, {});
    for (const Face& f : k.facets_) push_closure(f, k.by_card_);
    for (auto& bucket : k.by_card_) {
        std::sort(bucket.begin(), bucket.end());
        bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
    }
    for (const Face& v : k.by_card_.size() > 1 ? k.by_card_[1] : kNoFaces)
        k.vertices_.push_back(v.verts()[0]);
    return k;
}

const std::vector<Face>& SimplicialComplex::faces(int i) const {
    return faces_of_card(i + 1);
}

const std::vector<Face>& SimplicialComplex::faces_of_card(int card) const {
    if (card < 0 || card >= static_cast<int>(by_card_.size())) return kNoFaces;
    return by_card_[static_cast<std::size_t>(card)];
}

bool SimplicialComplex::contains(const Face& f) const {
    const auto& bucket = faces_of_card(static_cast<int>(f.size()));
    return std::binary_search(bucket.begin(), bucket.end(), f);
}

bool SimplicialComplex::is_pure() const {
    for (const Face& f : facets_)
        if (static_cast<int>(f.size()) != dim_ + 1) return false;
    return true;
}

SimplicialComplex SimplicialComplex::renamed(std::optional<std::string> name) const {
    SimplicialComplex k = *this;
    k.name_ = std::move(name);
    return k;
}

FVector f_vector(const SimplicialComplex& k) {
    FVector fv;
    for (int c = 0; c <= k.dim() + 1; ++c)
        fv.counts.push_back(static_cast<long long>(k.faces_of_card(c).size()));
    return fv;
}

long long g2(const SimplicialComplex& k) {
    if (k.dim() < 1)
        throw invalid_input("g2 needs a complex of dimension >= 1");
    const long long d = k.dim() + 1;
    const long long f0 = static_cast<long long>(k.faces(0).size());
    const long long f1 = static_cast<long long>(k.faces(1).size());
    return f1 - d * f0 + d * (d + 1) / 2;
}

GStats g_stats(const SimplicialComplex& k) {
    GStats s;
    s.d = k.dim() + 1;
    s.g1 = static_cast<long long>(k.faces(0).size()) - (s.d + 1);
    s.g2 = g2(k);
    return s;
}

SimplicialComplex link(const SimplicialComplex& k, const Face& f) {
    if (!k.contains(f))
        throw invalid_input("link: not a face of the complex");
    std::vector<Face> facets;
    for (const Face& g : k.facets())
        if (f.is_subset_of(g)) facets.push_back(g.minus(f));
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex closed_star(const SimplicialComplex& k, const Face& f) {
    if (!k.contains(f))
        throw invalid_input("closed_star: not a face of the complex");
    std::vector<Face> facets;
    for (const Face& g : k.facets())
        if (f.is_subset_of(g)) facets.push_back(g);
    return SimplicialComplex::from_facets(std::move(facets));
}

std::vector<Face> open_star(const SimplicialComplex& k, const Face& f) {
    if (!k.contains(f))
        throw invalid_input("open_star: not a face of the complex");
    std::vector<Face> out;
    for (int c = static_cast<int>(f.size()); c <= k.dim() + 1; ++c)
        for (const Face& g : k.faces_of_card(c))
            if (f.is_subset_of(g)) out.push_back(g);
    return out;
}

SimplicialComplex antistar(const SimplicialComplex& k, const Face& f) {
    std::vector<Face> facets;
    for (const Face& g : k.facets()) facets.push_back(g.minus(f));
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l,
                       bool auto_relabel) {
    const SimplicialComplex* right = &l;
    SimplicialComplex relabeled;
    bool overlap = false;
    for (Vertex v : l.vertex_ids())
        if (std::binary_search(k.vertex_ids().begin(), k.vertex_ids().end(), v)) {
            overlap = true;
            break;
        }
    if (overlap) {
        if (!auto_relabel)
            throw invalid_input("join: vertex sets overlap (pass auto_relabel to shift)");
        VertexMap map;
        Vertex next = lowest_unused_vertex(k);
        for (Vertex v : l.vertex_ids()) map.emplace_back(v, next++);
        relabeled = relabel(l, map);
        right = &relabeled;
    }
    std::vector<Face> facets;
    facets.reserve(k.facets().size() * right->facets().size());
    for (const Face& a : k.facets())
        for (const Face& b : right->facets())
            facets.push_back(a.united(b));
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex cone(const SimplicialComplex& k, Vertex apex) {
    if (apex < 0) throw invalid_input("cone: negative apex id");
    if (std::binary_search(k.vertex_ids().begin(), k.vertex_ids().end(), apex))
        throw invalid_input("cone: apex already a vertex of the complex");
    std::vector<Face> facets;
    for (const Face& g : k.facets()) facets.push_back(g.with_vertex(apex));
    return SimplicialComplex::from_facets(std::move(facets));
}

Graph skeleton_graph(const SimplicialComplex& k) {
    Graph g;
    g.vertices = k.vertex_ids();
    for (const Face& e : k.faces(1))
        g.edges.emplace_back(e.verts()[0], e.verts()[1]);
    return g;
}

std::vector<Face> missing_faces(const SimplicialComplex& k) {
    std::vector<Face> out;
    const auto& vs = k.vertex_ids();

    // Missing edges: non-adjacent vertex pairs.
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            Face e{vs[i], vs[j]};
            if (!k.contains(e)) out.push_back(std::move(e));
        }

    // Size s ≥ 3: extend an (s−1)-face by a vertex above its maximum. Any
    // minimal non-face F decomposes uniquely as (F − max F) + max F, so this
    // visits every candidate once and never leaves the clique closure.
    std::map<Vertex, std::set<Vertex>> adj;
    for (const Face& e : k.faces(1)) {
        adj[e.verts()[0]].insert(e.verts()[1]);
        adj[e.verts()[1]].insert(e.verts()[0]);
    }
    for (int s = 3; s <= k.dim() + 2; ++s) {
        for (const Face& a : k.faces_of_card(s - 1)) {
            const auto& neigh = adj[a.verts().back()];
            for (auto it = neigh.upper_bound(a.verts().back()); it != neigh.end(); ++it) {
                Vertex v = *it;
                bool clique = true;
                for (Vertex u : a.verts())
                    if (u != a.verts().back() && !adj[v].count(u)) {
                        clique = false;
                        break;
                    }
                if (!clique) continue;
                Face f = a.with_vertex(v);
                if (k.contains(f)) continue;
                bool minimal = true;
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (!k.contains(f.without_index(i))) {
                        minimal = false;
                        break;
                    }
                if (minimal) out.push_back(std::move(f));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Face& x, const Face& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
}

bool is_clique_complex(const SimplicialComplex& k) {
    for (const Face& f : missing_faces(k))
        if (f.size() != 2) return false;
    return true;
}

SimplicialComplex relabel(const SimplicialComplex& k, const VertexMap& map) {
    std::map<Vertex, Vertex> m(map.begin(), map.end());
    std::set<Vertex> image;
    for (const auto& [from, to] : m) {
        (void)from;
        if (!image.insert(to).second) throw invalid_input("relabel: map not injective");
    }
    std::vector<Face> facets;
    for (const Face& g : k.facets()) {
        std::vector<Vertex> vs;
        for (Vertex v : g.verts()) {
            auto it = m.find(v);
            if (it == m.end()) throw invalid_input("relabel: map does not cover vertex");
            vs.push_back(it->second);
        }
        facets.emplace_back(std::move(vs));
    }
    return SimplicialComplex::from_facets(std::move(facets), k.name());
}

Vertex lowest_unused_vertex(const SimplicialComplex& k) {
    Vertex next = 0;
    for (Vertex v : k.vertex_ids()) {
        if (v != next) break;
        ++next;
    }
    return next;
}

namespace {

// Per-vertex refinement signature: degree, sizes of incident facets, and the
// number of triangles at the vertex. Enough to cut the search to nothing on
// the complexes this library meets.
struct VertexSignature {
    int degree = 0;
    std::vector<int> facet_sizes;
    int triangles = 0;
    auto operator<=>(const VertexSignature&) const = default;
};

std::map<Vertex, VertexSignature> signatures(const SimplicialComplex& k) {
    std::map<Vertex, VertexSignature> sig;
    for (Vertex v : k.vertex_ids()) sig[v] = {};
    for (const Face& e : k.faces(1)) {
        sig[e.verts()[0]].degree++;
        sig[e.verts()[1]].degree++;
    }
    for (const Face& f : k.facets())
        for (Vertex v : f.verts()) sig[v].facet_sizes.push_back(static_cast<int>(f.size()));
    for (auto& [v, s] : sig) {
        (void)v;
        std::sort(s.facet_sizes.begin(), s.facet_sizes.end());
    }
    for (const Face& t : k.faces(2))
        for (Vertex v : t.verts()) sig[v].triangles++;
    return sig;
}

struct IsoSearch {
    const SimplicialComplex& k;
    const SimplicialComplex& l;
    std::vector<Vertex> k_verts;
    std::map<Vertex, VertexSignature> k_sig, l_sig;
    std::map<Vertex, std::set<Vertex>> k_adj, l_adj;
    std::map<Vertex, Vertex> assign;
    std::set<Vertex> used;

    bool adjacency_consistent(Vertex kv, Vertex lv) const {
        for (const auto& [ku, lu] : assign) {
            bool ka = k_adj.count(ku) && k_adj.at(ku).count(kv);
            bool la = l_adj.count(lu) && l_adj.at(lu).count(lv);
            if (ka != la) return false;
        }
        return true;
    }

    bool facets_match() const {
        std::vector<Face> mapped;
        for (const Face& f : k.facets()) {
            std::vector<Vertex> vs;
            for (Vertex v : f.verts()) vs.push_back(assign.at(v));
            mapped.emplace_back(std::move(vs));
        }
        std::sort(mapped.begin(), mapped.end());
        return mapped == l.facets();
    }

    bool extend(std::size_t pos) {
        if (pos == k_verts.size()) return facets_match();
        Vertex kv = k_verts[pos];
        for (Vertex lv : l.vertex_ids()) {
            if (used.count(lv)) continue;
            if (l_sig.at(lv) != k_sig.at(kv)) continue;
            if (!adjacency_consistent(kv, lv)) continue;
            assign[kv] = lv;
            used.insert(lv);
            if (extend(pos + 1)) return true;
            assign.erase(kv);
            used.erase(lv);
        }
        return false;
    }
};

} // namespace

std::optional<VertexMap> is_isomorphic(const SimplicialComplex& k, const SimplicialComplex& l) {
    if (k.dim() != l.dim()) return std::nullopt;
    if (f_vector(k) != f_vector(l)) return std::nullopt;

    IsoSearch s{k, l, k.vertex_ids(), signatures(k), signatures(l), {}, {}, {}, {}};

    // Signature multisets must agree.
    {
        std::vector<VertexSignature> a, b;
        for (const auto& [v, sig] : s.k_sig) { (void)v; a.push_back(sig); }
        for (const auto& [v, sig] : s.l_sig) { (void)v; b.push_back(sig); }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }

    for (const Face& e : k.faces(1)) {
        s.k_adj[e.verts()[0]].insert(e.verts()[1]);
        s.k_adj[e.verts()[1]].insert(e.verts()[0]);
    }
    for (const Face& e : l.faces(1)) {
        s.l_adj[e.verts()[0]].insert(e.verts()[1]);
        s.l_adj[e.verts()[1]].insert(e.verts()[0]);
    }

    if (!s.extend(0)) return std::nullopt;
    VertexMap out(s.assign.begin(), s.assign.end());
    return out;
}

} // namespace g2lab
