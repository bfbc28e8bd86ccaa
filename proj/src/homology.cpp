#include "g2lab/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>

#include "g2lab/errors.hpp"

namespace g2lab {

IntegerMatrix boundary_matrix(const SimplicialComplex& k, int i) {
    if (i < 0 || i > k.dim())
        throw invalid_input("boundary_matrix: degree out of range");
    const auto& domain = k.faces(i);
    if (i == 0) {
        IntegerMatrix m(1, static_cast<long long>(domain.size()));
        for (long long c = 0; c < m.cols; ++c) m.at(0, c) = 1;
        return m;
    }
    const auto& codomain = k.faces(i - 1);
    IntegerMatrix m(static_cast<long long>(codomain.size()),
                    static_cast<long long>(domain.size()));
    for (std::size_t c = 0; c < domain.size(); ++c) {
        const Face& f = domain[c];
        for (std::size_t j = 0; j < f.size(); ++j) {
            Face sub = f.without_index(j);
            auto it = std::lower_bound(codomain.begin(), codomain.end(), sub);
            long long r = it - codomain.begin();
            m.at(r, static_cast<long long>(c)) = (j % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

namespace {

void swap_rows(IntegerMatrix& m, long long a, long long b) {
    if (a == b) return;
    for (long long c = 0; c < m.cols; ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntegerMatrix& m, long long a, long long b) {
    if (a == b) return;
    for (long long r = 0; r < m.rows; ++r) std::swap(m.at(r, a), m.at(r, b));
}

} // namespace

SmithResult smith_normal_form(IntegerMatrix m) {
    const long long nmin = std::min(m.rows, m.cols);
    SmithResult out;
    out.diagonal.assign(static_cast<std::size_t>(nmin), mpz_class(0));

    mpz_class q;
    long long t = 0;
    while (t < nmin) {
        // Smallest-magnitude nonzero pivot in the trailing submatrix.
        long long pr = -1, pc = -1;
        for (long long r = t; r < m.rows; ++r)
            for (long long c = t; c < m.cols; ++c) {
                const mpz_class& v = m.at(r, c);
                if (v == 0) continue;
                if (pr < 0 || mpz_cmpabs(v.get_mpz_t(), m.at(pr, pc).get_mpz_t()) < 0) {
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break; // trailing submatrix is zero
        swap_rows(m, t, pr);
        swap_cols(m, t, pc);

        // Floor division leaves |remainder| < |pivot|, so any leftover forces
        // a strictly smaller pivot on the next pass.
        bool clean = true;
        for (long long r = t + 1; r < m.rows; ++r) {
            if (m.at(r, t) == 0) continue;
            mpz_fdiv_q(q.get_mpz_t(), m.at(r, t).get_mpz_t(), m.at(t, t).get_mpz_t());
            for (long long c = t; c < m.cols; ++c) m.at(r, c) -= q * m.at(t, c);
            if (m.at(r, t) != 0) clean = false;
        }
        for (long long c = t + 1; c < m.cols; ++c) {
            if (m.at(t, c) == 0) continue;
            mpz_fdiv_q(q.get_mpz_t(), m.at(t, c).get_mpz_t(), m.at(t, t).get_mpz_t());
            for (long long r = t; r < m.rows; ++r) m.at(r, c) -= q * m.at(r, t);
            if (m.at(t, c) != 0) clean = false;
        }
        if (!clean) continue; // pivot shrank somewhere; re-pick

        // Pivot must divide the rest of the submatrix for the factor chain.
        bool divides_all = true;
        for (long long r = t + 1; r < m.rows && divides_all; ++r)
            for (long long c = t + 1; c < m.cols; ++c)
                if (m.at(r, c) % m.at(t, t) != 0) {
                    for (long long cc = t; cc < m.cols; ++cc) m.at(t, cc) += m.at(r, cc);
                    divides_all = false;
                    break;
                }
        if (!divides_all) continue;

        if (m.at(t, t) < 0) m.at(t, t) = -m.at(t, t);
        out.diagonal[static_cast<std::size_t>(t)] = m.at(t, t);
        ++t;
    }
    for (const mpz_class& d : out.diagonal)
        if (d != 0) {
            out.invariant_factors.push_back(d);
            ++out.rank;
        }
    return out;
}

const std::vector<long long>& HomologyProfile::torsion_at(int k) const {
    static const std::vector<long long> none{};
    int idx = k + 1;
    if (idx < 0 || idx >= static_cast<int>(torsion.size())) return none;
    return torsion[static_cast<std::size_t>(idx)];
}

bool HomologyProfile::is_acyclic() const {
    for (long long b : betti)
        if (b != 0) return false;
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

bool HomologyProfile::is_sphere_profile(int m) const {
    for (int k = -1; k <= dim; ++k) {
        if (betti_at(k) != (k == m ? 1 : 0)) return false;
        if (!torsion_at(k).empty()) return false;
    }
    return m <= dim; // a degree beyond the complex cannot carry the ℤ
}

HomologyProfile homology(const SimplicialComplex& k) {
    HomologyProfile p;
    p.dim = k.dim();
    const int dim = k.dim();

    // rank of ∂ᵢ and the torsion it induces one degree down
    std::vector<long long> rank(static_cast<std::size_t>(dim + 2), 0);
    std::vector<std::vector<long long>> factors(static_cast<std::size_t>(dim + 2));
    for (int i = 0; i <= dim; ++i) {
        SmithResult s = smith_normal_form(boundary_matrix(k, i));
        rank[static_cast<std::size_t>(i)] = s.rank;
        for (const mpz_class& f : s.invariant_factors)
            if (f > 1) {
                if (!f.fits_slong_p())
                    throw std::overflow_error("torsion factor exceeds long long");
                factors[static_cast<std::size_t>(i)].push_back(f.get_si());
            }
    }

    FVector fv = f_vector(k);
    for (int deg = -1; deg <= dim; ++deg) {
        long long chain = deg == -1 ? 1 : fv.f(deg);
        long long r_here = deg == -1 ? 0 : rank[static_cast<std::size_t>(deg)];
        long long r_above = deg + 1 <= dim ? rank[static_cast<std::size_t>(deg + 1)] : 0;
        p.betti.push_back(chain - r_here - r_above);
        p.torsion.push_back(deg + 1 <= dim ? factors[static_cast<std::size_t>(deg + 1)]
                                           : std::vector<long long>{});
    }
    return p;
}

namespace {

// Relabel-canonical serialization of a complex, used as a cache key for link
// profiles. Order-preserving relabeling is not a full isomorphism hash but it
// is collision-safe and catches the heavy repetition links exhibit.
std::string canonical_key(const SimplicialComplex& k) {
    std::map<Vertex, int> index;
    for (Vertex v : k.vertex_ids()) index.emplace(v, static_cast<int>(index.size()));
    std::ostringstream os;
    for (const Face& f : k.facets()) {
        for (Vertex v : f.verts()) os << index[v] << ',';
        os << ';';
    }
    return os.str();
}

} // namespace

bool is_homology_sphere(const SimplicialComplex& k) {
    const int dim = k.dim();
    std::map<std::string, HomologyProfile> cache;
    for (int c = 0; c <= dim + 1; ++c) {
        for (const Face& f : k.faces_of_card(c)) {
            SimplicialComplex lk = link(k, f);
            std::string key = canonical_key(lk);
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, homology(lk)).first;
            if (!it->second.is_sphere_profile(dim - static_cast<int>(f.size())))
                return false;
        }
    }
    return true;
}

HomologyBallResult is_homology_ball(const SimplicialComplex& k) {
    const int dim = k.dim();
    if (!homology(k).is_acyclic()) return {};

    std::vector<Face> boundary_faces;
    std::map<std::string, HomologyProfile> cache;
    for (int c = 0; c <= dim + 1; ++c) {
        for (const Face& f : k.faces_of_card(c)) {
            SimplicialComplex lk = link(k, f);
            std::string key = canonical_key(lk);
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, homology(lk)).first;
            if (it->second.is_acyclic())
                boundary_faces.push_back(f);
            else if (!it->second.is_sphere_profile(dim - static_cast<int>(f.size())))
                return {};
        }
    }

    // The acyclic-link faces must themselves form a homology (dim−1)-sphere.
    SimplicialComplex boundary = SimplicialComplex::from_facets(boundary_faces);
    std::size_t boundary_face_count = 0;
    for (int c = 0; c <= boundary.dim() + 1; ++c)
        boundary_face_count += boundary.faces_of_card(c).size();
    if (boundary_face_count != boundary_faces.size()) return {}; // not downward closed
    if (boundary.dim() != dim - 1) return {};
    if (!is_homology_sphere(boundary)) return {};
    return {true, std::move(boundary)};
}

std::vector<std::vector<Face>> facet_components(const SimplicialComplex& k,
                                                const std::vector<Face>& forbidden_ridges) {
    if (!k.is_pure())
        throw invalid_input("facet_components: complex is not pure");
    const auto& facets = k.facets();
    std::vector<Face> forbidden = forbidden_ridges;
    std::sort(forbidden.begin(), forbidden.end());

    std::vector<std::size_t> parent(facets.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::map<Face, std::vector<std::size_t>> by_ridge;
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t j = 0; j < facets[i].size(); ++j)
            by_ridge[facets[i].without_index(j)].push_back(i);
    for (const auto& [ridge, members] : by_ridge) {
        if (std::binary_search(forbidden.begin(), forbidden.end(), ridge)) continue;
        for (std::size_t i = 1; i < members.size(); ++i)
            parent[find(members[i])] = find(members[0]);
    }

    std::map<std::size_t, std::vector<Face>> groups;
    for (std::size_t i = 0; i < facets.size(); ++i) groups[find(i)].push_back(facets[i]);
    std::vector<std::vector<Face>> out;
    for (auto& [root, group] : groups) {
        (void)root;
        out.push_back(std::move(group));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

} // namespace g2lab
