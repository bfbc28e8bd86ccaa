#include "g2lab/rigidity.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "g2lab/errors.hpp"

namespace g2lab {

namespace {

using std::uint64_t;
namespace F = gf61;

// Dense elimination over GF(p). Rows are engaged in order; pivot is the first
// nonzero entry in the column, which keeps everything deterministic.
struct ModMatrix {
    long long rows = 0;
    long long cols = 0;
    std::vector<uint64_t> a;

    uint64_t& at(long long r, long long c) { return a[static_cast<std::size_t>(r * cols + c)]; }
    uint64_t at(long long r, long long c) const { return a[static_cast<std::size_t>(r * cols + c)]; }

    // Reduce to row echelon form; returns pivot column per pivot row.
    std::vector<long long> echelon() {
        std::vector<long long> pivot_cols;
        long long r = 0;
        for (long long c = 0; c < cols && r < rows; ++c) {
            long long p = -1;
            for (long long i = r; i < rows; ++i)
                if (at(i, c) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            if (p != r)
                for (long long j = c; j < cols; ++j) std::swap(at(p, j), at(r, j));
            uint64_t inv = F::inv(at(r, c));
            for (long long j = c; j < cols; ++j) at(r, j) = F::mul(at(r, j), inv);
            for (long long i = 0; i < rows; ++i) {
                if (i == r || at(i, c) == 0) continue;
                uint64_t factor = at(i, c);
                for (long long j = c; j < cols; ++j)
                    at(i, j) = F::sub(at(i, j), F::mul(factor, at(r, j)));
            }
            pivot_cols.push_back(c);
            ++r;
        }
        return pivot_cols;
    }
};

ModMatrix to_mod(const RigidityMatrix& m) {
    return ModMatrix{m.rows, m.cols, m.a};
}

} // namespace

Embedding random_embedding(const Graph& g, int d, uint64_t seed) {
    if (d < 1) throw invalid_input("embedding dimension must be >= 1");
    Embedding f;
    f.dim = d;
    f.vertices = g.vertices;
    F::Sampler sampler(seed);
    f.coords.resize(g.n() * static_cast<std::size_t>(d));
    for (auto& c : f.coords) c = sampler.next();
    return f;
}

RigidityMatrix rigidity_matrix(const Graph& g, const Embedding& f) {
    if (f.vertices != g.vertices || f.coords.size() != g.n() * static_cast<std::size_t>(f.dim))
        throw invalid_input("rigidity_matrix: embedding does not match the graph");
    const int d = f.dim;
    RigidityMatrix m;
    m.rows = static_cast<long long>(g.n()) * d;
    m.cols = static_cast<long long>(g.edge_count());
    m.a.assign(static_cast<std::size_t>(m.rows * m.cols), 0);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [v, u] = g.edges[e]; // v < u
        std::size_t vi = g.index_of(v);
        std::size_t ui = g.index_of(u);
        for (int axis = 0; axis < d; ++axis) {
            uint64_t diff = F::sub(f.coord(vi, axis), f.coord(ui, axis));
            m.a[(vi * static_cast<std::size_t>(d) + static_cast<std::size_t>(axis)) *
                    static_cast<std::size_t>(m.cols) + e] = diff;
            m.a[(ui * static_cast<std::size_t>(d) + static_cast<std::size_t>(axis)) *
                    static_cast<std::size_t>(m.cols) + e] = F::neg(diff);
        }
    }
    return m;
}

bool stress_in_equilibrium(const Graph& g, const Embedding& f, const StressVector& w) {
    if (w.weights.size() != g.edges.size()) return false;
    const int d = f.dim;
    std::vector<uint64_t> acc(g.n() * static_cast<std::size_t>(d), 0);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [v, u] = g.edges[e];
        std::size_t vi = g.index_of(v);
        std::size_t ui = g.index_of(u);
        for (int axis = 0; axis < d; ++axis) {
            uint64_t diff = F::sub(f.coord(vi, axis), f.coord(ui, axis));
            std::size_t a = vi * static_cast<std::size_t>(d) + static_cast<std::size_t>(axis);
            std::size_t b = ui * static_cast<std::size_t>(d) + static_cast<std::size_t>(axis);
            acc[a] = F::add(acc[a], F::mul(w.weights[e], diff));
            acc[b] = F::add(acc[b], F::mul(w.weights[e], F::neg(diff)));
        }
    }
    return std::all_of(acc.begin(), acc.end(), [](uint64_t x) { return x == 0; });
}

long long complete_graph_rank(long long n, int d) {
    if (n <= d + 1) return n * (n - 1) / 2;
    return static_cast<long long>(d) * n - static_cast<long long>(d + 1) * d / 2;
}

RigidityReport analyze_rigidity(const Graph& g, int d, int trials, uint64_t seed) {
    if (trials < 1) throw invalid_input("trials must be >= 1");
    RigidityReport rep;
    rep.dim = d;
    rep.n = static_cast<long long>(g.n());
    rep.edge_count = static_cast<long long>(g.edge_count());
    rep.trials = trials;
    rep.seed = seed;
    long long degree_bound = std::min(rep.n * d, rep.edge_count);
    rep.per_trial_failure_bound =
        static_cast<double>(degree_bound) / static_cast<double>(F::MOD);

    long long best_rank = -1;
    int best_trial = 0;
    for (int t = 0; t < trials; ++t) {
        Embedding f = random_embedding(g, d, F::mix_seed(seed, static_cast<uint64_t>(t)));
        ModMatrix m = to_mod(rigidity_matrix(g, f));
        long long rank = static_cast<long long>(m.echelon().size());
        if (rank > best_rank) {
            best_rank = rank;
            best_trial = t;
        }
    }
    rep.rank = std::max(best_rank, 0LL);
    rep.kernel_dim = rep.edge_count - rep.rank;
    rep.is_rigid = rep.rank == complete_graph_rank(rep.n, d);
    rep.is_stress_free = rep.kernel_dim == 0;

    // Kernel basis at the embedding that attained the rank: free columns of
    // the reduced echelon form, in edge order.
    rep.embedding =
        random_embedding(g, d, F::mix_seed(seed, static_cast<uint64_t>(best_trial)));
    ModMatrix m = to_mod(rigidity_matrix(g, rep.embedding));
    std::vector<long long> pivot_cols = m.echelon();
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (long long c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    for (long long free = 0; free < m.cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        StressVector w;
        w.weights.assign(static_cast<std::size_t>(m.cols), 0);
        w.weights[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r)
            w.weights[static_cast<std::size_t>(pivot_cols[r])] =
                F::neg(m.at(static_cast<long long>(r), free));
        rep.stress_basis.push_back(std::move(w));
    }

    std::set<std::pair<Vertex, Vertex>> edge_support;
    std::set<Vertex> vertex_support;
    for (const StressVector& w : rep.stress_basis)
        for (std::size_t e = 0; e < w.weights.size(); ++e)
            if (w.weights[e] != 0) {
                edge_support.insert(g.edges[e]);
                vertex_support.insert(g.edges[e].first);
                vertex_support.insert(g.edges[e].second);
            }
    rep.participating_edges.assign(edge_support.begin(), edge_support.end());
    rep.participating_vertices.assign(vertex_support.begin(), vertex_support.end());
    return rep;
}

long long generic_rank(const Graph& g, int d, int trials, uint64_t seed) {
    if (trials < 1) throw invalid_input("trials must be >= 1");
    long long best = 0;
    for (int t = 0; t < trials; ++t) {
        Embedding f = random_embedding(g, d, F::mix_seed(seed, static_cast<uint64_t>(t)));
        ModMatrix m = to_mod(rigidity_matrix(g, f));
        best = std::max(best, static_cast<long long>(m.echelon().size()));
    }
    return best;
}

long long numeric_rank_estimate(const Graph& g, int d, uint64_t seed) {
    if (d < 1) throw invalid_input("embedding dimension must be >= 1");
    if (g.edge_count() == 0) return 0;
    std::mt19937_64 rng(seed);
    auto coord = [&] { return static_cast<double>(rng() >> 11) / 9007199254740992.0; };
    Eigen::MatrixXd coords(g.n(), d);
    for (Eigen::Index v = 0; v < coords.rows(); ++v)
        for (int axis = 0; axis < d; ++axis) coords(v, axis) = coord();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(
        static_cast<Eigen::Index>(g.n()) * d, static_cast<Eigen::Index>(g.edge_count()));
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [v, u] = g.edges[e];
        auto vi = static_cast<Eigen::Index>(g.index_of(v));
        auto ui = static_cast<Eigen::Index>(g.index_of(u));
        for (int axis = 0; axis < d; ++axis) {
            double diff = coords(vi, axis) - coords(ui, axis);
            m(vi * d + axis, static_cast<Eigen::Index>(e)) = diff;
            m(ui * d + axis, static_cast<Eigen::Index>(e)) = -diff;
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    long long rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > 1e-8) ++rank;
    return rank;
}

bool is_generically_rigid(const Graph& g, int d, int trials, uint64_t seed) {
    return generic_rank(g, d, trials, seed) ==
           complete_graph_rank(static_cast<long long>(g.n()), d);
}

bool is_stress_free(const Graph& g, int d, int trials, uint64_t seed) {
    return generic_rank(g, d, trials, seed) == static_cast<long long>(g.edge_count());
}

std::vector<StressVector> stress_basis(const Graph& g, int d, uint64_t seed) {
    return analyze_rigidity(g, d, kDefaultTrials, seed).stress_basis;
}

std::vector<Vertex> participating_vertices(const Graph& g, int d, uint64_t seed) {
    return analyze_rigidity(g, d, kDefaultTrials, seed).participating_vertices;
}

std::vector<std::pair<Vertex, Vertex>> participating_edges(const Graph& g, int d,
                                                           uint64_t seed) {
    return analyze_rigidity(g, d, kDefaultTrials, seed).participating_edges;
}

} // namespace g2lab
