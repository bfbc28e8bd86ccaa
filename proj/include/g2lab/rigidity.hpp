#ifndef G2LAB_RIGIDITY_HPP
#define G2LAB_RIGIDITY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "g2lab/gf61.hpp"
#include "g2lab/graph.hpp"

namespace g2lab {

/// A point configuration f : V → GF(p)^d standing in for a generic real
/// embedding. Rigidity-matrix minors are low-degree polynomials in the
/// coordinates, so a random field point attains the generic rank except with
/// probability ≤ deg/p per trial (Schwartz–Zippel).
struct Embedding {
    int dim = 0;
    std::vector<Vertex> vertices;      // sorted, mirrors the graph
    std::vector<std::uint64_t> coords; // n*dim, row per vertex

    std::uint64_t coord(std::size_t vertex_index, int axis) const {
        return coords[vertex_index * static_cast<std::size_t>(dim) +
                      static_cast<std::size_t>(axis)];
    }
};

Embedding random_embedding(const Graph& g, int d, std::uint64_t seed);

/// The dn × |E| matrix: the column of edge {v<u} carries f(v)−f(u) in v's
/// rows and f(u)−f(v) in u's rows. Columns follow the sorted edge order.
struct RigidityMatrix {
    long long rows = 0;
    long long cols = 0;
    std::vector<std::uint64_t> a; // row-major, entries in GF(p)

    std::uint64_t at(long long r, long long c) const {
        return a[static_cast<std::size_t>(r * cols + c)];
    }
};

RigidityMatrix rigidity_matrix(const Graph& g, const Embedding& f);

/// Edge-indexed kernel element of the rigidity matrix.
struct StressVector {
    std::vector<std::uint64_t> weights; // parallel to g.edges
};

/// Exact vertex-equilibrium check: Σ w({v,u})·(f(v)−f(u)) = 0 for every v.
bool stress_in_equilibrium(const Graph& g, const Embedding& f, const StressVector& w);

/// Generic rank of the complete graph on n vertices in dimension d:
/// C(n,2) for n ≤ d+1, otherwise dn − C(d+1,2).
long long complete_graph_rank(long long n, int d);

inline constexpr int kDefaultTrials = 3;

struct RigidityReport {
    int dim = 0;
    long long n = 0;
    long long edge_count = 0;
    long long rank = 0;
    long long kernel_dim = 0;
    bool is_rigid = false;
    bool is_stress_free = false;
    std::vector<Vertex> participating_vertices;
    std::vector<std::pair<Vertex, Vertex>> participating_edges;
    int trials = kDefaultTrials;
    std::uint64_t seed = 0;
    double per_trial_failure_bound = 0.0; // Schwartz–Zippel: ≤ min(dn,|E|)/p
    std::vector<StressVector> stress_basis; // kernel basis at the best trial
    Embedding embedding;                    // the embedding the basis lives at
};

/// Rank, kernel basis and participation data at seeded random embeddings;
/// the rank is the max over `trials` independent embeddings and the kernel
/// data is taken at the first embedding attaining it.
RigidityReport analyze_rigidity(const Graph& g, int d, int trials = kDefaultTrials,
                                std::uint64_t seed = 0);

long long generic_rank(const Graph& g, int d, int trials = kDefaultTrials,
                       std::uint64_t seed = 0);

/// Sanity-only floating-point route: singular values of the rigidity matrix
/// at a random real embedding, counted above the 1e-8 tolerance. Never
/// authoritative; the exact field rank is the answer.
long long numeric_rank_estimate(const Graph& g, int d, std::uint64_t seed = 0);
bool is_generically_rigid(const Graph& g, int d, int trials = kDefaultTrials,
                          std::uint64_t seed = 0);
bool is_stress_free(const Graph& g, int d, int trials = kDefaultTrials,
                    std::uint64_t seed = 0);
std::vector<StressVector> stress_basis(const Graph& g, int d, std::uint64_t seed = 0);
std::vector<Vertex> participating_vertices(const Graph& g, int d, std::uint64_t seed = 0);
std::vector<std::pair<Vertex, Vertex>> participating_edges(const Graph& g, int d,
                                                           std::uint64_t seed = 0);

} // namespace g2lab

#endif
