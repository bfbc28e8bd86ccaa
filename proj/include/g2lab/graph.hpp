#ifndef G2LAB_GRAPH_HPP
#define G2LAB_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "g2lab/errors.hpp"
#include "g2lab/face.hpp"

namespace g2lab {

/// A finite simple graph with explicit (sorted) vertex ids.
struct Graph {
    std::vector<Vertex> vertices;                 // sorted, distinct
    std::vector<std::pair<Vertex, Vertex>> edges; // u < v, lexicographically sorted

    std::size_t n() const { return vertices.size(); }
    std::size_t edge_count() const { return edges.size(); }

    bool has_vertex(Vertex v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }
    bool has_edge(Vertex u, Vertex v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
    }

    /// Index of a vertex in the sorted vertex list.
    std::size_t index_of(Vertex v) const;

    void normalize(); // sort, dedupe, validate simplicity

    static Graph complete(int n);
    static Graph from_edges(std::vector<Vertex> vertices,
                            std::vector<std::pair<Vertex, Vertex>> edges);
};

/// Graph of the cone over `g`: `g` plus a fresh apex joined to every vertex.
Graph cone_graph(const Graph& g, Vertex apex);

/// Copy of `g` with one edge removed.
Graph without_edge(const Graph& g, Vertex u, Vertex v);

} // namespace g2lab

#endif
