#include "g2lab/graph.hpp"

#include <algorithm>

namespace g2lab {

std::size_t Graph::index_of(Vertex v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v)
        throw invalid_input("graph: unknown vertex");
    return static_cast<std::size_t>(it - vertices.begin());
}

void Graph::normalize() {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (auto& [u, v] : edges) {
        if (u == v) throw invalid_input("graph: loop edge");
        if (u > v) std::swap(u, v);
        if (!has_vertex(u) || !has_vertex(v))
            throw invalid_input("graph: edge endpoint is not a vertex");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

Graph Graph::complete(int n) {
    Graph g;
    for (Vertex v = 0; v < n; ++v) g.vertices.push_back(v);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
    return g;
}

Graph Graph::from_edges(std::vector<Vertex> vertices,
                        std::vector<std::pair<Vertex, Vertex>> edges) {
    Graph g{std::move(vertices), std::move(edges)};
    g.normalize();
    return g;
}

Graph cone_graph(const Graph& g, Vertex apex) {
    if (g.has_vertex(apex)) throw invalid_input("cone_graph: apex already present");
    Graph c = g;
    c.vertices.push_back(apex);
    for (Vertex v : g.vertices) c.edges.emplace_back(std::min(v, apex), std::max(v, apex));
    c.normalize();
    return c;
}

Graph without_edge(const Graph& g, Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    Graph out = g;
    auto it = std::find(out.edges.begin(), out.edges.end(), std::make_pair(u, v));
    if (it == out.edges.end()) throw invalid_input("without_edge: no such edge");
    out.edges.erase(it);
    return out;
}

} // namespace g2lab
