#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chromsym {

using Edge = std::pair<int, int>;  // normalized u < v

inline Edge make_edge(int u, int v) {
    if (u > v) std::swap(u, v);
    return {u, v};
}

inline std::string edge_to_string(const Edge& e) {
    return "[" + std::to_string(e.first) + "," + std::to_string(e.second) + "]";
}

// Finite simple undirected graph: vertex count plus a set of unordered
// distinct vertex pairs, 0-indexed. Disconnected graphs are permitted.
class Graph {
public:
    Graph() = default;

    explicit Graph(int vertex_count) : n_(vertex_count) {
        if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    }

    Graph(int vertex_count, const std::vector<Edge>& edges) : Graph(vertex_count) {
        for (const Edge& e : edges) add_edge(e.first, e.second);
    }

    void add_edge(int u, int v) {
        Edge e = make_edge(u, v);
        if (e.first == e.second)
            throw std::invalid_argument("loop edge " + edge_to_string({u, v}));
        if (e.first < 0 || e.second >= n_)
            throw std::invalid_argument("edge endpoint out of range " + edge_to_string(e));
        if (!edges_.insert(e).second)
            throw std::invalid_argument("duplicate edge " + edge_to_string(e));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::set<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const { return edges_.count(make_edge(u, v)) > 0; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::set<Edge> edges_;
};

inline Graph complete(int m) {
    if (m < 0) throw std::invalid_argument("complete: negative m");
    Graph g(m);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
    return g;
}

inline Graph path(int n) {
    if (n < 0) throw std::invalid_argument("path: negative n");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

// Lollipop L_{m,n}: clique vertices 0..m-1, path vertices m..m+n-1, bridge
// {m-1, m}. L_{m,0} = K_m and L_{0,n} = P_n.
inline Graph lollipop(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("lollipop: negative argument");
    if (m == 0) return path(n);
    if (n == 0) return complete(m);
    Graph g(m + n);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
    g.add_edge(m - 1, m);
    for (int v = m + 1; v < m + n; ++v) g.add_edge(v - 1, v);
    return g;
}

// Lariat L_k = L_{3,k-3}: a triangle with a path of k-3 extra vertices.
inline Graph lariat(int n_plus_3) {
    if (n_plus_3 < 3) throw std::invalid_argument("lariat: argument must be >= 3");
    return lollipop(3, n_plus_3 - 3);
}

inline Graph delete_edges(const Graph& g, const std::set<Edge>& to_remove) {
    for (const Edge& e : to_remove)
        if (!g.has_edge(e.first, e.second))
            throw std::invalid_argument("delete_edges: unknown edge " + edge_to_string(e));
    Graph h(g.vertex_count());
    for (const Edge& e : g.edges())
        if (!to_remove.count(e)) h.add_edge(e.first, e.second);
    return h;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.vertex_count() + b.vertex_count());
    for (const Edge& e : a.edges()) g.add_edge(e.first, e.second);
    int off = a.vertex_count();
    for (const Edge& e : b.edges()) g.add_edge(e.first + off, e.second + off);
    return g;
}

// The k edges of a cycle listed as v_1..v_k: edge i joins v_i and v_{i+1},
// the last closes the cycle back to v_1.
inline std::vector<Edge> find_cycle_edges(const Graph& g, const std::vector<int>& verts) {
    std::size_t k = verts.size();
    if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::set<int> seen(verts.begin(), verts.end());
    if (seen.size() != k) throw std::invalid_argument("repeated vertex in cycle");
    std::vector<Edge> out;
    for (std::size_t i = 0; i < k; ++i) {
        int u = verts[i], v = verts[(i + 1) % k];
        if (!g.has_edge(u, v))
            throw std::invalid_argument("cycle vertices " + std::to_string(u) + " and " +
                                        std::to_string(v) + " are not adjacent");
        out.push_back(make_edge(u, v));
    }
    return out;
}

}  // namespace chromsym
