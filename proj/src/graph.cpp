#include "cubicbase/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "cubicbase/permgroup.hpp"

namespace cubicbase {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw error("Graph: negative vertex count");
    Graph g;
    g.adj_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw error("Graph: endpoint out of range");
        if (u == v) throw error("Graph: loop not allowed");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) continue;
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < num_vertices(); ++u)
        for (int v : adj_[u])
            if (u < v) e.emplace_back(u, v);
    return e;
}

int Graph::num_edges() const {
    int total = 0;
    for (const auto& nb : adj_) total += static_cast<int>(nb.size());
    return total / 2;
}

bool Graph::is_regular(int k) const {
    for (const auto& nb : adj_)
        if (static_cast<int>(nb.size()) != k) return false;
    return true;
}

Graph Graph::relabelled(const Perm& p) const {
    if (p.degree() != num_vertices()) throw error("Graph: relabelling degree mismatch");
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : edges()) e.emplace_back(p[u], p[v]);
    return from_edges(num_vertices(), e);
}

Digraph Digraph::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    if (n < 0) throw error("Digraph: negative vertex count");
    Digraph d;
    d.out_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw error("Digraph: endpoint out of range");
        if (u == v) throw error("Digraph: loop not allowed");
        if (!seen.insert({u, v}).second) continue;
        d.out_[u].push_back(v);
    }
    for (auto& nb : d.out_) std::sort(nb.begin(), nb.end());
    return d;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> a;
    for (int u = 0; u < num_vertices(); ++u)
        for (int v : out_[u]) a.emplace_back(u, v);
    return a;
}

int Digraph::num_arcs() const {
    int total = 0;
    for (const auto& nb : out_) total += static_cast<int>(nb.size());
    return total;
}

Graph Digraph::underlying() const {
    return Graph::from_edges(num_vertices(), arcs());
}

bool is_connected(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbours(u))
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count == n;
}

int distance(const Graph& g, int u, int v) {
    const int n = g.num_vertices();
    if (u < 0 || u >= n || v < 0 || v >= n) throw error("distance: vertex out of range");
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
        int w = q.front();
        q.pop();
        if (w == v) return dist[w];
        for (int x : g.neighbours(w))
            if (dist[x] < 0) {
                dist[x] = dist[w] + 1;
                q.push(x);
            }
    }
    return -1;
}

int girth(const Graph& g) {
    // For each start vertex, BFS; a non-tree edge closing at depths d1, d2
    // witnesses a cycle of length d1 + d2 + 1 through the root.
    const int n = g.num_vertices();
    int best = GIRTH_INFINITE;
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (best != GIRTH_INFINITE && 2 * dist[u] >= best) break;
            for (int v : g.neighbours(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u]) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best;
}

namespace {

std::vector<int> orbit_labels(const PermGroup& n, int num_vertices, int& num_orbits) {
    if (n.degree() != num_vertices) throw error("quotient: group degree mismatch");
    auto orbs = n.orbits();
    std::vector<int> label(num_vertices, -1);
    for (std::size_t i = 0; i < orbs.size(); ++i)
        for (int v : orbs[i]) label[v] = static_cast<int>(i);
    num_orbits = static_cast<int>(orbs.size());
    return label;
}

void check_preserves(const Graph& g, const PermGroup& n) {
    for (const Perm& p : n.generators())
        for (auto [u, v] : g.edges())
            if (!g.adjacent(p[u], p[v])) throw error("quotient: group does not preserve adjacency");
}

}  // namespace

Graph quotient(const Graph& g, const PermGroup& n) {
    check_preserves(g, n);
    int cells = 0;
    auto label = orbit_labels(n, g.num_vertices(), cells);
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges())
        if (label[u] != label[v]) e.emplace_back(label[u], label[v]);
    return Graph::from_edges(cells, e);
}

Digraph quotient(const Digraph& d, const PermGroup& n) {
    Graph und = d.underlying();
    check_preserves(und, n);
    // arcs must additionally be preserved with their direction
    for (const Perm& p : n.generators()) {
        std::set<std::pair<int, int>> arcset;
        for (auto a : d.arcs()) arcset.insert(a);
        for (auto [u, v] : d.arcs())
            if (!arcset.count({p[u], p[v]}))
                throw error("quotient: group does not preserve arcs");
    }
    int cells = 0;
    auto label = orbit_labels(n, d.num_vertices(), cells);
    // an orbit pair gets an arc in a direction only when witnessed in it
    std::vector<std::pair<int, int>> a;
    for (auto [u, v] : d.arcs())
        if (label[u] != label[v]) a.emplace_back(label[u], label[v]);
    return Digraph::from_arcs(cells, a);
}

}  // namespace cubicbase
