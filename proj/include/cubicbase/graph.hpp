#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "cubicbase/perm.hpp"

namespace cubicbase {

constexpr int GIRTH_INFINITE = std::numeric_limits<int>::max();

// Immutable simple undirected graph with sorted neighbour lists.
class Graph {
public:
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    std::vector<std::pair<int, int>> edges() const;
    int num_edges() const;

    bool is_regular(int k) const;

    // Applies a relabelling: vertex v of this graph becomes p[v].
    Graph relabelled(const Perm& p) const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    friend class Digraph;
    std::vector<std::vector<int>> adj_;
};

// Immutable loopless digraph with sorted out-neighbour lists.
class Digraph {
public:
    static Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

    int num_vertices() const { return static_cast<int>(out_.size()); }
    const std::vector<int>& out_neighbours(int v) const { return out_[v]; }
    std::vector<std::pair<int, int>> arcs() const;
    int num_arcs() const;

    Graph underlying() const;

private:
    std::vector<std::vector<int>> out_;
};

bool is_connected(const Graph& g);
// Shortest path length, or -1 when unreachable.
int distance(const Graph& g, int u, int v);
// Length of a shortest cycle, GIRTH_INFINITE for forests.
int girth(const Graph& g);

class PermGroup;

// Quotient by the orbits of N (which must preserve adjacency in g).
Graph quotient(const Graph& g, const PermGroup& n);
Digraph quotient(const Digraph& d, const PermGroup& n);

}  // namespace cubicbase
