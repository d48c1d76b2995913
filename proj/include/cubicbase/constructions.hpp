#pragma once

#include <string>
#include <vector>

#include "cubicbase/graph.hpp"
#include "cubicbase/permgroup.hpp"

namespace cubicbase {

// The graphs C(r,s): vertices are pairs (x; k) with x mod r and k a bit word
// of length s, numbered x*2^s + k with the first letter of k most significant.
Digraph px_digraph(int r, int s);
Graph px_graph(int r, int s);

struct PXGenerators {
    std::vector<Perm> tau;  // tau[i] flips the letter in column i
    Perm rho;               // shifts columns
    Perm sigma;             // reverses the cycle (undirected graph only)
};

PXGenerators px_generators(int r, int s);

// K = <tau_0..tau_{r-1}>, elementary abelian of order 2^r.
PermGroup px_group_K(int r, int s);
// H+ = K . <rho>, arc-preserving subgroup.
PermGroup px_group_Hplus(int r, int s);
// H = K . <rho, sigma>, order 2^r * 2r; equals Aut(C(r,s)) except r = 4.
PermGroup px_group_H(int r, int s);

// Cycles listed as closed vertex sequences; together they partition the
// edge set, each vertex lying on exactly two cycles.
struct CycleDecomposition {
    std::vector<std::vector<int>> cycles;
};

// The column-pair 4-cycle decomposition of C(r,s), invariant under H.
CycleDecomposition canonical_px_decomposition(int r, int s);

// Cubic split of a 4-valent graph along a cycle decomposition. Vertices are
// (vertex, cycle) incidences, numbered by (vertex, cycle index) ascending.
Graph split(const Graph& delta, const CycleDecomposition& c);

// Lifts an automorphism of the 4-valent graph that permutes the cycles of c
// to the split graph.
Perm lift_to_split(const Graph& delta, const CycleDecomposition& c, const Perm& g);

// sC(r,s) together with the lifted group H.
Graph spx_graph(int r, int s);
PermGroup spx_group_H(int r, int s);

struct MergeResult {
    Graph graph;
    bool degenerate;  // contraction produced parallel edges (ladder families)
    std::vector<std::pair<int, int>> matching;
};

MergeResult merge(const Graph& gamma, const PermGroup& g);

Graph circular_ladder(int n);
Graph moebius_ladder(int n);

// Names: K4, K3_3, Cube, Petersen, Heawood, Pappus, Desargues, TutteCoxeter,
// Foster. Each is validated against its known vertex and automorphism counts.
Graph table1_graph(const std::string& name);
const std::vector<std::string>& table1_names();

}  // namespace cubicbase
