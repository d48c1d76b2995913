#pragma once

#include <optional>

#include "cubicbase/graph.hpp"
#include "cubicbase/permgroup.hpp"

namespace cubicbase {

// Exact automorphism group via equitable-partition refinement with
// individualization backtracking. Throws when num_vertices exceeds cap.
PermGroup automorphism_group(const Graph& g, int cap = 4096);

// A relabelling p such that relabelled(p) is identical for isomorphic inputs.
Perm canonical_labelling(const Graph& g, int cap = 4096);
Graph canonical_form(const Graph& g, int cap = 4096);

bool isomorphic(const Graph& a, const Graph& b, int cap = 4096);
// Vertex map from a to b, if one exists.
std::optional<Perm> isomorphism(const Graph& a, const Graph& b, int cap = 4096);

bool is_vertex_transitive(const Graph& g);
bool is_edge_transitive(const Graph& g);
bool is_arc_transitive(const Graph& g);
// Largest s <= 6 such that Aut acts transitively on s-arcs; 0 when not
// arc-transitive. Cubic graphs never exceed 5.
int max_s_arc_transitivity(const Graph& g);

// Same predicates when the automorphism group is already known.
bool is_vertex_transitive(const Graph& g, const PermGroup& aut);
bool is_edge_transitive(const Graph& g, const PermGroup& aut);
bool is_arc_transitive(const Graph& g, const PermGroup& aut);
int max_s_arc_transitivity(const Graph& g, const PermGroup& aut);

}  // namespace cubicbase
