#pragma once

#include <string>

#include "cubicbase/graph.hpp"

namespace cubicbase {

std::string to_graph6(const Graph& g);
std::string to_sparse6(const Graph& g);

// Accepts graph6 or sparse6, with or without the standard >>...<< header.
Graph from_graph6_line(const std::string& line);

}  // namespace cubicbase
