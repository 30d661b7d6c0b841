#pragma once

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "graph.hpp"

namespace opspec {

/// Outerplanar iff the graph plus an apex adjacent to every vertex is planar (Boyer-Myrvold test).
inline bool outerplanar_by_cone(const Graph& g) {
    using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    const int n = g.order();
    BG b(n + 1);
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, b);
    for (int v = 0; v < n; ++v) boost::add_edge(v, n, b);
    return boost::boyer_myrvold_planarity_test(b);
}

}  // namespace opspec
