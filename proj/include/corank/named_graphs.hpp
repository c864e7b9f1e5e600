#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "corank/graph.hpp"

namespace corank::named {

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph complete_multipartite(const std::vector<std::size_t>& parts);
/// K_{1,k}: center 0, leaves 1..k.
Graph star(std::size_t k);
/// Center 0 with legs of the given lengths.
Graph spider(const std::vector<std::size_t>& legs);
/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
Graph petersen();

/// The bull: triangle 0,1,2 with pendants 3 (on 0) and 4 (on 1). The two
/// pendants form a zero forcing set.
Graph bull();
/// Complement of 3K2 (octahedron); non-adjacent pairs are {0,3}, {1,4}, {2,5}.
Graph octahedron();
Graph disjoint_matching(std::size_t k);

/// The three six-vertex graphs whose first non-trivial critical ideal over
/// the reals has no zero in {-2..2}^6. Vertex labels are the printed ones.
Graph graph_a();
Graph graph_b();
Graph graph_c();

/// Trees on n vertices up to isomorphism (1 <= n <= 12), canonical order.
std::vector<Graph> all_trees(std::size_t n);

/// Vertex order: T (n1 sources), K (n2, complete with double arcs), T' (n3).
Digraph lambda_digraph(std::size_t n1, std::size_t n2, std::size_t n3);
Digraph complete_digraph(std::size_t n);

struct NamedDigraph {
    std::string name;
    Digraph digraph;
    /// Marked vertices: a zero forcing set of size n - 2.
    std::vector<Vertex> marked;
};

/// The seventeen forbidden digraphs. Two distinct digraphs share the label
/// F_{3,6}; they are named F_{3,6a} and F_{3,6b}.
std::vector<NamedDigraph> forbidden_family();

}  // namespace corank::named
