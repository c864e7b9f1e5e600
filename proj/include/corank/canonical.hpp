#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "corank/graph.hpp"

namespace corank {

/// Canonical labeling. `encoding` is the graph6 (or digraph6) string of the
/// relabeled input, so equal encodings mean isomorphic inputs.
/// `relabeling[v]` is the canonical label of input vertex v.
struct CanonicalForm {
    std::string encoding;
    std::vector<Vertex> relabeling;

    bool operator==(const CanonicalForm&) const = default;
};

/// Exact for every order (individualization-refinement over the complete
/// search tree, pruned only by twin transpositions); practical up to ~12
/// vertices for highly symmetric inputs. Requires order() <= 64.
CanonicalForm canonical_form(const Graph& g);
CanonicalForm canonical_form(const Digraph& d);

Graph canonical_graph(const Graph& g);
Digraph canonical_digraph(const Digraph& d);

inline constexpr std::size_t kMaxEnumeratedGraphOrder = 7;
inline constexpr std::size_t kMaxEnumeratedDigraphOrder = 4;

/// All graphs on exactly n vertices up to isomorphism (n <= 7), in
/// canonical-encoding order.
std::vector<Graph> enumerate_graphs(std::size_t n);

/// Connected graphs with 1 <= n <= max_n, one per isomorphism class, ordered
/// by n then canonical encoding. Throws std::out_of_range for max_n > 7.
std::vector<Graph> enumerate_connected_graphs(std::size_t max_n);

/// Digraphs with 1 <= n <= max_n up to isomorphism, ordered by n then
/// canonical encoding. Throws std::out_of_range for max_n > 4.
std::vector<Digraph> enumerate_digraphs(std::size_t max_n);

}  // namespace corank
