#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace corank {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);
    /// Throws std::invalid_argument on loops or endpoints >= n. Repeated
    /// pairs collapse to one edge.
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const { return adj_.size(); }
    std::size_t size() const { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const;
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

/// Loopless digraph; anti-parallel arcs (double arcs) are allowed.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(std::size_t n);
    Digraph(std::size_t n, std::span<const Edge> arcs);

    std::size_t order() const { return out_.size(); }
    std::size_t size() const { return arc_count_; }

    bool has_arc(Vertex u, Vertex v) const;
    std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
    std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }

    std::vector<Edge> arcs() const;

    bool operator==(const Digraph&) const = default;

private:
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    std::size_t arc_count_ = 0;
};

Graph complement(const Graph& g);
Graph line_graph(const Graph& g);

/// relabel(g, perm) maps vertex v to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);
Digraph relabel(const Digraph& d, std::span<const Vertex> perm);

/// Induced sub(di)graph on `vertices`; vertex vertices[i] becomes i.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Digraph induced_subgraph(const Digraph& d, std::span<const Vertex> vertices);

/// Each edge becomes a double arc.
Digraph to_digraph(const Graph& g);

bool is_connected(const Graph& g);
bool is_weakly_connected(const Digraph& d);
bool is_tree(const Graph& g);

/// Out-adjacency rows as bitmasks; requires order() <= 64.
std::vector<std::uint64_t> out_masks(const Digraph& d);
std::vector<std::uint64_t> adjacency_masks(const Graph& g);

}  // namespace corank
