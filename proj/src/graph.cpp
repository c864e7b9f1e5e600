#include "corank/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace corank {

namespace {

void check_pair(std::size_t n, Vertex u, Vertex v, const char* what)
{
    if (u >= n || v >= n) {
        throw std::invalid_argument(std::string(what) + " endpoint out of range: (" + std::to_string(u) +
                                    ", " + std::to_string(v) + ") with n = " + std::to_string(n));
    }
    if (u == v) {
        throw std::invalid_argument(std::string(what) + " is a loop at vertex " + std::to_string(u));
    }
}

bool sorted_insert(std::vector<Vertex>& list, Vertex v)
{
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it != list.end() && *it == v) {
        return false;
    }
    list.insert(it, v);
    return true;
}

bool sorted_contains(const std::vector<Vertex>& list, Vertex v)
{
    return std::binary_search(list.begin(), list.end(), v);
}

}  // namespace

Graph::Graph(std::size_t n) : adj_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n)
{
    for (auto [u, v] : edges) {
        check_pair(n, u, v, "edge");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        edge_count_ += list.size();
    }
    edge_count_ /= 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    return u < adj_.size() && sorted_contains(adj_[u], v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) {
                result.emplace_back(u, v);
            }
        }
    }
    return result;
}

Digraph::Digraph(std::size_t n) : out_(n), in_(n) {}

Digraph::Digraph(std::size_t n, std::span<const Edge> arcs) : out_(n), in_(n)
{
    for (auto [u, v] : arcs) {
        check_pair(n, u, v, "arc");
        if (sorted_insert(out_[u], v)) {
            sorted_insert(in_[v], u);
            ++arc_count_;
        }
    }
}

bool Digraph::has_arc(Vertex u, Vertex v) const
{
    return u < out_.size() && sorted_contains(out_[u], v);
}

std::vector<Edge> Digraph::arcs() const
{
    std::vector<Edge> result;
    result.reserve(arc_count_);
    for (Vertex u = 0; u < out_.size(); ++u) {
        for (Vertex v : out_[u]) {
            result.emplace_back(u, v);
        }
    }
    return result;
}

Graph complement(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

Graph line_graph(const Graph& g)
{
    const auto edges = g.edges();
    std::vector<Edge> result;
    for (Vertex i = 0; i < edges.size(); ++i) {
        for (Vertex j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) {
                result.emplace_back(i, j);
            }
        }
    }
    return Graph(edges.size(), result);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm)
{
    auto edges = g.edges();
    for (auto& [u, v] : edges) {
        u = perm[u];
        v = perm[v];
    }
    return Graph(g.order(), edges);
}

Digraph relabel(const Digraph& d, std::span<const Vertex> perm)
{
    auto arcs = d.arcs();
    for (auto& [u, v] : arcs) {
        u = perm[u];
        v = perm[v];
    }
    return Digraph(d.order(), arcs);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices)
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < vertices.size(); ++i) {
        for (Vertex j = i + 1; j < vertices.size(); ++j) {
            if (g.adjacent(vertices[i], vertices[j])) {
                edges.emplace_back(i, j);
            }
        }
    }
    return Graph(vertices.size(), edges);
}

Digraph induced_subgraph(const Digraph& d, std::span<const Vertex> vertices)
{
    std::vector<Edge> arcs;
    for (Vertex i = 0; i < vertices.size(); ++i) {
        for (Vertex j = 0; j < vertices.size(); ++j) {
            if (i != j && d.has_arc(vertices[i], vertices[j])) {
                arcs.emplace_back(i, j);
            }
        }
    }
    return Digraph(vertices.size(), arcs);
}

Digraph to_digraph(const Graph& g)
{
    std::vector<Edge> arcs;
    arcs.reserve(2 * g.size());
    for (auto [u, v] : g.edges()) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return Digraph(g.order(), arcs);
}

namespace {

template <class NeighborFn>
bool connected_impl(std::size_t n, NeighborFn&& for_each_neighbor)
{
    if (n == 0) {
        return true;
    }
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for_each_neighbor(v, [&](Vertex w) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        });
    }
    return reached == n;
}

}  // namespace

bool is_connected(const Graph& g)
{
    return connected_impl(g.order(), [&](Vertex v, auto&& visit) {
        for (Vertex w : g.neighbors(v)) visit(w);
    });
}

bool is_weakly_connected(const Digraph& d)
{
    return connected_impl(d.order(), [&](Vertex v, auto&& visit) {
        for (Vertex w : d.out_neighbors(v)) visit(w);
        for (Vertex w : d.in_neighbors(v)) visit(w);
    });
}

bool is_tree(const Graph& g)
{
    return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

std::vector<std::uint64_t> out_masks(const Digraph& d)
{
    if (d.order() > 64) {
        throw std::invalid_argument("bitmask view requires at most 64 vertices");
    }
    std::vector<std::uint64_t> rows(d.order(), 0);
    for (auto [u, v] : d.arcs()) {
        rows[u] |= std::uint64_t{1} << v;
    }
    return rows;
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g)
{
    return out_masks(to_digraph(g));
}

}  // namespace corank
