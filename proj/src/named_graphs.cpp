#include "corank/named_graphs.hpp"

#include <map>
#include <stdexcept>

#include "corank/canonical.hpp"

namespace corank::named {

Graph path(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph cycle(std::size_t n)
{
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    return Graph(n, edges);
}

Graph complete(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph complete_multipartite(const std::vector<std::size_t>& parts)
{
    std::vector<std::size_t> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] == 0) throw std::invalid_argument("multipartite parts must be non-empty");
        part_of.insert(part_of.end(), parts[p], p);
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < part_of.size(); ++u)
        for (Vertex v = u + 1; v < part_of.size(); ++v)
            if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    return Graph(part_of.size(), edges);
}

Graph star(std::size_t k)
{
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= k; ++v) edges.emplace_back(0, v);
    return Graph(k + 1, edges);
}

Graph spider(const std::vector<std::size_t>& legs)
{
    std::vector<Edge> edges;
    Vertex next = 1;
    for (std::size_t len : legs) {
        Vertex prev = 0;
        for (std::size_t i = 0; i < len; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph(next, edges);
}

Graph petersen()
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, edges);
}

Graph bull()
{
    const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}};
    return Graph(5, edges);
}

Graph disjoint_matching(std::size_t k)
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < k; ++i) edges.emplace_back(i, i + static_cast<Vertex>(k));
    return Graph(2 * k, edges);
}

Graph octahedron()
{
    return complement(disjoint_matching(3));
}

Graph graph_a()
{
    const std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                                  {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
    return Graph(6, edges);
}

Graph graph_b()
{
    const std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 5}, {4, 5}};
    return Graph(6, edges);
}

Graph graph_c()
{
    // The drawing swaps the printed labels of two rim nodes; these are the
    // printed labels: hub 0 and rim cycle 1-2-3-5-4-1.
    const std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                                  {1, 4}, {1, 2}, {2, 3}, {3, 5}, {4, 5}};
    return Graph(6, edges);
}

std::vector<Graph> all_trees(std::size_t n)
{
    if (n < 1 || n > 12) throw std::out_of_range("all_trees supports 1 <= n <= 12");
    std::map<std::string, Graph> level;
    level.emplace(canonical_form(Graph(1)).encoding, Graph(1));
    for (std::size_t k = 2; k <= n; ++k) {
        std::map<std::string, Graph> next;
        for (const auto& [key, t] : level) {
            for (Vertex attach = 0; attach + 1 < k; ++attach) {
                auto edges = t.edges();
                edges.emplace_back(attach, static_cast<Vertex>(k - 1));
                Graph grown(k, edges);
                auto form = canonical_form(grown);
                if (!next.count(form.encoding)) next.emplace(form.encoding, relabel(grown, form.relabeling));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> result;
    for (auto& [key, t] : level) result.push_back(std::move(t));
    return result;
}

Digraph lambda_digraph(std::size_t n1, std::size_t n2, std::size_t n3)
{
    const std::size_t n = n1 + n2 + n3;
    auto in_t = [&](Vertex v) { return v < n1; };
    auto in_k = [&](Vertex v) { return v >= n1 && v < n1 + n2; };
    auto in_t2 = [&](Vertex v) { return v >= n1 + n2; };
    std::vector<Edge> arcs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            const bool arc = (in_k(u) && in_k(v)) || (in_t(u) && in_k(v)) || (in_t(u) && in_t2(v)) ||
                             (in_k(u) && in_t2(v));
            if (arc) arcs.emplace_back(u, v);
        }
    }
    return Digraph(n, arcs);
}

Digraph complete_digraph(std::size_t n)
{
    return lambda_digraph(0, n, 0);
}

std::vector<NamedDigraph> forbidden_family()
{
    // Vertices v1..v4 map to 0..3.
    auto make = [](std::string name, std::size_t n, std::vector<Edge> arcs, std::vector<Vertex> marked) {
        return NamedDigraph{std::move(name), Digraph(n, arcs), std::move(marked)};
    };
    return {
        make("F_{3,1}", 3, {{0, 2}, {2, 1}}, {0}),
        make("F_{3,2}", 3, {{0, 2}, {1, 2}, {2, 0}}, {1}),
        make("F_{3,3}", 3, {{0, 2}, {2, 0}, {2, 1}}, {0}),
        make("F_{3,4}", 3, {{0, 2}, {1, 2}, {2, 0}, {2, 1}}, {0}),
        make("F_{3,5}", 3, {{0, 1}, {1, 2}, {2, 0}}, {0}),
        make("F_{3,6a}", 3, {{0, 1}, {0, 2}, {1, 0}, {2, 1}}, {1}),
        make("F_{3,6b}", 3, {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}}, {2}),
        make("F_{4,1}", 4, {{0, 2}, {0, 3}, {1, 3}}, {0, 1}),
        make("F_{4,2}", 4, {{0, 2}, {0, 3}, {1, 3}, {2, 3}}, {0, 1}),
        make("F_{4,3}", 4, {{0, 2}, {3, 0}, {3, 1}, {3, 2}}, {0, 3}),
        make("F_{4,4}", 4, {{0, 2}, {0, 3}, {1, 3}, {2, 0}, {2, 3}}, {0, 1}),
        make("F_{4,5}", 4, {{0, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}}, {0, 3}),
        make("F_{4,6}", 4, {{0, 2}, {1, 2}, {3, 0}, {3, 1}, {3, 2}}, {0, 3}),
        make("F_{4,7}", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, {0, 2}),
        make("F_{4,8}", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 2}, {1, 3}, {2, 3}}, {0, 2}),
        make("F_{4,9}", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 2}, {1, 3}, {2, 3}, {3, 2}}, {0, 3}),
        make("F_{4,10}", 4, {{0, 1}, {1, 0}, {2, 0}, {2, 1}, {2, 3}, {3, 0}, {3, 1}}, {0, 2}),
    };
}

}  // namespace corank::named
