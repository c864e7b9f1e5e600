#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "corank/graph.hpp"
#include "corank/rank.hpp"

namespace corank::testing {

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p = 0.5)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p = 0.4)
{
    while (true) {
        auto g = random_graph(rng, n, p);
        if (is_connected(g)) return g;
    }
}

inline Digraph random_digraph(std::mt19937_64& rng, std::size_t n, double p = 0.4)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> arcs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && coin(rng)) arcs.emplace_back(u, v);
    return Digraph(n, arcs);
}

/// Each new vertex attaches to a uniformly chosen earlier one.
inline Graph random_tree(std::mt19937_64& rng, std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<Vertex> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    return Graph(n, edges);
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, std::size_t n)
{
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

// Independent color change: repeat until no vertex has a unique white
// out-neighbor.
inline std::uint64_t brute_closure(const std::vector<std::uint64_t>& out, std::uint64_t blue)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < out.size(); ++v) {
            if (!(blue >> v & 1)) continue;
            const std::uint64_t white = out[v] & ~blue;
            if (white && !(white & (white - 1))) {
                blue |= white;
                changed = true;
            }
        }
    }
    return blue;
}

inline std::vector<std::uint64_t> brute_out(const Digraph& d)
{
    std::vector<std::uint64_t> out(d.order(), 0);
    for (auto [u, v] : d.arcs()) out[u] |= std::uint64_t{1} << v;
    return out;
}

inline std::size_t brute_zero_forcing_number(const Digraph& d)
{
    const std::size_t n = d.order();
    const auto out = brute_out(d);
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::size_t best = n;
    for (std::uint64_t s = 0; s <= all; ++s) {
        const auto k = static_cast<std::size_t>(__builtin_popcountll(s));
        if (k < best && brute_closure(out, s) == all) best = k;
    }
    return best;
}

inline mpz_class laplace_det(const std::vector<std::vector<mpz_class>>& m)
{
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    mpz_class total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        std::vector<std::vector<mpz_class>> sub;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<mpz_class> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            sub.push_back(std::move(row));
        }
        const mpz_class term = m[0][c] * laplace_det(sub);
        total += (c % 2 == 0) ? term : mpz_class(-term);
    }
    return total;
}

inline mpz_class laplace_det(const IntMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols)
{
    std::vector<std::vector<mpz_class>> sub(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (auto c : cols) sub[r].push_back(mpz_class(static_cast<long>(m(rows[r], c))));
    return laplace_det(sub);
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f)
{
    std::vector<std::size_t> s(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == k) {
            f(s);
            return;
        }
        for (std::size_t i = start; i + (k - pos) <= n; ++i) {
            s[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

/// Largest k with a nonzero k x k minor.
inline std::size_t minor_rank(const IntMatrix& m)
{
    for (std::size_t k = std::min(m.rows, m.cols); k > 0; --k) {
        bool found = false;
        for_each_subset(m.rows, k, [&](const std::vector<std::size_t>& rows) {
            if (found) return;
            for_each_subset(m.cols, k, [&](const std::vector<std::size_t>& cols) {
                if (!found && laplace_det(m, rows, cols) != 0) found = true;
            });
        });
        if (found) return k;
    }
    return 0;
}

// Vertex set of g induces a path (a single vertex counts).
inline bool induces_path(const Graph& g, const std::vector<Vertex>& block)
{
    if (block.size() <= 1) return true;
    std::size_t edges = 0;
    for (auto u : block) {
        std::size_t deg = 0;
        for (auto v : block)
            if (g.adjacent(u, v)) ++deg;
        if (deg == 0 || deg > 2) return false;
        edges += deg;
    }
    if (edges / 2 != block.size() - 1) return false;
    return is_connected(induced_subgraph(g, block));
}

/// Minimum partition of V into induced paths: DP over vertex subsets.
inline std::size_t brute_path_cover(const Graph& g)
{
    const std::size_t n = g.order();
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<char> path(full + 1, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        std::vector<Vertex> block;
        for (Vertex v = 0; v < n; ++v)
            if (s >> v & 1) block.push_back(v);
        path[s] = induces_path(g, block);
    }
    std::vector<std::size_t> best(full + 1, n + 1);
    best[0] = 0;
    for (std::uint32_t s = 1; s <= full; ++s) {
        // The block holding the lowest vertex of s.
        const std::uint32_t low = s & (~s + 1);
        const std::uint32_t rest = s ^ low;
        for (std::uint32_t t = rest;; t = (t - 1) & rest) {
            if (path[t | low]) best[s] = std::min(best[s], best[s ^ (t | low)] + 1);
            if (t == 0) break;
        }
    }
    return best[full];
}

/// Largest edge subset with all degrees <= 2.
inline std::size_t brute_two_matching(const Graph& g)
{
    const auto edges = g.edges();
    std::size_t best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << edges.size()); ++s) {
        std::vector<int> deg(g.order(), 0);
        bool ok = true;
        for (std::size_t e = 0; e < edges.size() && ok; ++e) {
            if (!(s >> e & 1)) continue;
            ok = ++deg[edges[e].first] <= 2 && ++deg[edges[e].second] <= 2;
        }
        if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(s)));
    }
    return best;
}

/// max p - q over deletions of q vertices whose remainder is p disjoint paths.
inline long brute_delta(const Graph& g)
{
    const std::size_t n = g.order();
    long best = -static_cast<long>(n);
    for (std::uint64_t del = 0; del < (std::uint64_t{1} << n); ++del) {
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < n; ++v)
            if (!(del >> v & 1)) keep.push_back(v);
        const auto h = induced_subgraph(g, keep);
        std::vector<int> comp(h.order(), -1);
        long p = 0;
        bool ok = true;
        for (Vertex s = 0; s < h.order() && ok; ++s) {
            if (comp[s] != -1) continue;
            std::vector<Vertex> stack{s}, members;
            comp[s] = static_cast<int>(p);
            while (!stack.empty()) {
                auto u = stack.back();
                stack.pop_back();
                members.push_back(u);
                for (auto w : h.neighbors(u))
                    if (comp[w] == -1) {
                        comp[w] = static_cast<int>(p);
                        stack.push_back(w);
                    }
            }
            std::size_t edges = 0;
            for (auto u : members) {
                if (h.degree(u) > 2) ok = false;
                edges += h.degree(u);
            }
            if (edges / 2 != members.size() - 1) ok = false;
            ++p;
        }
        if (ok) best = std::max(best, p - static_cast<long>(__builtin_popcountll(del)));
    }
    return best;
}

}  // namespace corank::testing
