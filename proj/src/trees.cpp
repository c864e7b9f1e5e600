#include "corank/trees.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <sstream>

#include "corank/critical_ideals.hpp"
#include "corank/zero_forcing.hpp"

namespace corank {

namespace {

constexpr Vertex kNone = static_cast<Vertex>(-1);

struct Rooted {
    std::vector<Vertex> order;
    std::vector<Vertex> parent;
};

// BFS order of every component; parents precede children.
Rooted root_forest(const Graph& g)
{
    const std::size_t n = g.order();
    Rooted r;
    r.parent.assign(n, kNone);
    std::vector<char> seen(n, 0);
    r.order.reserve(n);
    // Depth-first preorder keeps long branches contiguous in memory.
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            r.order.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (seen[w]) continue;
                seen[w] = 1;
                r.parent[w] = v;
                stack.push_back(w);
            }
        }
    }
    return r;
}

bool is_forest(const Graph& g)
{
    std::vector<Vertex> up(g.order());
    std::iota(up.begin(), up.end(), Vertex{0});
    std::function<Vertex(Vertex)> find = [&](Vertex v) {
        while (up[v] != v) v = up[v] = up[up[v]];
        return v;
    };
    for (auto [u, v] : g.edges()) {
        const Vertex a = find(u), b = find(v);
        if (a == b) return false;
        up[a] = b;
    }
    return true;
}

void require_tree(const Graph& t)
{
    if (!is_tree(t)) throw NotATree("input is not a tree");
}

// Keeps the two children with the largest key.
struct TopTwo {
    std::array<Vertex, 2> child{kNone, kNone};
    std::array<std::int64_t, 2> key{0, 0};

    void offer(Vertex c, std::int64_t k)
    {
        if (child[0] == kNone || k > key[0]) {
            child[1] = child[0];
            key[1] = key[0];
            child[0] = c;
            key[0] = k;
        } else if (child[1] == kNone || k > key[1]) {
            child[1] = c;
            key[1] = k;
        }
    }
};

TwoMatching forest_two_matching(const Graph& g)
{
    const std::size_t n = g.order();
    const auto rooted = root_forest(g);
    std::vector<std::int64_t> le1(n, 0), le2(n, 0);
    std::vector<TopTwo> top(n);
    for (auto it = rooted.order.rbegin(); it != rooted.order.rend(); ++it) {
        const Vertex v = *it;
        std::int64_t base = 0;
        for (Vertex c : g.neighbors(v)) {
            if (c == rooted.parent[v]) continue;
            base += le2[c];
            top[v].offer(c, 1 + le1[c] - le2[c]);
        }
        const std::int64_t g1 = top[v].child[0] == kNone ? 0 : std::max<std::int64_t>(0, top[v].key[0]);
        const std::int64_t g2 = top[v].child[1] == kNone ? 0 : std::max<std::int64_t>(0, top[v].key[1]);
        le1[v] = base + g1;
        le2[v] = base + g1 + g2;
    }
    TwoMatching out;
    std::vector<int> cap(n, 2);
    for (Vertex v : rooted.order) {
        for (int k = 0; k < cap[v]; ++k) {
            const Vertex c = top[v].child[static_cast<std::size_t>(k)];
            if (c == kNone || top[v].key[static_cast<std::size_t>(k)] <= 0) break;
            out.edges.emplace_back(std::min(v, c), std::max(v, c));
            cap[c] = 1;
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.count = out.edges.size();
    return out;
}

TwoMatching exhaustive_two_matching(const Graph& g)
{
    const auto edges = g.edges();
    if (edges.size() > kMaxExhaustiveTwoMatchingEdges)
        throw std::out_of_range("too many edges for exhaustive 2-matching search");
    std::vector<int> deg(g.order(), 0);
    std::vector<Edge> current, best;
    std::function<void(std::size_t)> search = [&](std::size_t k) {
        if (current.size() + (edges.size() - k) <= best.size()) return;
        if (k == edges.size()) {
            best = current;
            return;
        }
        auto [u, v] = edges[k];
        if (deg[u] < 2 && deg[v] < 2) {
            ++deg[u];
            ++deg[v];
            current.push_back(edges[k]);
            search(k + 1);
            current.pop_back();
            --deg[u];
            --deg[v];
        }
        search(k + 1);
    };
    search(0);
    return {best.size(), best};
}

}  // namespace

TwoMatching two_matching_number(const Graph& g)
{
    if (is_forest(g)) return forest_two_matching(g);
    return exhaustive_two_matching(g);
}

PathCover path_cover_number(const Graph& tree)
{
    require_tree(tree);
    const std::size_t n = tree.order();
    const auto m = forest_two_matching(tree);
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [u, v] : m.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    PathCover out;
    std::vector<char> used(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (used[s] || adj[s].size() > 1) continue;
        std::vector<Vertex> path{s};
        used[s] = 1;
        Vertex prev = kNone, cur = s;
        while (true) {
            Vertex next = kNone;
            for (Vertex w : adj[cur])
                if (w != prev) next = w;
            if (next == kNone) break;
            path.push_back(next);
            used[next] = 1;
            prev = cur;
            cur = next;
        }
        out.paths.push_back(std::move(path));
    }
    out.count = out.paths.size();
    return out;
}

DeltaWitness delta_parameter(const Graph& tree)
{
    require_tree(tree);
    const std::size_t n = tree.order();
    const auto rooted = root_forest(tree);
    // Cost 2q + (edges left): D deletes v, K1 / K2 keep v with at most one / two kept children.
    std::vector<std::int64_t> D(n), K1(n), K2(n);
    std::vector<TopTwo> top(n);
    for (auto it = rooted.order.rbegin(); it != rooted.order.rend(); ++it) {
        const Vertex v = *it;
        std::int64_t del = 2, keep = 0;
        for (Vertex c : tree.neighbors(v)) {
            if (c == rooted.parent[v]) continue;
            del += std::min(D[c], K2[c]);
            keep += D[c];
            top[v].offer(c, D[c] - (K1[c] + 1));
        }
        const std::int64_t s1 = top[v].child[0] == kNone ? 0 : std::max<std::int64_t>(0, top[v].key[0]);
        const std::int64_t s2 = top[v].child[1] == kNone ? 0 : std::max<std::int64_t>(0, top[v].key[1]);
        D[v] = del;
        K1[v] = keep - s1;
        K2[v] = keep - s1 - s2;
    }
    enum State : int { Deleted, Keep1, Keep2 };
    std::vector<int> state(n, Keep2);
    const Vertex root = rooted.order.front();
    state[root] = D[root] < K2[root] ? Deleted : Keep2;
    DeltaWitness out;
    for (Vertex v : rooted.order) {
        std::vector<Vertex> kept_children;
        if (state[v] != Deleted) {
            const int cap = state[v] == Keep1 ? 1 : 2;
            for (int k = 0; k < cap; ++k) {
                const Vertex c = top[v].child[static_cast<std::size_t>(k)];
                if (c == kNone || top[v].key[static_cast<std::size_t>(k)] <= 0) break;
                kept_children.push_back(c);
            }
        }
        for (Vertex c : tree.neighbors(v)) {
            if (c == rooted.parent[v]) continue;
            if (state[v] == Deleted) state[c] = D[c] < K2[c] ? Deleted : Keep2;
            else if (std::find(kept_children.begin(), kept_children.end(), c) != kept_children.end()) state[c] = Keep1;
            else state[c] = Deleted;
        }
        if (state[v] == Deleted) out.deleted.push_back(v);
    }
    std::sort(out.deleted.begin(), out.deleted.end());
    const std::int64_t cost = std::min(D[root], K2[root]);
    out.value = static_cast<std::size_t>(static_cast<std::int64_t>(n) - cost);
    out.paths = out.value + out.deleted.size();
    return out;
}

bool is_path_cover(const Graph& g, const std::vector<std::vector<Vertex>>& paths)
{
    std::vector<int> seen(g.order(), 0);
    for (const auto& p : paths) {
        if (p.empty()) return false;
        for (Vertex v : p) {
            if (v >= g.order() || seen[v]++) return false;
        }
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (g.adjacent(p[i], p[j]) != (j == i + 1)) return false;
    }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

bool is_two_matching(const Graph& g, const std::vector<Edge>& edges)
{
    std::vector<int> deg(g.order(), 0);
    std::vector<Edge> sorted;
    for (auto [u, v] : edges) {
        if (u >= g.order() || v >= g.order() || !g.adjacent(u, v)) return false;
        if (++deg[u] > 2 || ++deg[v] > 2) return false;
        sorted.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::optional<std::size_t> path_components_after_deletion(const Graph& g, const std::vector<Vertex>& deleted)
{
    std::vector<char> gone(g.order(), 0);
    for (Vertex v : deleted) {
        if (v >= g.order() || gone[v]) return std::nullopt;
        gone[v] = 1;
    }
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!gone[v]) rest.push_back(v);
    const Graph h = induced_subgraph(g, rest);
    for (Vertex v = 0; v < h.order(); ++v)
        if (h.degree(v) > 2) return std::nullopt;
    if (!is_forest(h)) return std::nullopt;
    return h.order() - h.size();
}

TreeParams tree_suite(const Graph& tree)
{
    require_tree(tree);
    const std::size_t n = tree.order();
    if (n > kMaxTreeSuiteOrder) throw std::out_of_range("tree suite needs n <= 12");
    TreeParams t;
    t.n = n;
    t.mz = mz(tree);
    const auto gz = gamma(tree, Domain::integers());
    const auto gq = gamma(tree, Domain::rationals());
    t.P = path_cover_number(tree);
    t.Delta = delta_parameter(tree);
    t.nu2 = two_matching_number(tree);
    t.M = t.P.count;
    t.mr = n - t.M;
    const auto scan = min_rank_scan(to_digraph(tree), IntegerBox{-1, 0}, 0, t.mz, std::size_t{1} << n);
    if (scan.best) {
        t.diagonal = scan.best->point;
        t.diagonal_rank = scan.best->rank;
    }

    std::ostringstream err;
    if (!gz.value || *gz.value != t.mz) err << "gamma_Z [" << gz.lower << "," << gz.upper << "] != mz; ";
    if (!gq.value || *gq.value != t.mz) err << "gamma_Q [" << gq.lower << "," << gq.upper << "] != mz; ";
    if (gz.value) t.gamma_z = *gz.value;
    if (gq.value) t.gamma_q = *gq.value;
    if (n - t.P.count != t.mz) err << "n - P = " << n - t.P.count << " != mz; ";
    if (n - t.Delta.value != t.mz) err << "n - Delta = " << n - t.Delta.value << " != mz; ";
    if (t.nu2.count != t.mz) err << "nu2 = " << t.nu2.count << " != mz; ";
    if (!scan.best || t.diagonal_rank != t.mz) err << "no {-1,0} diagonal of rank mz; ";
    if (!is_path_cover(tree, t.P.paths) || t.P.paths.size() != t.P.count) err << "bad path cover; ";
    if (!is_two_matching(tree, t.nu2.edges)) err << "bad 2-matching; ";
    const auto left = path_components_after_deletion(tree, t.Delta.deleted);
    if (!left || *left != t.Delta.paths || t.Delta.paths - t.Delta.deleted.size() != t.Delta.value)
        err << "bad deletion witness; ";
    if (!err.str().empty()) throw TheoremViolation(err.str());
    return t;
}

}  // namespace corank
