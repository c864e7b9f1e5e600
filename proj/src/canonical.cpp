#include "corank/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>


namespace corank {

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

struct SearchState {
    std::size_t n = 0;
    bool directed = false;
    std::vector<Mask> out;
    std::vector<Mask> in;
    std::string best;
    std::vector<Vertex> best_labels;
};

std::string order_prefix(std::size_t n)
{
    std::string s;
    if (n <= 62) {
        s.push_back(static_cast<char>(n + 63));
    } else {
        s.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) {
            s.push_back(static_cast<char>(((n >> shift) & 63) + 63));
        }
    }
    return s;
}

void append_bits(std::string& s, const std::vector<bool>& bits)
{
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int value = 0;
        for (std::size_t b = 0; b < 6; ++b) {
            value = (value << 1) | ((i + b < bits.size() && bits[i + b]) ? 1 : 0);
        }
        s.push_back(static_cast<char>(value + 63));
    }
}

// Encoding of the input relabeled so that vertex at_position[p] gets label p.
std::string encode(const SearchState& st, const std::vector<Vertex>& at_position)
{
    const std::size_t n = st.n;
    std::vector<bool> bits;
    std::string s;
    if (st.directed) {
        s = "&" + order_prefix(n);
        bits.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                bits.push_back((st.out[at_position[i]] & bit(at_position[j])) != 0);
            }
        }
    } else {
        s = order_prefix(n);
        bits.reserve(n * (n > 0 ? n - 1 : 0) / 2);
        for (std::size_t j = 1; j < n; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                bits.push_back((st.out[at_position[i]] & bit(at_position[j])) != 0);
            }
        }
    }
    append_bits(s, bits);
    return s;
}

// Colors are dense ranks 0..k-1; the result is the coarsest equitable
// refinement, with cells ordered by an isomorphism-invariant signature.
std::vector<int> refine(const SearchState& st, std::vector<int> colors)
{
    const std::size_t n = st.n;
    std::size_t cells = static_cast<std::size_t>(*std::max_element(colors.begin(), colors.end())) + 1;
    while (true) {
        std::vector<std::vector<int>> signature(n);
        for (Vertex v = 0; v < n; ++v) {
            auto& sig = signature[v];
            sig.push_back(colors[v]);
            std::vector<int> outs;
            std::vector<int> ins;
            for (Mask m = st.out[v]; m; m &= m - 1) outs.push_back(colors[std::countr_zero(m)]);
            for (Mask m = st.in[v]; m; m &= m - 1) ins.push_back(colors[std::countr_zero(m)]);
            std::sort(outs.begin(), outs.end());
            std::sort(ins.begin(), ins.end());
            sig.push_back(static_cast<int>(outs.size()));
            sig.insert(sig.end(), outs.begin(), outs.end());
            sig.push_back(-1);
            sig.insert(sig.end(), ins.begin(), ins.end());
        }
        std::vector<std::vector<int>> distinct = signature;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (Vertex v = 0; v < n; ++v) {
            colors[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), signature[v]) -
                                         distinct.begin());
        }
        if (distinct.size() == cells) {
            return colors;
        }
        cells = distinct.size();
    }
}

bool twins(const SearchState& st, Vertex u, Vertex v)
{
    const Mask mu = ~bit(v);
    const Mask mv = ~bit(u);
    return (st.out[u] & mu) == (st.out[v] & mv) && (st.in[u] & mu) == (st.in[v] & mv) &&
           ((st.out[u] >> v) & 1) == ((st.out[v] >> u) & 1);
}

void search(SearchState& st, std::vector<int> colors)
{
    colors = refine(st, std::move(colors));
    const std::size_t n = st.n;
    std::vector<std::size_t> count(n, 0);
    for (int c : colors) ++count[static_cast<std::size_t>(c)];

    int target = -1;
    for (std::size_t c = 0; c < n; ++c) {
        if (count[c] > 1) {
            target = static_cast<int>(c);
            break;
        }
    }
    if (target < 0) {
        std::vector<Vertex> at_position(n);
        for (Vertex v = 0; v < n; ++v) at_position[static_cast<std::size_t>(colors[v])] = v;
        std::string enc = encode(st, at_position);
        if (st.best.empty() || enc < st.best) {
            st.best = std::move(enc);
            st.best_labels.assign(colors.begin(), colors.end());
        }
        return;
    }

    std::vector<Vertex> representatives;
    for (Vertex v = 0; v < n; ++v) {
        if (colors[v] != target) continue;
        bool pruned = std::any_of(representatives.begin(), representatives.end(),
                                  [&](Vertex w) { return twins(st, v, w); });
        if (pruned) continue;
        representatives.push_back(v);

        std::vector<int> child(n);
        for (Vertex u = 0; u < n; ++u) {
            child[u] = 2 * colors[u] + ((colors[u] == target && u != v) ? 1 : 0);
        }
        std::vector<int> ranks = child;
        std::sort(ranks.begin(), ranks.end());
        ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
        for (auto& c : child) {
            c = static_cast<int>(std::lower_bound(ranks.begin(), ranks.end(), c) - ranks.begin());
        }
        search(st, std::move(child));
    }
}

CanonicalForm run(std::size_t n, bool directed, std::vector<Mask> out)
{
    if (n > 64) {
        throw std::invalid_argument("canonical_form supports at most 64 vertices");
    }
    SearchState st;
    st.n = n;
    st.directed = directed;
    st.in.assign(n, 0);
    for (Vertex u = 0; u < n; ++u) {
        for (Mask m = out[u]; m; m &= m - 1) st.in[std::countr_zero(m)] |= bit(u);
    }
    st.out = std::move(out);
    if (n == 0) {
        return {directed ? "&" + order_prefix(0) : order_prefix(0), {}};
    }
    search(st, std::vector<int>(n, 0));
    CanonicalForm result;
    result.encoding = std::move(st.best);
    result.relabeling.assign(st.best_labels.begin(), st.best_labels.end());
    return result;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g)
{
    return run(g.order(), false, adjacency_masks(g));
}

CanonicalForm canonical_form(const Digraph& d)
{
    return run(d.order(), true, out_masks(d));
}

Graph canonical_graph(const Graph& g)
{
    return relabel(g, canonical_form(g).relabeling);
}

Digraph canonical_digraph(const Digraph& d)
{
    return relabel(d, canonical_form(d).relabeling);
}

std::vector<Graph> enumerate_graphs(std::size_t n)
{
    if (n > kMaxEnumeratedGraphOrder) {
        throw std::out_of_range("exhaustive graph enumeration is limited to n <= 7");
    }
    std::map<std::string, Graph> level;
    level.emplace(order_prefix(0), Graph(0));
    for (std::size_t k = 1; k <= n; ++k) {
        std::map<std::string, Graph> next;
        for (const auto& [key, g] : level) {
            const auto base = g.edges();
            for (Mask nbrs = 0; nbrs < (Mask{1} << (k - 1)); ++nbrs) {
                auto edges = base;
                for (Vertex u = 0; u + 1 < k; ++u) {
                    if (nbrs & bit(u)) edges.emplace_back(u, static_cast<Vertex>(k - 1));
                }
                Graph h(k, edges);
                auto form = canonical_form(h);
                if (!next.count(form.encoding)) {
                    next.emplace(form.encoding, relabel(h, form.relabeling));
                }
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> result;
    result.reserve(level.size());
    for (auto& [key, g] : level) result.push_back(std::move(g));
    return result;
}

std::vector<Graph> enumerate_connected_graphs(std::size_t max_n)
{
    if (max_n > kMaxEnumeratedGraphOrder) {
        throw std::out_of_range("exhaustive connected-graph enumeration is limited to n <= 7");
    }
    std::vector<Graph> result;
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (auto& g : enumerate_graphs(n)) {
            if (is_connected(g)) result.push_back(std::move(g));
        }
    }
    return result;
}

std::vector<Digraph> enumerate_digraphs(std::size_t max_n)
{
    if (max_n > kMaxEnumeratedDigraphOrder) {
        throw std::out_of_range("exhaustive digraph enumeration is limited to n <= 4");
    }
    std::vector<Digraph> result;
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::vector<Edge> pairs;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        std::map<std::string, Digraph> classes;
        std::size_t total = 1;
        for (std::size_t p = 0; p < pairs.size(); ++p) total *= 4;
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<Edge> arcs;
            std::size_t c = code;
            for (auto [i, j] : pairs) {
                const std::size_t state = c % 4;
                c /= 4;
                if (state & 1) arcs.emplace_back(i, j);
                if (state & 2) arcs.emplace_back(j, i);
            }
            Digraph d(n, arcs);
            auto form = canonical_form(d);
            if (!classes.count(form.encoding)) {
                classes.emplace(form.encoding, relabel(d, form.relabeling));
            }
        }
        for (auto& [key, d] : classes) result.push_back(std::move(d));
    }
    return result;
}

}  // namespace corank
