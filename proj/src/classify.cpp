#include "corank/classify.hpp"

#include <functional>

#include "corank/induced.hpp"
#include "corank/minrank.hpp"
#include "corank/named_graphs.hpp"

namespace corank {

namespace {

// Arc u->v is present in Lambda exactly for these part pairs (u != v).
bool lambda_arc(LambdaPart a, LambdaPart b)
{
    using P = LambdaPart;
    return (a == P::T && (b == P::K || b == P::TPrime)) || (a == P::K && (b == P::K || b == P::TPrime));
}

}  // namespace

std::optional<LambdaPartition> is_lambda(const Digraph& d)
{
    const std::size_t n = d.order();
    std::vector<LambdaPart> part(n);
    std::function<bool(std::size_t)> assign = [&](std::size_t v) {
        if (v == n) return true;
        for (int k = 0; k < 3; ++k) {
            part[v] = static_cast<LambdaPart>(k);
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u) {
                ok = d.has_arc(static_cast<Vertex>(u), static_cast<Vertex>(v)) == lambda_arc(part[u], part[v]) &&
                     d.has_arc(static_cast<Vertex>(v), static_cast<Vertex>(u)) == lambda_arc(part[v], part[u]);
            }
            if (ok && assign(v + 1)) return true;
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;
    LambdaPartition out;
    out.part = part;
    for (auto p : part) {
        if (p == LambdaPart::T) ++out.n1;
        else if (p == LambdaPart::K) ++out.n2;
        else ++out.n3;
    }
    return out;
}

std::optional<LambdaPartition> is_lambda_up_to_isolated(const Digraph& d)
{
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < d.order(); ++v)
        if (!d.out_neighbors(v).empty() || !d.in_neighbors(v).empty()) keep.push_back(v);
    return is_lambda(induced_subgraph(d, keep));
}

IntMatrix lambda_block_matrix(const LambdaPartition& p)
{
    const std::size_t n = p.part.size();
    IntMatrix m(n, n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            m(u, v) = (p.part[u] != LambdaPart::TPrime && p.part[v] != LambdaPart::T) ? 1 : 0;
    return m;
}

bool matches_pattern(const Digraph& d, const IntMatrix& m)
{
    if (m.rows != d.order() || m.cols != d.order()) return false;
    for (Vertex u = 0; u < d.order(); ++u)
        for (Vertex v = 0; v < d.order(); ++v)
            if (u != v && (m(u, v) != 0) != d.has_arc(u, v)) return false;
    return true;
}

bool matches_pattern(const Graph& g, const IntMatrix& m)
{
    if (m.rows != g.order() || m.cols != g.order()) return false;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v) {
            if (m(u, v) != m(v, u)) return false;
            if (u != v && (m(u, v) != 0) != g.adjacent(u, v)) return false;
        }
    return true;
}

std::optional<IntMatrix> rank_one_witness(const Digraph& d)
{
    const std::size_t n = d.order();
    std::vector<char> has_out(n, 0), has_in(n, 0);
    for (auto [u, v] : d.arcs()) {
        has_out[u] = 1;
        has_in[v] = 1;
    }
    IntMatrix m(n, n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) m(u, v) = has_out[u] && has_in[v] ? 1 : 0;
    if (!matches_pattern(d, m)) return std::nullopt;
    return m;
}

std::optional<IntMatrix> rank_one_witness(const Graph& g)
{
    const std::size_t n = g.order();
    IntMatrix m(n, n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) m(u, v) = g.degree(u) > 0 && g.degree(v) > 0 ? 1 : 0;
    if (!matches_pattern(g, m)) return std::nullopt;
    return m;
}

namespace {

void fill_common(EquivalenceReport& r, const Digraph& d, const CriticalIdealConfig& config)
{
    const auto zf = zero_forcing_number(d);
    r.zero_forcing = zf.witness;
    r.mz = d.order() - zf.z;
    r.mz_le_1 = r.mz <= 1;
    const auto gz = gamma(d, Domain::integers(), config);
    const auto gq = gamma(d, Domain::rationals(), config);
    r.gamma_z = gz.value;
    r.gamma_q = gq.value;
    r.gamma_z_le_1 = gz.upper <= 1;
    r.gamma_q_le_1 = gq.upper <= 1;
    if (!gz.value || !gq.value) r.note = "gamma undecided; upper bounds used";
    if (r.rank_one) r.mr_le_1 = exact_rank(*r.rank_one).rank <= 1;
}

}  // namespace

EquivalenceReport classify_rank1_graph(const Graph& g, const CriticalIdealConfig& config)
{
    if (!is_connected(g)) throw std::invalid_argument("graph is not connected");
    EquivalenceReport r;
    r.n = g.order();
    r.structural = g.size() == g.order() * (g.order() - 1) / 2;
    if (auto hit = contains_induced(g, named::path(3))) r.forbidden = ForbiddenHit{"P3", *hit};
    r.pattern_free = !r.forbidden;
    r.rank_one = rank_one_witness(g);
    fill_common(r, to_digraph(g), config);
    r.agreement = r.structural == r.pattern_free && r.structural == r.mr_le_1 && r.structural == r.mz_le_1 &&
                  r.structural == r.gamma_z_le_1 && r.structural == r.gamma_q_le_1;
    return r;
}

EquivalenceReport classify_digraph1(const Digraph& d, const CriticalIdealConfig& config)
{
    if (d.order() > kMaxClassifyDigraphOrder) throw std::out_of_range("digraph classification needs n <= 6");
    EquivalenceReport r;
    r.n = d.order();
    r.lambda = is_lambda(d);
    r.structural = r.lambda.has_value();
    r.lambda_up_to_isolated = is_lambda_up_to_isolated(d).has_value();
    r.weakly_connected = is_weakly_connected(d);
    for (const auto& f : named::forbidden_family()) {
        if (auto hit = contains_induced(d, f.digraph)) {
            r.forbidden = ForbiddenHit{f.name, *hit};
            break;
        }
    }
    r.pattern_free = !r.forbidden;
    r.rank_one = rank_one_witness(d);
    if (r.lambda) {
        const auto block = lambda_block_matrix(*r.lambda);
        if (!matches_pattern(d, block) || exact_rank(block).rank > 1)
            throw std::logic_error("Lambda block matrix does not fit the digraph");
        r.rank_one = block;
    }
    fill_common(r, d, config);
    const bool base = r.mz_le_1;
    const bool rest = base == r.mr_le_1 && base == r.gamma_z_le_1 && base == r.gamma_q_le_1 &&
                      base == r.lambda_up_to_isolated;
    r.agreement = rest && (!r.weakly_connected || (base == r.pattern_free && base == r.structural));
    return r;
}

Mr2Check check_mr2_corollary(const Graph& g, const CriticalIdealConfig& config)
{
    if (g.order() > kExactMinRankOrder) throw std::out_of_range("mr is exact only for n <= 7");
    Mr2Check c;
    c.mr = mr_small(g).lower;
    if (c.mr > 2) {
        c.note = "not applicable: mr > 2";
        return c;
    }
    c.applicable = true;
    const auto gq = gamma(g, Domain::rationals(), config);
    c.gamma_q = gq.value;
    c.holds = c.mr <= gq.lower;
    if (!gq.value) c.note = "gamma_Q undecided; lower bound used";
    return c;
}

}  // namespace corank
