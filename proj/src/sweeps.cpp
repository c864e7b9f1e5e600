#include "corank/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "corank/canonical.hpp"
#include "corank/classify.hpp"
#include "corank/graph_io.hpp"
#include "corank/minrank.hpp"
#include "corank/named_graphs.hpp"
#include "corank/parallel.hpp"
#include "corank/report.hpp"
#include "corank/trees.hpp"
#include "corank/zero_forcing.hpp"

namespace corank {

using nlohmann::json;

json SweepResult::to_json() const
{
    return {{"sweep", name}, {"passed", passed}, {"checked", checked}, {"failures", failures}, {"summary", summary}};
}

const std::vector<std::string>& sweep_names()
{
    static const std::vector<std::string> names{"thm2.1",  "lemma-monotone", "thm-trees",   "prop-cycles",       "prop-petersen",
                                                "prop-linegraphs", "thm-rank1", "thm-digraph1", "three-exceptional"};
    return names;
}

bool scan_order_less(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b)
{
    auto norm = [](const std::vector<std::int64_t>& v) {
        std::int64_t m = 0;
        for (auto x : v) m = std::max(m, std::abs(x));
        return m;
    };
    const auto na = norm(a), nb = norm(b);
    if (na != nb) return na < nb;
    return a < b;
}

std::size_t numeric_rank(std::vector<double> m, std::size_t n, double tolerance)
{
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < n; ++c) {
        std::size_t piv = rank;
        for (std::size_t r = rank; r < n; ++r)
            if (std::abs(m[r * n + c]) > std::abs(m[piv * n + c])) piv = r;
        if (std::abs(m[piv * n + c]) <= tolerance) continue;
        for (std::size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[rank * n + j]);
        for (std::size_t r = rank + 1; r < n; ++r) {
            const double f = m[r * n + c] / m[rank * n + c];
            for (std::size_t j = c; j < n; ++j) m[r * n + j] -= f * m[rank * n + j];
        }
        ++rank;
    }
    return rank;
}

namespace {

class Recorder {
public:
    explicit Recorder(SweepResult& r) : r_(r) {}

    void fail(json payload)
    {
        std::lock_guard lock(mutex_);
        r_.passed = false;
        r_.failures.push_back(std::move(payload));
    }

    void count(std::size_t k = 1)
    {
        std::lock_guard lock(mutex_);
        r_.checked += k;
    }

private:
    SweepResult& r_;
    std::mutex mutex_;
};

std::string id(const Graph& g) { return write_graph6(g); }
std::string id(const Digraph& d) { return write_digraph6(d); }

json gamma_summary(const GammaResult& g)
{
    return {{"lower", g.lower}, {"upper", g.upper}};
}

Digraph random_digraph(std::mt19937_64& rng, std::size_t n)
{
    std::vector<Edge> arcs;
    std::bernoulli_distribution coin(0.5);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && coin(rng)) arcs.emplace_back(u, v);
    return Digraph(n, arcs);
}

Digraph as_digraph(const Graph& g) { return to_digraph(g); }
Digraph as_digraph(const Digraph& d) { return d; }

template <class G>
void check_certificate(const G& g, const SweepOptions& o, Recorder& rec)
{
    const auto zf = zero_forcing_number(g);
    const std::size_t m = g.order() - zf.z;
    if (!is_valid_record(as_digraph(g), zf.witness)) rec.fail({{"graph", id(g)}, {"problem", "record does not replay"}});
    try {
        const auto cm = certificate_minor(g, zf.witness);
        bool triangular = cm.size() == m;
        for (std::size_t r = 0; r < cm.size(); ++r)
            for (std::size_t c = r; c < cm.size(); ++c) {
                const auto& e = cm(r, c);
                if (r == c) triangular = triangular && !e.is_variable && e.constant == -1;
                else triangular = triangular && !e.is_variable && e.constant == 0;
            }
        const int det = cm.determinant();
        if (!triangular || (det != 1 && det != -1))
            rec.fail({{"graph", id(g)}, {"problem", "certificate minor not triangular with unit determinant"}});
    } catch (const CertificateError& e) {
        rec.fail({{"graph", id(g)}, {"problem", e.what()}});
    }
    for (const auto& dom : {Domain::integers(), Domain::rationals()}) {
        const auto gm = gamma(g, dom, o.config, o.cache);
        if (m > gm.lower)
            rec.fail({{"graph", id(g)}, {"domain", dom.name()}, {"mz", m}, {"gamma", gamma_summary(gm)}});
    }
    rec.count();
}

SweepResult sweep_thm21(const SweepOptions& o)
{
    SweepResult r;
    Recorder rec(r);
    const auto graphs = enumerate_connected_graphs(6);
    parallel_for(graphs.size(), o.jobs, [&](std::size_t k) { check_certificate(graphs[k], o, rec); });
    std::mt19937_64 rng(o.seed);
    std::vector<Digraph> digraphs;
    std::uniform_int_distribution<std::size_t> order(1, 5);
    for (int k = 0; k < 300; ++k) digraphs.push_back(random_digraph(rng, order(rng)));
    parallel_for(digraphs.size(), o.jobs, [&](std::size_t k) { check_certificate(digraphs[k], o, rec); });
    r.summary = {{"graphs", graphs.size()}, {"random_digraphs", digraphs.size()}};
    return r;
}

struct Params {
    std::size_t mz = 0;
    GammaResult z;
    GammaResult q;
};

template <class G>
void monotone_family(const std::vector<G>& family, const SweepOptions& o, Recorder& rec, json& summary,
                     const std::string& label)
{
    std::map<std::string, Params> params;
    std::vector<Params> computed(family.size());
    parallel_for(family.size(), o.jobs, [&](std::size_t k) {
        computed[k].mz = mz(family[k]);
        computed[k].z = gamma(family[k], Domain::integers(), o.config, o.cache);
        computed[k].q = gamma(family[k], Domain::rationals(), o.config, o.cache);
    });
    for (std::size_t k = 0; k < family.size(); ++k) params[canonical_form(family[k]).encoding] = computed[k];

    std::size_t pairs = 0, nesting = 0;
    for (std::size_t k = 0; k < family.size(); ++k) {
        const auto& g = family[k];
        const auto& pg = computed[k];
        if (g.order() <= 5) {
            for (const auto* gm : {&pg.z, &pg.q}) {
                bool seen_nontrivial = false;
                for (std::size_t i = 1; i <= g.order(); ++i) {
                    const auto dec = ideal_trivial(g, i, gm->domain, o.config, o.cache);
                    if (dec.decision == Decision::Undecided) continue;
                    ++nesting;
                    const bool trivial = dec.decision == Decision::Trivial;
                    if (!trivial) seen_nontrivial = true;
                    if (trivial && seen_nontrivial)
                        rec.fail({{"graph", id(g)}, {"domain", gm->domain.name()}, {"i", i}, {"problem", "triviality not nested"}});
                    if ((trivial && i > gm->upper) || (!trivial && i <= gm->lower))
                        rec.fail({{"graph", id(g)}, {"domain", gm->domain.name()}, {"i", i}, {"problem", "decision contradicts gamma"}});
                }
            }
        }
        if (g.order() < 2) continue;
        for (Vertex v = 0; v < g.order(); ++v) {
            std::vector<Vertex> keep;
            for (Vertex w = 0; w < g.order(); ++w)
                if (w != v) keep.push_back(w);
            const auto h = induced_subgraph(g, keep);
            const auto& ph = params.at(canonical_form(h).encoding);
            ++pairs;
            if (ph.mz > pg.mz) rec.fail({{"graph", id(g)}, {"deleted", v}, {"problem", "mz increased"}});
            if (ph.z.lower > pg.z.upper) rec.fail({{"graph", id(g)}, {"deleted", v}, {"problem", "gamma_Z increased"}});
            if (ph.q.lower > pg.q.upper) rec.fail({{"graph", id(g)}, {"deleted", v}, {"problem", "gamma_Q increased"}});
        }
        rec.count();
    }
    summary[label] = {{"objects", family.size()}, {"vertex_deletions", pairs}, {"indices", nesting}};
}

SweepResult sweep_monotone(const SweepOptions& o)
{
    SweepResult r;
    Recorder rec(r);
    std::vector<Graph> graphs;
    for (std::size_t n = 1; n <= 6; ++n)
        for (auto& g : enumerate_graphs(n)) graphs.push_back(std::move(g));
    monotone_family(graphs, o, rec, r.summary, "graphs");
    monotone_family(enumerate_digraphs(4), o, rec, r.summary, "digraphs");
    return r;
}

SweepResult sweep_trees(const SweepOptions& o)
{
    SweepResult r;
    Recorder rec(r);
    std::vector<Graph> trees;
    for (std::size_t n = 1; n <= 10; ++n)
        for (auto& t : named::all_trees(n)) trees.push_back(std::move(t));
    parallel_for(trees.size(), o.jobs, [&](std::size_t k) {
        try {
            tree_suite(trees[k]);
        } catch (const TheoremViolation& e) {
            rec.fail({{"graph", id(trees[k])}, {"problem", e.what()}});
        }
        rec.count();
    });
    r.summary = {{"trees", trees.size()}};
    return r;
}

SweepResult sweep_cycles(const SweepOptions& o)
{
    SweepResult r;
    Recorder rec(r);
    const IntegerBox box{-2, 2};
    for (std::size_t n = 3; n <= 10; ++n) {
        const Graph c = named::cycle(n);
        const std::size_t m = mz(c);
        if (m != n - 2) rec.fail({{"n", n}, {"problem", "mz(C_n) != n - 2"}, {"mz", m}});
        const auto scan = min_rank_scan(to_digraph(c), box, 0, n - 2, o.config.max_box_points);
        if (!scan.best || scan.best->rank != n - 2) {
            rec.fail({{"n", n}, {"problem", "no box point of rank n - 2"}});
        } else {
            r.summary["C" + std::to_string(n)] = scan.best->point;
            if (n == 5) {
                const std::vector<std::int64_t> printed{0, -1, 1, 1, 2};
                if (scan_order_less(printed, scan.best->point))
                    rec.fail({{"n", 5}, {"problem", "printed witness precedes the scan witness"}});
                if (exact_rank(evaluate_laplacian(to_digraph(c), printed)).rank != 3)
                    rec.fail({{"n", 5}, {"problem", "printed witness does not have rank 3"}});
            }
        }
        rec.count();
    }
    return r;
}

SweepResult sweep_petersen(const SweepOptions& o)
{
    SweepResult r;
    Recorder rec(r);
    const Graph p = named::petersen();
    const auto zf = zero_forcing_number(p);
    const std::vector<std::int64_t> ones(10, 1);
    const auto rank = exact_rank(evaluate_laplacian(to_digraph(p), ones)).rank;
    const auto gz = gamma(p, Domain::integers(), o.config);
    const auto gq = gamma(p, Domain::rationals(), o.config);
    r.summary = {{"Z", zf.z}, {"rank_at_ones", rank}, {"gamma_Z", gamma_summary(gz)}, {"gamma_Q", gamma_summary(gq)},
                 {"groebner_runs", gz.groebner_runs + gq.groebner_runs}};
    if (zf.z != 5) rec.fail({{"problem", "Z != 5"}});
    if (rank != 5) rec.fail({{"problem", "rank L(P, 1) != 5"}});
    if (gz.value != std::optional<std::size_t>(5) || gq.value != std::optional<std::size_t>(5))
        rec.fail({{"problem", "gamma != 5"}});
    if (gz.groebner_runs + gq.groebner_runs != 0) rec.fail({{"problem", "Groebner run needed"}});
    rec.count();
    return r;
}

SweepResult sweep_linegraphs(const SweepOptions& o)
{
    SweepResult r;
    Recorder rec(r);
    json logged = json::array();
    std::map<std::string, json> found;
    for (std::size_t n = 4; n <= 6; ++n) {
        for (const auto& t : named::all_trees(n)) {
            const Graph h = line_graph(t);
            const std::size_t m = mz(h);
            bool ok = false;
            for (std::int64_t k = 1; k <= 3 && !ok; ++k) {
                const auto scan = min_rank_scan(to_digraph(h), IntegerBox{-k, k}, 0, m, o.config.max_box_points);
                if (scan.best && scan.best->rank < m)
                    rec.fail({{"tree", id(t)}, {"problem", "rank below mz"}, {"point", scan.best->point}});
                if (scan.best && scan.best->rank <= m) {
                    ok = true;
                    found[id(t)] = {{"radius", k}, {"point", scan.best->point}, {"mz", m}};
                }
            }
            if (!ok) {
                const auto gz = gamma(h, Domain::integers(), o.config, o.cache);
                logged.push_back({{"tree", id(t)}, {"mz", m}, {"gamma_Z", gamma_summary(gz)}});
                if (gz.lower > m) rec.fail({{"tree", id(t)}, {"problem", "gamma_Z exceeds mz"}});
            }
            rec.count();
        }
    }
    r.summary = {{"witnesses", found}, {"needing_larger_radius", logged}};
    return r;
}

SweepResult sweep_rank1(const SweepOptions& o)
{
    SweepResult r;
    Recorder rec(r);
    const auto graphs = enumerate_connected_graphs(6);
    std::size_t complete = 0, corollary_applicable = 0;
    std::mutex m;
    parallel_for(graphs.size(), o.jobs, [&](std::size_t k) {
        const auto rep = classify_rank1_graph(graphs[k], o.config);
        if (!rep.agreement) rec.fail({{"graph", id(graphs[k])}, {"report", to_json(rep)}});
        const auto c = check_mr2_corollary(graphs[k], o.config);
        if (!c.holds) rec.fail({{"graph", id(graphs[k])}, {"problem", "mr <= 2 but mr > gamma_Q"}});
        std::lock_guard lock(m);
        complete += rep.structural;
        corollary_applicable += c.applicable;
        rec.count();
    });
    r.summary = {{"graphs", graphs.size()}, {"complete", complete}, {"mr_le_2", corollary_applicable}};
    return r;
}

SweepResult sweep_digraph1(const SweepOptions& o)
{
    SweepResult r;
    Recorder rec(r);
    const auto digraphs = enumerate_digraphs(4);
    std::size_t positive = 0, disconnected = 0, disconnected_lambda_differs = 0, disconnected_free_differs = 0;
    std::mutex m;
    parallel_for(digraphs.size(), o.jobs, [&](std::size_t k) {
        const auto rep = classify_digraph1(digraphs[k], o.config);
        if (!rep.agreement) rec.fail({{"digraph", id(digraphs[k])}, {"report", to_json(rep)}});
        std::lock_guard lock(m);
        positive += rep.mz_le_1;
        if (!rep.weakly_connected) {
            ++disconnected;
            disconnected_lambda_differs += rep.mz_le_1 != rep.structural;
            disconnected_free_differs += rep.mz_le_1 != rep.pattern_free;
        }
        rec.count();
    });
    for (const auto& f : named::forbidden_family()) {
        const auto zf = zero_forcing_number(f.digraph);
        const std::size_t m = f.digraph.order() - zf.z;
        if (m != 2) rec.fail({{"digraph", f.name}, {"problem", "mz != 2"}, {"mz", m}});
        if (f.marked.size() != f.digraph.order() - 2 || !is_zero_forcing_set(f.digraph, f.marked))
            rec.fail({{"digraph", f.name}, {"problem", "marked set is not a zero forcing set of size n - 2"}});
        rec.count();
    }
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> part(0, 8);
    std::size_t sampled = 0;
    while (sampled < 50) {
        const std::size_t n1 = part(rng), n2 = part(rng), n3 = part(rng);
        const std::size_t n = n1 + n2 + n3;
        if (n == 0 || n > 8) continue;
        ++sampled;
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        const Digraph d = relabel(named::lambda_digraph(n1, n2, n3), perm);
        const json where{{"lambda", {n1, n2, n3}}, {"digraph", id(d)}};
        if (mz(d) > 1) rec.fail({{"case", where}, {"problem", "mz > 1"}});
        const auto p = is_lambda(d);
        if (!p) {
            rec.fail({{"case", where}, {"problem", "not recognized"}});
            continue;
        }
        const auto block = lambda_block_matrix(*p);
        if (!matches_pattern(d, block) || exact_rank(block).rank > 1)
            rec.fail({{"case", where}, {"problem", "block matrix is not a rank-1 pattern witness"}});
        rec.count();
    }
    r.summary = {{"digraphs", digraphs.size()},
                 {"mz_le_1", positive},
                 {"disconnected", disconnected},
                 {"disconnected_lambda_differs", disconnected_lambda_differs},
                 {"disconnected_f_free_differs", disconnected_free_differs},
                 {"forbidden", named::forbidden_family().size()},
                 {"lambda_samples", sampled}};
    return r;
}

// Solves the printed linear relations x_k = a + b * x5 and substitutes both
// roots of the quadratic in x5.
std::vector<std::vector<double>> printed_points(const std::vector<std::string>& basis)
{
    const PolynomialRing<RationalField> qr(RationalField{}, 6);
    std::vector<std::pair<double, double>> affine(6, {0.0, 0.0});
    affine[5] = {0.0, 1.0};
    double qa = 0, qb = 0, qc = 0;
    for (const auto& s : basis) {
        const auto f = qr.parse(s);
        if (f.degree() == 2) {
            for (const auto& t : f.terms) {
                const double c = t.coefficient.get_d();
                if (t.monomial.degree == 2) qa = c;
                else if (t.monomial.degree == 1) qb = c;
                else qc = c;
            }
            continue;
        }
        std::size_t lead = 6;
        double a = 0, b = 0, lc = 0;
        for (const auto& t : f.terms) {
            const double c = t.coefficient.get_d();
            if (t.monomial.is_one()) {
                a = c;
                continue;
            }
            std::size_t v = 0;
            while (t.monomial.exp[v] == 0) ++v;
            if (v == 5) b = c;
            else {
                lead = v;
                lc = c;
            }
        }
        if (lead < 5) affine[lead] = {-a / lc, -b / lc};
    }
    std::vector<std::vector<double>> points;
    const double disc = std::sqrt(qb * qb - 4 * qa * qc);
    for (double root : {(-qb + disc) / (2 * qa), (-qb - disc) / (2 * qa)}) {
        std::vector<double> p(6);
        for (std::size_t v = 0; v < 6; ++v) p[v] = affine[v].first + affine[v].second * root;
        points.push_back(p);
    }
    return points;
}

json check_printed_roots(const Graph& g, const std::vector<std::string>& printed, Recorder& rec, const std::string& name)
{
    const PolynomialRing<RationalField> qr(RationalField{}, 6);
    std::vector<Polynomial<RationalField>> j;
    for (const auto& s : printed) j.push_back(qr.parse(s));
    const auto gb = buchberger(qr, j);
    const auto minors = minor_generators(SymbolicMatrix(g), 4);
    bool reduces = gb.complete() && !gb.trivial();
    for (const auto& m : minors.generators) {
        const auto f = qr.convert(m, [](const mpz_class& v) { return mpq_class(v); });
        if (!normal_form(qr, f, std::span<const Polynomial<RationalField>>(gb.basis.generators)).is_zero()) reduces = false;
    }
    if (!reduces) rec.fail({{"graph", name}, {"problem", "4-minors do not reduce to 0 modulo the printed basis"}});
    json ranks = json::array();
    const Digraph d = to_digraph(g);
    for (const auto& p : printed_points(printed)) {
        std::vector<double> m(36, 0.0);
        for (std::size_t v = 0; v < 6; ++v) m[v * 6 + v] = p[v];
        for (auto [u, v] : d.arcs()) m[u * 6 + v] -= 1.0;
        const auto rank = numeric_rank(m, 6);
        ranks.push_back({{"x", p}, {"rank", rank}});
        if (rank != 3) rec.fail({{"graph", name}, {"problem", "rank at printed root != 3"}, {"x", p}});
    }
    rec.count();
    return {{"symbolic", reduces}, {"numeric", ranks}};
}

SweepResult sweep_exceptional(const SweepOptions& o)
{
    SweepResult r;
    Recorder rec(r);
    const auto graphs = enumerate_connected_graphs(6);
    std::vector<char> missing(graphs.size(), 0);
    parallel_for(graphs.size(), o.jobs, [&](std::size_t k) {
        const auto gq = gamma(graphs[k], Domain::rationals(), o.config, o.cache);
        if (!gq.value) {
            rec.fail({{"graph", id(graphs[k])}, {"problem", "gamma_Q undecided"}});
            return;
        }
        const auto s = variety_box_search(graphs[k], *gq.value, IntegerBox{-2, 2}, Domain::rationals());
        missing[k] = !s.point;
        rec.count();
    });
    std::set<std::string> exceptional, expected;
    for (std::size_t k = 0; k < graphs.size(); ++k)
        if (missing[k]) exceptional.insert(canonical_form(graphs[k]).encoding);
    for (const auto& g : {named::graph_a(), named::graph_b(), named::graph_c()}) expected.insert(canonical_form(g).encoding);
    if (exceptional != expected)
        rec.fail({{"problem", "exceptional set differs"}, {"found", exceptional}, {"expected", expected}});
    r.summary["exceptional"] = exceptional;
    r.summary["G_B"] = check_printed_roots(named::graph_b(),
                                          {"x0 + x5 - 1", "x1 + x5 - 1", "x2 - x5", "x3 - x5", "x4 + x5 - 1", "x5^2 - x5 - 1"},
                                          rec, "G_B");
    r.summary["G_C"] = check_printed_roots(named::graph_c(),
                                          {"x0 + x5 + 3", "x1 - x5", "x2 - x5", "x3 - x5", "x4 - x5", "x5^2 + x5 - 1"},
                                          rec, "G_C");
    return r;
}

}  // namespace

SweepResult run_sweep(const std::string& name, const SweepOptions& options)
{
    static const std::map<std::string, std::function<SweepResult(const SweepOptions&)>> table{
        {"thm2.1", sweep_thm21},          {"lemma-monotone", sweep_monotone},   {"thm-trees", sweep_trees},
        {"prop-cycles", sweep_cycles},    {"prop-petersen", sweep_petersen},    {"prop-linegraphs", sweep_linegraphs},
        {"thm-rank1", sweep_rank1},       {"thm-digraph1", sweep_digraph1},     {"three-exceptional", sweep_exceptional}};
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown sweep: " + name);
    SweepResult r = it->second(options);
    r.name = name;
    return r;
}

}  // namespace corank
