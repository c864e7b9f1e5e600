// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "corank/appendix.hpp"
#include "corank/canonical.hpp"
#include "corank/critical_ideals.hpp"
#include "corank/graph_io.hpp"
#include "corank/groebner.hpp"
#include "corank/laplacian.hpp"
#include "corank/minrank.hpp"
#include "corank/named_graphs.hpp"
#include "corank/sweeps.hpp"
#include "corank/trees.hpp"
#include "corank/zero_forcing.hpp"
#include "support.hpp"

using namespace corank;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (ok) return;
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

using Clock = std::chrono::steady_clock;

void sweep_into(Outcome& o, const std::string& name, DecisionCache& cache)
{
    SweepOptions opt;
    opt.cache = &cache;
    const auto r = run_sweep(name, opt);
    o.require(r.passed, name + " failures: " + r.failures.dump());
}

Graph labeled_octahedron()
{
    const std::vector<Edge> missing{{0, 3}, {1, 5}, {2, 4}};
    return complement(Graph(6, missing));
}

Outcome criterion1(DecisionCache& cache)
{
    Outcome o;
    const auto run = reproduce_appendix({}, &cache, 1);
    o.require(run.graphs == 143, "graph count " + std::to_string(run.graphs));
    o.require(run.rows.size() == 21, "rows " + std::to_string(run.rows.size()));
    o.require(run.undecided.empty(), std::to_string(run.undecided.size()) + " undecided");
    o.require(run.diffs.empty(), std::to_string(run.diffs.size()) + " diffs");
    o.require(run.rows == golden_appendix(), "rows differ from the golden table");
    return o;
}

Outcome criterion2()
{
    Outcome o;
    const auto g = labeled_octahedron();
    const auto zf = zero_forcing_number(g);
    o.require(zf.z == 4, "Z != 4");
    o.require(mz(g) == 2, "mz != 2");
    o.require(mr_small(g).value() == std::optional<std::size_t>(2), "mr != 2");
    o.require(gamma(g, Domain::integers()).value == std::optional<std::size_t>(2), "gamma_Z != 2");
    o.require(gamma(g, Domain::rationals()).value == std::optional<std::size_t>(3), "gamma_Q != 3");
    const std::vector<std::string> printed{"x0", "x1", "x2", "x3", "x4", "x5", "2"};
    o.require(critical_ideal_equals(g, 3, Domain::integers(), printed) == std::optional<bool>(true),
              "I_3 over Z differs from <x0..x5, 2>");
    const std::vector<std::int64_t> zero(6, 0);
    const auto at_zero = evaluate_laplacian(to_digraph(g), zero);
    o.require(exact_rank(at_zero).rank == 3, "rank L(G, 0) != 3");
    // Every 4-minor vanishes at 0.
    bool all_zero = true;
    testing::for_each_subset(6, 4, [&](const std::vector<std::size_t>& rows) {
        testing::for_each_subset(6, 4, [&](const std::vector<std::size_t>& cols) {
            if (testing::laplace_det(at_zero, rows, cols) != 0) all_zero = false;
        });
    });
    o.require(all_zero, "a 4-minor is nonzero at 0");
    return o;
}

Outcome criterion5(DecisionCache& cache)
{
    Outcome o;
    sweep_into(o, "thm-trees", cache);
    std::size_t trees = 0;
    for (std::size_t n = 1; n <= 10; ++n)
        for (const auto& t : named::all_trees(n)) {
            ++trees;
            const auto p = tree_suite(t);
            o.require(p.P.count == testing::brute_path_cover(t), "P differs from oracle on " + write_graph6(t));
            o.require(static_cast<long>(p.Delta.value) == testing::brute_delta(t),
                      "Delta differs from oracle on " + write_graph6(t));
            o.require(p.nu2.count == testing::brute_two_matching(t), "nu2 differs from oracle on " + write_graph6(t));
            o.require(p.diagonal_rank == p.mz, "diagonal rank on " + write_graph6(t));
        }
    o.require(trees == 201, "tree count " + std::to_string(trees));

    // Delta on random relabeled paths and random spiders; per-vertex time at the
    // largest size must stay within 2x of the smallest.
    std::mt19937_64 rng(7);
    auto make = [&](std::size_t n, bool spider) {
        if (!spider) return relabel(named::path(n), testing::random_permutation(rng, n));
        std::vector<std::size_t> legs;
        std::size_t left = n - 1;
        std::uniform_int_distribution<std::size_t> len(1, 2000);
        while (left > 0) {
            legs.push_back(std::min(left, len(rng)));
            left -= legs.back();
        }
        return named::spider(legs);
    };
    const std::vector<std::size_t> sizes{12500, 25000, 50000, 100000};
    std::string ratios;
    for (bool spider : {false, true}) {
        std::vector<double> per_vertex;
        for (auto n : sizes) {
            const auto t = make(n, spider);
            double best = 1e300;
            for (int rep = 0; rep < 5; ++rep) {
                const auto start = Clock::now();
                const auto d = delta_parameter(t);
                const double s = std::chrono::duration<double>(Clock::now() - start).count();
                best = std::min(best, s);
                if (!spider) o.require(d.value == 1, "Delta(path) != 1");
            }
            per_vertex.push_back(best / static_cast<double>(n));
        }
        const auto [lo, hi] = std::minmax_element(per_vertex.begin(), per_vertex.end());
        const double ratio = *hi / *lo;
        const std::string label = spider ? "spider" : "path";
        o.require(ratio <= 2.0, label + " per-vertex time ratio " + std::to_string(ratio));
        ratios += (ratios.empty() ? "" : ", ") + label + " time ratio " + std::to_string(ratio).substr(0, 4);
    }
    if (o.pass) o.detail = std::to_string(trees) + " trees; " + ratios;
    return o;
}

Outcome criterion9()
{
    Outcome o;
    const auto g = named::complete_multipartite({3, 3, 3});
    const auto i2 = ideal_trivial(g, 2, Domain::integers());
    o.require(i2.decision == Decision::Trivial, "I_2 over Z not trivial");
    const auto cert = nontriviality_certificate(g, 3, Domain::integers());
    o.require(cert.has_value() && cert->prime != 0, "no mod-p point for I_3");
    if (cert) {
        const auto m = evaluate_laplacian(to_digraph(g), cert->point);
        o.require(rank_mod_p(m, cert->prime).rank <= 2, "certificate rank mod p > 2");
    }
    const auto gz = gamma(g, Domain::integers());
    o.require(gz.value == std::optional<std::size_t>(2), "gamma_Z != 2");
    o.require(gz.groebner_runs == 0, "Groebner run used");
    return o;
}

Outcome criterion10(DecisionCache& cache)
{
    Outcome o;
    std::mt19937_64 rng(10);
    const auto graphs = enumerate_connected_graphs(6);

    // Output bases of the first non-trivial critical ideals over Q and F_2.
    std::size_t bases = 0;
    for (const auto& g : enumerate_connected_graphs(5)) {
        const auto gq = gamma(g, Domain::rationals(), {}, &cache);
        if (!gq.value || *gq.value + 1 > g.order()) continue;
        const auto minors = minor_generators(SymbolicMatrix(g), *gq.value + 1);
        PolynomialRing<RationalField> q(RationalField{}, g.order());
        PolynomialRing<PrimeField> f2(PrimeField(2), g.order());
        std::vector<Polynomial<RationalField>> gens_q;
        std::vector<Polynomial<PrimeField>> gens_2;
        for (const auto& m : minors.generators) {
            gens_q.push_back(q.convert(m, [](const mpz_class& c) { return mpq_class(c); }));
            gens_2.push_back(f2.convert(m, [&](const mpz_class& c) { return f2.domain().from_integer(c); }));
        }
        GroebnerOptions tracked;
        tracked.track_cofactors = true;
        const auto rq = buchberger(q, gens_q, tracked);
        const auto r2 = buchberger(f2, gens_2, tracked);
        o.require(rq.complete() && r2.complete(), "budget hit on " + write_graph6(g));
        o.require(is_groebner_basis(q, rq.basis.generators), "S-pair not reducing over Q on " + write_graph6(g));
        o.require(is_groebner_basis(f2, r2.basis.generators), "S-pair not reducing over F_2 on " + write_graph6(g));
        o.require(verify_cofactors(q, gens_q, rq.basis), "cofactors over Q on " + write_graph6(g));
        o.require(verify_cofactors(f2, gens_2, r2.basis), "cofactors over F_2 on " + write_graph6(g));
        ++bases;
    }

    // Closure confluence.
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 3 + trial % 8;
        const auto d = testing::random_digraph(rng, n);
        std::bernoulli_distribution coin(0.35);
        std::vector<Vertex> seed;
        std::uint64_t blue = 0;
        for (Vertex v = 0; v < n; ++v)
            if (coin(rng)) {
                seed.push_back(v);
                blue |= std::uint64_t{1} << v;
            }
        const auto out = testing::brute_out(d);
        while (true) {
            std::vector<Vertex> targets;
            for (Vertex v = 0; v < n; ++v) {
                const std::uint64_t white = out[v] & ~blue;
                if ((blue >> v & 1) && white && !(white & (white - 1)))
                    targets.push_back(static_cast<Vertex>(__builtin_ctzll(white)));
            }
            if (targets.empty()) break;
            std::uniform_int_distribution<std::size_t> pick(0, targets.size() - 1);
            blue |= std::uint64_t{1} << targets[pick(rng)];
        }
        std::uint64_t mine = 0;
        for (auto v : closure(d, seed).blue) mine |= std::uint64_t{1} << v;
        o.require(mine == blue, "closure depends on force order");
    }

    // graph6 round trips.
    for (const auto& g : graphs) o.require(parse_graph6(write_graph6(g)) == g, "graph6 round trip");
    for (const auto& g : enumerate_graphs(7)) o.require(parse_graph6(write_graph6(g)) == g, "graph6 round trip n=7");
    for (const auto& d : enumerate_digraphs(4)) o.require(parse_digraph6(write_digraph6(d)) == d, "digraph6 round trip");

    // Isomorphism invariance of gamma.
    std::uniform_int_distribution<std::size_t> pick(0, graphs.size() - 1);
    for (int k = 0; k < 100; ++k) {
        const auto& g = graphs[pick(rng)];
        const auto h = relabel(g, testing::random_permutation(rng, g.order()));
        for (const auto& dom : {Domain::integers(), Domain::rationals()}) {
            const auto a = gamma(g, dom, {}, &cache);
            const auto b = gamma(h, dom);
            o.require(a.value == b.value && a.lower == b.lower && a.upper == b.upper,
                      "gamma changes under relabeling of " + write_graph6(g));
        }
    }

    // Nesting over all decided indices, decided independently per index.
    std::size_t decided = 0;
    for (const auto& g : graphs)
        for (const auto& dom : {Domain::integers(), Domain::rationals()}) {
            bool nontrivial_seen = false;
            for (std::size_t i = 1; i <= g.order(); ++i) {
                const auto dec = ideal_trivial(g, i, dom, {}, &cache);
                if (dec.decision == Decision::Undecided) continue;
                ++decided;
                if (dec.decision == Decision::NonTrivial) nontrivial_seen = true;
                else if (nontrivial_seen) o.require(false, "nesting broken on " + write_graph6(g));
            }
        }
    if (o.pass)
        o.detail = std::to_string(bases) + " bases, " + std::to_string(decided) + " decided indices";
    return o;
}

}  // namespace

int main()
{
    DecisionCache cache;
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"appendix reproduction", [&] { return criterion1(cache); }},
        {"complement of 3K2", [] { return criterion2(); }},
        {"three exceptional graphs",
         [&] {
             Outcome o;
             sweep_into(o, "three-exceptional", cache);
             return o;
         }},
        {"zero forcing certificate suite",
         [&] {
             Outcome o;
             sweep_into(o, "thm2.1", cache);
             return o;
         }},
        {"tree suite", [&] { return criterion5(cache); }},
        {"cycles and Petersen",
         [&] {
             Outcome o;
             sweep_into(o, "prop-cycles", cache);
             sweep_into(o, "prop-petersen", cache);
             return o;
         }},
        {"line graphs of trees",
         [&] {
             Outcome o;
             sweep_into(o, "prop-linegraphs", cache);
             return o;
         }},
        {"rank-1 classifications",
         [&] {
             Outcome o;
             sweep_into(o, "thm-rank1", cache);
             sweep_into(o, "thm-digraph1", cache);
             return o;
         }},
        {"K_{3,3,3} bound", [] { return criterion9(); }},
        {"engine properties", [&] { return criterion10(cache); }},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (!o.pass) ++failed;
        std::printf("criterion %2zu %-32s %s (%.1fs)%s%s\n", k + 1, criteria[k].first.c_str(), o.pass ? "PASS" : "FAIL",
                    secs, o.detail.empty() ? "" : "  ", o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
