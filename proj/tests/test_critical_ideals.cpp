#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corank/canonical.hpp"
#include "corank/critical_ideals.hpp"
#include "corank/laplacian.hpp"
#include "corank/named_graphs.hpp"
#include "support.hpp"

using namespace corank;

namespace {

// Octahedron with the non-adjacent pairs {0,3}, {1,5}, {2,4}.
Graph labeled_octahedron()
{
    const std::vector<Edge> missing{{0, 3}, {1, 5}, {2, 4}};
    return complement(Graph(6, missing));
}

std::vector<std::string> variables_and(const std::string& extra)
{
    return {"x0", "x1", "x2", "x3", "x4", "x5", extra};
}

}  // namespace

TEST_CASE("generalized Laplacian")
{
    const SymbolicMatrix k1(Graph(1));
    CHECK(k1.order() == 1);
    CHECK(k1(0, 0).is_variable);
    const SymbolicMatrix bull(named::bull());
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 5; ++c) {
            if (r == c) {
                CHECK(bull(r, c).is_variable);
                CHECK(bull(r, c).variable == r);
            } else {
                CHECK(bull(r, c).constant == (named::bull().adjacent(r, c) ? -1 : 0));
            }
        }
    std::mt19937_64 rng(1);
    for (int k = 0; k < 100; ++k) {
        const auto g = testing::random_connected_graph(rng, 2 + k % 7);
        std::vector<std::int64_t> deg;
        for (Vertex v = 0; v < g.order(); ++v) deg.push_back(static_cast<std::int64_t>(g.degree(v)));
        CHECK(determinant(evaluate_laplacian(to_digraph(g), deg)) == 0);
    }
}

TEST_CASE("minor generators")
{
    const SymbolicMatrix p3(named::path(3));
    const auto two = minor_generators(p3, 2);
    CHECK(two.unit_minor.has_value());
    const auto three = minor_generators(p3, 3);
    REQUIRE(three.generators.size() == 1);
    PolynomialRing<IntegerRing> z(IntegerRing{}, 3);
    CHECK(three.generators[0] == z.parse("x0*x1*x2 - x0 - x2"));

    const auto bull3 = minor_generators(SymbolicMatrix(named::bull()), 3);
    CHECK(bull3.unit_minor.has_value());
}

TEST_CASE("minor generators evaluate to the minors of the evaluated matrix")
{
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<std::int64_t> coord(-3, 3);
    for (int k = 0; k < 30; ++k) {
        const auto g = testing::random_graph(rng, 3 + k % 3);
        const SymbolicMatrix sm(g);
        const std::size_t n = g.order();
        std::vector<std::int64_t> pt(n);
        for (auto& x : pt) x = coord(rng);
        const auto m = evaluate_laplacian(to_digraph(g), pt);
        PolynomialRing<IntegerRing> ring(IntegerRing{}, n);
        std::vector<mpz_class> zpt(pt.begin(), pt.end());
        for (std::size_t i = 1; i <= n; ++i) {
            const auto set = minor_generators(sm, i);
            for (std::size_t j = 0; j < set.generators.size(); ++j) {
                const auto rows = set.sources[j].row_list();
                const auto cols = set.sources[j].col_list();
                const std::vector<std::size_t> r(rows.begin(), rows.end()), c(cols.begin(), cols.end());
                const mpz_class det = testing::laplace_det(m, r, c);
                const mpz_class val = ring.evaluate(set.generators[j], zpt);
                CHECK((val == det || val == -det));
            }
        }
    }
}

TEST_CASE("octahedron")
{
    const auto g = labeled_octahedron();
    const auto gz = gamma(g, Domain::integers());
    const auto gq = gamma(g, Domain::rationals());
    CHECK(gz.value == std::optional<std::size_t>(2));
    CHECK(gq.value == std::optional<std::size_t>(3));
    CHECK(ideal_trivial(g, 3, Domain::integers()).decision == Decision::NonTrivial);
    CHECK(ideal_trivial(g, 3, Domain::rationals()).decision == Decision::Trivial);
    CHECK(critical_ideal_equals(g, 3, Domain::integers(), variables_and("2")) == std::optional<bool>(true));
    CHECK(critical_ideal_equals(g, 3, Domain::integers(), variables_and("3")) != std::optional<bool>(true));
    const std::vector<std::string> i4{"x0*x1", "x0*x2", "x0*x3 + 2*x0 + 2*x3", "x0*x4", "x0*x5", "x1*x2",
                                      "x1*x3", "x1*x4", "x1*x5 + 2*x1 + 2*x5", "x2*x3", "x2*x4 + 2*x2 + 2*x4",
                                      "x2*x5", "x3*x4", "x3*x5", "x4*x5"};
    CHECK(critical_ideal_equals(g, 4, Domain::rationals(), i4) == std::optional<bool>(true));
    const std::vector<std::int64_t> zero(6, 0);
    CHECK(exact_rank(evaluate_laplacian(to_digraph(g), zero)).rank == 3);
    const auto w = nontriviality_certificate(g, 4, Domain::rationals());
    REQUIRE(w);
    CHECK(w->rank <= 3);
    const auto w2 = nontriviality_certificate(g, 3, Domain::integers());
    REQUIRE(w2);
    CHECK(w2->prime == 2);
    CHECK(rank_mod_p(evaluate_laplacian(to_digraph(g), w2->point), 2).rank <= 2);
    const auto trivial = groebner_basis_of_critical_ideal(g, 3, Domain::rationals());
    CHECK(trivial.basis == std::vector<std::string>{"1"});
}

TEST_CASE("printed bases of the exceptional graphs")
{
    const std::vector<std::string> a{"x0*x1 - x1 - 2", "x0*x3 + 2*x0 + x3", "x0*x5 + 1", "x1*x3 + x1 + x3 + 2",
                                     "x1*x5 + x1 + 2*x5", "x2", "x3*x5 - x3 - 2", "x4"};
    const std::vector<std::string> b{"x0 + x5 - 1", "x1 + x5 - 1", "x2 - x5", "x3 - x5", "x4 + x5 - 1", "x5^2 - x5 - 1"};
    const std::vector<std::string> c{"x0 + x5 + 3", "x1 - x5", "x2 - x5", "x3 - x5", "x4 - x5", "x5^2 + x5 - 1"};
    CHECK(critical_ideal_equals(named::graph_a(), 4, Domain::rationals(), a) == std::optional<bool>(true));
    CHECK(critical_ideal_equals(named::graph_b(), 4, Domain::rationals(), b) == std::optional<bool>(true));
    CHECK(critical_ideal_equals(named::graph_c(), 4, Domain::rationals(), c) == std::optional<bool>(true));
    CHECK(critical_ideal_equals(named::graph_b(), 4, Domain::rationals(), c) == std::optional<bool>(false));
    for (const auto& g : {named::graph_a(), named::graph_b(), named::graph_c()}) {
        CHECK(gamma(g, Domain::rationals()).value == std::optional<std::size_t>(3));
        CHECK_FALSE(variety_box_search(g, 3, IntegerBox{-2, 2}, Domain::rationals()).point);
    }
}

TEST_CASE("examples")
{
    for (std::size_t n = 2; n <= 6; ++n)
        for (const auto& dom : {Domain::integers(), Domain::rationals(), Domain::prime_field(3)})
            CHECK(gamma(named::complete(n), dom).value == std::optional<std::size_t>(1));
    const std::vector<std::int64_t> minus_ones(4, -1);
    CHECK(exact_rank(evaluate_laplacian(to_digraph(named::complete(4)), minus_ones)).rank == 1);
    CHECK(nontriviality_certificate(named::complete(4), 2, Domain::rationals()).has_value());

    const auto k1 = gamma(Graph(1), Domain::rationals());
    CHECK(k1.value == std::optional<std::size_t>(0));

    const auto pet = gamma(named::petersen(), Domain::rationals());
    CHECK(pet.value == std::optional<std::size_t>(5));
    CHECK(pet.groebner_runs == 0);
    const auto pz = gamma(named::petersen(), Domain::integers());
    CHECK(pz.value == std::optional<std::size_t>(5));
    CHECK(pz.groebner_runs == 0);

    const auto c5 = variety_box_search(named::cycle(5), 3, IntegerBox{-2, 2}, Domain::rationals());
    REQUIRE(c5.point);
    CHECK(c5.point->rank <= 3);
    const auto k2 = variety_box_search(named::path(2), 1, IntegerBox{-1, 1}, Domain::rationals());
    REQUIRE(k2.point);
    CHECK(k2.point->rank == 1);

    const auto k333 = named::complete_multipartite({3, 3, 3});
    CHECK(ideal_trivial(k333, 2, Domain::integers()).decision == Decision::Trivial);
    const auto cert = nontriviality_certificate(k333, 3, Domain::integers());
    REQUIRE(cert);
    CHECK(cert->rank <= 2);
    const auto gz = gamma(k333, Domain::integers());
    CHECK(gz.value == std::optional<std::size_t>(2));
    CHECK(gz.groebner_runs == 0);

    for (const auto& g : enumerate_connected_graphs(5)) {
        const auto n = g.order();
        for (const auto& dom : {Domain::integers(), Domain::rationals()})
            CHECK(ideal_trivial(g, n, dom).decision == Decision::NonTrivial);
        if (mz(g) > 0)
            CHECK(groebner_basis_of_critical_ideal(g, mz(g), Domain::rationals()).basis ==
                  std::vector<std::string>{"1"});
    }
}

TEST_CASE("gamma properties on all connected graphs up to six vertices")
{
    DecisionCache cache;
    for (const auto& g : enumerate_connected_graphs(6)) {
        const auto gz = gamma(g, Domain::integers(), {}, &cache);
        const auto gq = gamma(g, Domain::rationals(), {}, &cache);
        REQUIRE(gz.value);
        REQUIRE(gq.value);
        CHECK(mz(g) <= *gz.value);
        CHECK(*gz.value <= *gq.value);
        CHECK(gz.lower <= gz.upper);
        CHECK(gz.provenance.size() == g.order());
        // Nesting over every decided index.
        for (const auto* r : {&gz, &gq}) {
            bool nontrivial_seen = false;
            for (const auto& p : r->provenance) {
                if (p.decision == Decision::Undecided) continue;
                if (p.decision == Decision::NonTrivial) nontrivial_seen = true;
                CHECK_FALSE((p.decision == Decision::Trivial && nontrivial_seen));
                CHECK((p.decision == Decision::Trivial) == (p.i <= *r->value));
            }
        }
    }
}

TEST_CASE("gamma is invariant under relabeling")
{
    std::mt19937_64 rng(3);
    DecisionCache cache;
    const auto graphs = enumerate_connected_graphs(6);
    std::uniform_int_distribution<std::size_t> pick(0, graphs.size() - 1);
    for (int k = 0; k < 100; ++k) {
        const auto& g = graphs[pick(rng)];
        const auto h = relabel(g, testing::random_permutation(rng, g.order()));
        for (const auto& dom : {Domain::integers(), Domain::rationals()}) {
            const auto a = gamma(g, dom, {}, &cache);
            const auto b = gamma(h, dom);
            CHECK(a.value == b.value);
            CHECK(a.lower == b.lower);
            CHECK(a.upper == b.upper);
        }
    }
}

TEST_CASE("induced subgraphs do not raise gamma or mz")
{
    std::mt19937_64 rng(4);
    DecisionCache cache;
    for (int k = 0; k < 200; ++k) {
        const auto g = testing::random_graph(rng, 2 + k % 5);
        std::vector<Vertex> keep;
        std::bernoulli_distribution coin(0.6);
        for (Vertex v = 0; v < g.order(); ++v)
            if (coin(rng)) keep.push_back(v);
        const auto h = induced_subgraph(g, keep);
        CHECK(mz(h) <= mz(g));
        for (const auto& dom : {Domain::integers(), Domain::rationals()}) {
            const auto gg = gamma(g, dom, {}, &cache);
            const auto gh = gamma(h, dom, {}, &cache);
            REQUIRE(gg.value);
            REQUIRE(gh.value);
            CHECK(*gh.value <= *gg.value);
        }
    }
}

TEST_CASE("cached and cold decisions agree")
{
    std::mt19937_64 rng(5);
    const auto dir = std::filesystem::temp_directory_path() / ("corank-cache-" + std::to_string(rng()));
    std::filesystem::create_directories(dir);
    std::vector<Graph> sample;
    for (int k = 0; k < 50; ++k) sample.push_back(testing::random_connected_graph(rng, 3 + k % 4));
    // Graphs whose bounds do not meet, so gamma has to decide ideals.
    sample.push_back(named::octahedron());
    sample.push_back(named::complete_multipartite({2, 2, 3}));
    std::vector<GammaResult> cold;
    std::vector<std::vector<TrivialityDecision>> cold_ideals;
    {
        DecisionCache cache(dir);
        for (const auto& g : sample) {
            cold.push_back(gamma(g, Domain::integers(), {}, &cache));
            cold_ideals.emplace_back();
            for (std::size_t i = 1; i <= g.order(); ++i)
                cold_ideals.back().push_back(ideal_trivial(g, i, Domain::integers(), {}, &cache));
        }
        CHECK(cache.size() > 0);
    }
    DecisionCache warm(dir);
    CHECK(warm.size() > 0);
    for (std::size_t k = 0; k < sample.size(); ++k)
        for (std::size_t i = 1; i <= sample[k].order(); ++i) {
            const auto again = ideal_trivial(sample[k], i, Domain::integers(), {}, &warm);
            if (again.method != Method::Structural) CHECK(again.from_cache);
            CHECK(again.decision == cold_ideals[k][i - 1].decision);
            CHECK(again.method == cold_ideals[k][i - 1].method);
        }
    for (std::size_t k = 0; k < sample.size(); ++k) {
        const auto again = gamma(sample[k], Domain::integers(), {}, &warm);
        CHECK(again.value == cold[k].value);
        CHECK(again.lower == cold[k].lower);
        CHECK(again.upper == cold[k].upper);
        CHECK(again.groebner_runs == cold[k].groebner_runs);
        REQUIRE(again.provenance.size() == cold[k].provenance.size());
        for (std::size_t i = 0; i < again.provenance.size(); ++i) {
            CHECK(again.provenance[i].decision == cold[k].provenance[i].decision);
            CHECK(again.provenance[i].method == cold[k].provenance[i].method);
        }
    }
    CriticalIdealConfig other;
    other.budget.max_spairs = 7;
    CHECK(cache_key(to_digraph(sample[0]), 2, Domain::integers(), {}) !=
          cache_key(to_digraph(sample[0]), 2, Domain::integers(), other));
    std::filesystem::remove_all(dir);
}

TEST_CASE("digraph gamma bounds")
{
    std::mt19937_64 rng(6);
    for (int k = 0; k < 100; ++k) {
        const auto d = testing::random_digraph(rng, 1 + k % 5);
        for (const auto& dom : {Domain::integers(), Domain::rationals()}) {
            const auto r = gamma(d, dom);
            CHECK(mz(d) <= r.lower);
            CHECK(r.lower <= r.upper);
            CHECK(r.upper < std::max<std::size_t>(d.order(), 1));
        }
    }
}
