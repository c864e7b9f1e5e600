#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corank/canonical.hpp"
#include "corank/classify.hpp"
#include "corank/named_graphs.hpp"
#include "support.hpp"

using namespace corank;

namespace {

bool all_true(const EquivalenceReport& r)
{
    return r.structural && r.pattern_free && r.mr_le_1 && r.mz_le_1 && r.gamma_z_le_1 && r.gamma_q_le_1;
}

bool all_false(const EquivalenceReport& r)
{
    return !r.structural && !r.pattern_free && !r.mr_le_1 && !r.mz_le_1 && !r.gamma_z_le_1 && !r.gamma_q_le_1;
}

}  // namespace

TEST_CASE("rank-1 graph examples")
{
    const auto k5 = classify_rank1_graph(named::complete(5));
    CHECK(all_true(k5));
    CHECK(k5.agreement);
    const auto p3 = classify_rank1_graph(named::path(3));
    CHECK(all_false(p3));
    CHECK(p3.mz == 2);
    CHECK(p3.agreement);
    const auto bull = classify_rank1_graph(named::bull());
    CHECK(all_false(bull));
    REQUIRE(bull.forbidden);
    CHECK(bull.forbidden->name == "P3");
    CHECK_THROWS_AS(classify_rank1_graph(Graph(2)), std::invalid_argument);
}

TEST_CASE("rank-1 graph theorem on all connected graphs up to six vertices")
{
    for (const auto& g : enumerate_connected_graphs(6)) {
        const auto r = classify_rank1_graph(g);
        CHECK(r.agreement);
        if (r.rank_one) CHECK(matches_pattern(g, *r.rank_one));
    }
}

TEST_CASE("Lambda recognition")
{
    const auto l = is_lambda(named::lambda_digraph(2, 1, 2));
    REQUIRE(l);
    CHECK(l->n1 == 2);
    CHECK(l->n2 == 1);
    CHECK(l->n3 == 2);
    const auto f47 = named::forbidden_family()[13];
    CHECK(f47.name == "F_{4,7}");
    CHECK_FALSE(is_lambda(f47.digraph));
    const auto single = is_lambda(Digraph(1));
    REQUIRE(single);
    CHECK(single->n1 == 1);
    CHECK(single->part == std::vector<LambdaPart>{LambdaPart::T});
}

TEST_CASE("digraph examples")
{
    const auto lam = classify_digraph1(named::lambda_digraph(1, 2, 1));
    CHECK(all_true(lam));
    CHECK(lam.agreement);
    const auto f31 = classify_digraph1(named::forbidden_family()[0].digraph);
    CHECK(all_false(f31));
    CHECK(f31.mz == 2);
    CHECK(f31.agreement);
    const auto k3 = classify_digraph1(named::complete_digraph(3));
    CHECK(all_true(k3));
    CHECK(k3.agreement);
}

TEST_CASE("disconnected digraphs compare Lambda up to isolated vertices")
{
    // An arc plus an isolated vertex: mz = 1 but not Lambda as a whole.
    const auto a = classify_digraph1(Digraph(3, std::vector<Edge>{{0, 1}}));
    CHECK(a.mz_le_1);
    CHECK_FALSE(a.structural);
    CHECK(a.lambda_up_to_isolated);
    CHECK_FALSE(a.weakly_connected);
    CHECK(a.agreement);
    // Two disjoint arcs: free of the forbidden family yet mz = 2.
    const auto b = classify_digraph1(Digraph(4, std::vector<Edge>{{0, 1}, {2, 3}}));
    CHECK(b.pattern_free);
    CHECK(b.mz == 2);
    CHECK_FALSE(b.gamma_q_le_1);
    CHECK(b.agreement);
}

TEST_CASE("digraph theorem on all digraphs up to four vertices")
{
    for (const auto& d : enumerate_digraphs(4)) {
        const auto r = classify_digraph1(d);
        CHECK(r.agreement);
        if (r.weakly_connected) CHECK((all_true(r) || all_false(r)));
        if (r.rank_one) {
            CHECK(matches_pattern(d, *r.rank_one));
            CHECK(exact_rank(*r.rank_one).rank <= 1);
        }
    }
}

TEST_CASE("forbidden family")
{
    for (const auto& f : named::forbidden_family()) {
        CHECK(mz(f.digraph) == 2);
        CHECK(f.marked.size() == f.digraph.order() - 2);
        CHECK(is_zero_forcing_set(f.digraph, f.marked));
        CHECK_FALSE(is_lambda(f.digraph));
    }
}

TEST_CASE("random Lambda digraphs")
{
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::size_t> part(0, 3);
    for (int k = 0; k < 50; ++k) {
        std::size_t a, b, c;
        do {
            a = part(rng);
            b = part(rng);
            c = part(rng);
        } while (a + b + c == 0 || a + b + c > 8);
        const auto d = relabel(named::lambda_digraph(a, b, c), testing::random_permutation(rng, a + b + c));
        const auto p = is_lambda(d);
        REQUIRE(p);
        CHECK(mz(d) <= 1);
        const auto m = lambda_block_matrix(*p);
        CHECK(matches_pattern(d, m));
        CHECK(exact_rank(m).rank <= 1);
        CHECK(rank_one_witness(d).has_value());
    }
}

TEST_CASE("mr <= 2 corollary")
{
    const auto oct = check_mr2_corollary(named::octahedron());
    CHECK(oct.applicable);
    CHECK(oct.holds);
    CHECK(oct.mr == 2);
    CHECK(oct.gamma_q == std::optional<std::size_t>(3));
    const auto k4 = check_mr2_corollary(named::complete(4));
    CHECK(k4.applicable);
    CHECK(k4.holds);
    const auto c5 = check_mr2_corollary(named::cycle(5));
    CHECK_FALSE(c5.applicable);
    CHECK(c5.mr == 3);
    CHECK(c5.note.find("not applicable") != std::string::npos);
}
