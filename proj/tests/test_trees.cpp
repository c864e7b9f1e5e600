#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corank/named_graphs.hpp"
#include "corank/trees.hpp"
#include "corank/zero_forcing.hpp"
#include "support.hpp"

using namespace corank;

TEST_CASE("path cover examples")
{
    for (std::size_t n = 1; n <= 8; ++n) CHECK(path_cover_number(named::path(n)).count == 1);
    CHECK(path_cover_number(named::star(3)).count == 2);
    CHECK(path_cover_number(named::spider({2, 2, 2})).count == 2);
    const auto pc = path_cover_number(named::spider({2, 2, 2}));
    CHECK(is_path_cover(named::spider({2, 2, 2}), pc.paths));
    CHECK_THROWS_AS(path_cover_number(named::cycle(4)), NotATree);
}

TEST_CASE("delta examples")
{
    for (std::size_t n = 1; n <= 8; ++n) CHECK(delta_parameter(named::path(n)).value == 1);
    const auto s4 = delta_parameter(named::star(4));
    CHECK(s4.value == 3);
    CHECK(s4.deleted == std::vector<Vertex>{0});
    CHECK(s4.paths == 4);
    CHECK(delta_parameter(named::star(3)).value == 2);
}

TEST_CASE("two-matching examples")
{
    CHECK(two_matching_number(named::path(4)).count == 3);
    CHECK(two_matching_number(named::star(3)).count == 2);
    CHECK(two_matching_number(named::cycle(5)).count == 5);
    CHECK(two_matching_number(named::complete(4)).count == 4);
}

TEST_CASE("tree suite examples")
{
    const auto p5 = tree_suite(named::path(5));
    CHECK(p5.mz == 4);
    CHECK(p5.P.count == 1);
    CHECK(p5.Delta.value == 1);
    CHECK(p5.nu2.count == 4);
    const auto s3 = tree_suite(named::star(3));
    CHECK(s3.mz == 2);
    CHECK(s3.P.count == 2);
    CHECK(s3.Delta.value == 2);
    CHECK(s3.nu2.count == 2);
}

TEST_CASE("dynamic programs match exhaustive oracles on all trees up to ten vertices")
{
    for (std::size_t n = 1; n <= 10; ++n) {
        for (const auto& t : named::all_trees(n)) {
            const auto pc = path_cover_number(t);
            const auto delta = delta_parameter(t);
            const auto nu = two_matching_number(t);
            CHECK(pc.count == testing::brute_path_cover(t));
            CHECK(static_cast<long>(delta.value) == testing::brute_delta(t));
            CHECK(nu.count == testing::brute_two_matching(t));
            CHECK(is_path_cover(t, pc.paths));
            CHECK(pc.paths.size() == pc.count);
            CHECK(is_two_matching(t, nu.edges));
            CHECK(nu.edges.size() == nu.count);
            const auto left = path_components_after_deletion(t, delta.deleted);
            REQUIRE(left);
            CHECK(*left == delta.paths);
            CHECK(static_cast<long>(delta.paths) - static_cast<long>(delta.deleted.size()) ==
                  static_cast<long>(delta.value));
            const auto p = tree_suite(t);
            CHECK(p.mz == n - zero_forcing_number(t).z);
            CHECK(p.diagonal.size() == n);
            for (auto d : p.diagonal) CHECK((d == 0 || d == -1));
            CHECK(p.diagonal_rank == p.mz);
        }
    }
}

TEST_CASE("two-matching on general graphs matches the edge-subset oracle")
{
    std::mt19937_64 rng(2);
    for (int k = 0; k < 60; ++k) {
        const auto g = testing::random_graph(rng, 4 + k % 4, 0.5);
        if (g.size() > kMaxExhaustiveTwoMatchingEdges) continue;
        const auto nu = two_matching_number(g);
        CHECK(nu.count == testing::brute_two_matching(g));
        CHECK(is_two_matching(g, nu.edges));
    }
}

TEST_CASE("random larger trees keep the identities")
{
    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; ++k) {
        const auto t = testing::random_tree(rng, 1 + k % 200);
        const auto n = t.order();
        const auto pc = path_cover_number(t);
        CHECK(delta_parameter(t).value == pc.count);
        CHECK(two_matching_number(t).count == n - pc.count);
        CHECK(is_path_cover(t, pc.paths));
    }
}
