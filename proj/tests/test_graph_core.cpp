#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>

#include "corank/canonical.hpp"
#include "corank/graph_io.hpp"
#include "corank/induced.hpp"
#include "corank/named_graphs.hpp"
#include "support.hpp"

using namespace corank;

TEST_CASE("graph6 decodes the small examples")
{
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(parse_graph6("Bw") == named::complete(3));
    const auto p3 = parse_graph6("Bg");
    CHECK(p3.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK(write_graph6(named::complete(3)) == "Bw");
}

TEST_CASE("graph6 round trips")
{
    for (const auto& g : enumerate_connected_graphs(6)) CHECK(parse_graph6(write_graph6(g)) == g);
    std::mt19937_64 rng(11);
    for (std::size_t n : {7u, 20u, 62u, 63u, 64u, 100u}) {
        const auto g = testing::random_graph(rng, n, 0.3);
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
    for (int k = 0; k < 200; ++k) {
        const auto d = testing::random_digraph(rng, 1 + k % 9);
        CHECK(parse_digraph6(write_digraph6(d)) == d);
    }
}

TEST_CASE("malformed graph6 is rejected")
{
    CHECK_THROWS_AS(parse_graph6(""), FormatError);
    CHECK_THROWS_AS(parse_graph6("B"), FormatError);
    CHECK_THROWS_AS(parse_graph6("B\x7f"), FormatError);
}

TEST_CASE("mixed input stream")
{
    const auto arc = write_digraph6(Digraph(3, std::vector<Edge>{{0, 1}}));
    std::istringstream in("# comment\nBw\n" + arc + "\n\n3 2\n0 1\n1 2\n");
    const auto recs = read_graphs(in);
    REQUIRE(recs.size() == 3);
    CHECK(std::holds_alternative<Graph>(recs[0].graph));
    CHECK(std::holds_alternative<Digraph>(recs[1].graph));
    CHECK(std::get<Graph>(recs[2].graph) == named::path(3));
    CHECK(recs[0].line == 2);

    std::istringstream bad("Bw\nB\n");
    try {
        read_graphs(bad);
        FAIL("expected a format error");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find('2') != std::string::npos);
    }
}

TEST_CASE("complement and line graph")
{
    const auto oct = named::octahedron();
    CHECK(oct.size() == 12);
    for (Vertex v = 0; v < 6; ++v) CHECK(oct.degree(v) == 4);
    CHECK(complement(named::complete(5)).size() == 0);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
        const auto g = testing::random_graph(rng, 7);
        CHECK(complement(complement(g)) == g);
    }
    CHECK(canonical_form(line_graph(named::path(4))).encoding == canonical_form(named::path(3)).encoding);
    CHECK(canonical_form(line_graph(named::star(3))).encoding == canonical_form(named::complete(3)).encoding);
    CHECK(line_graph(named::bull()).size() == 7);
    for (std::size_t n = 3; n <= 8; ++n)
        CHECK(canonical_form(line_graph(named::path(n))).encoding == canonical_form(named::path(n - 1)).encoding);
}

TEST_CASE("canonical form")
{
    CHECK(canonical_form(named::cycle(3)).encoding == canonical_form(named::complete(3)).encoding);
    CHECK(canonical_form(named::path(4)).encoding != canonical_form(named::star(3)).encoding);
    std::mt19937_64 rng(5);
    const auto bull = named::bull();
    for (int k = 0; k < 50; ++k) {
        const auto perm = testing::random_permutation(rng, 5);
        CHECK(canonical_form(relabel(bull, perm)).encoding == canonical_form(bull).encoding);
    }
    for (int k = 0; k < 200; ++k) {
        const auto g = testing::random_graph(rng, 1 + k % 8);
        const auto perm = testing::random_permutation(rng, g.order());
        CHECK(canonical_form(relabel(g, perm)).encoding == canonical_form(g).encoding);
    }
    for (int k = 0; k < 100; ++k) {
        const auto d = testing::random_digraph(rng, 6);
        const auto perm = testing::random_permutation(rng, 6);
        CHECK(canonical_form(relabel(d, perm)).encoding == canonical_form(d).encoding);
    }
}

namespace {

// Isomorphism classes of labeled graphs on n vertices by brute relabeling.
std::size_t brute_connected_classes(std::size_t n)
{
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<Vertex> perm(n);
    std::set<std::vector<Edge>> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t e = 0; e < slots.size(); ++e)
            if (mask >> e & 1) edges.push_back(slots[e]);
        const Graph g(n, edges);
        if (!is_connected(g)) continue;
        std::iota(perm.begin(), perm.end(), Vertex{0});
        std::vector<Edge> least;
        bool first = true;
        do {
            auto e = relabel(g, perm).edges();
            if (first || e < least) least = e;
            first = false;
        } while (std::next_permutation(perm.begin(), perm.end()));
        classes.insert(least);
    }
    return classes.size();
}

std::size_t brute_digraph_classes(std::size_t n)
{
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v) slots.emplace_back(u, v);
    std::vector<Vertex> perm(n);
    std::set<std::vector<Edge>> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<Edge> arcs;
        for (std::size_t e = 0; e < slots.size(); ++e)
            if (mask >> e & 1) arcs.push_back(slots[e]);
        const Digraph d(n, arcs);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        std::vector<Edge> least;
        bool first = true;
        do {
            auto a = relabel(d, perm).arcs();
            if (first || a < least) least = a;
            first = false;
        } while (std::next_permutation(perm.begin(), perm.end()));
        classes.insert(least);
    }
    return classes.size();
}

}  // namespace

TEST_CASE("enumeration counts")
{
    CHECK(enumerate_connected_graphs(1).size() == 1);
    CHECK(enumerate_connected_graphs(4).size() == 10);
    const auto six = enumerate_connected_graphs(6);
    CHECK(six.size() == 143);
    std::set<std::string> distinct;
    for (const auto& g : six) {
        CHECK(is_connected(g));
        distinct.insert(canonical_form(g).encoding);
    }
    CHECK(distinct.size() == 143);
    std::size_t brute = 0;
    for (std::size_t n = 1; n <= 5; ++n) brute += brute_connected_classes(n);
    CHECK(enumerate_connected_graphs(5).size() == brute);

    CHECK(enumerate_digraphs(1).size() == 1);
    CHECK(enumerate_digraphs(2).size() == 4);
    const auto upto3 = enumerate_digraphs(3).size();
    CHECK(upto3 - 4 == brute_digraph_classes(3));
    std::set<std::string> seen;
    for (const auto& d : enumerate_digraphs(4)) CHECK(seen.insert(canonical_form(d).encoding).second);
}

TEST_CASE("named constructions")
{
    const auto pet = named::petersen();
    CHECK(pet.order() == 10);
    CHECK(pet.size() == 15);
    for (Vertex v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);

    const auto l = named::lambda_digraph(1, 1, 1);
    CHECK(l.order() == 3);
    CHECK(l.arcs() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(named::forbidden_family().size() == 17);
    for (const auto& f : named::forbidden_family()) CHECK(is_weakly_connected(f.digraph));

    std::size_t trees = 0;
    for (const auto& t : named::all_trees(8)) {
        CHECK(is_tree(t));
        ++trees;
    }
    CHECK(trees == 23);
    CHECK(named::all_trees(10).size() == 106);
}

TEST_CASE("induced subgraph search")
{
    CHECK_FALSE(contains_induced(named::complete(3), named::path(3)));
    const auto hit = contains_induced(named::bull(), named::path(3));
    REQUIRE(hit);
    CHECK(induced_subgraph(named::bull(), *hit) == named::path(3));

    const auto lam = named::lambda_digraph(2, 1, 2);
    for (const auto& f : named::forbidden_family()) CHECK_FALSE(contains_induced(lam, f.digraph));

    std::mt19937_64 rng(9);
    for (int k = 0; k < 40; ++k) {
        const auto host = testing::random_graph(rng, 7);
        const auto pat = testing::random_graph(rng, 4);
        const auto found = contains_induced(host, pat);
        bool brute = false;
        testing::for_each_subset(7, 4, [&](const std::vector<std::size_t>& s) {
            std::vector<Vertex> vs(s.begin(), s.end());
            if (canonical_form(induced_subgraph(host, vs)).encoding == canonical_form(pat).encoding) brute = true;
        });
        CHECK(found.has_value() == brute);
        if (found) CHECK(induced_subgraph(host, *found) == pat);
    }
}
