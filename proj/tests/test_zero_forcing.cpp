#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corank/canonical.hpp"
#include "corank/named_graphs.hpp"
#include "corank/zero_forcing.hpp"
#include "support.hpp"

using namespace corank;

namespace {

std::uint64_t mask_of(const std::vector<Vertex>& vs)
{
    std::uint64_t m = 0;
    for (auto v : vs) m |= std::uint64_t{1} << v;
    return m;
}

}  // namespace

TEST_CASE("closure examples")
{
    const auto bull = named::bull();
    const std::vector<Vertex> pendants{3, 4};
    const auto st = closure(bull, pendants);
    CHECK(st.blue.size() == 5);
    const ForceRecord listed{{3, 4}, {{3, 0}, {4, 1}, {1, 2}}};
    CHECK(is_valid_record(to_digraph(bull), listed));
    CHECK(is_zero_forcing_set(bull, pendants));

    const std::vector<Vertex> all{0, 1, 2, 3, 4};
    CHECK(closure(bull, all).forces.empty());
    const std::vector<Vertex> one{0};
    CHECK(closure(named::complete(3), one).blue == one);
    CHECK(is_zero_forcing_set(named::path(6), one));
    for (Vertex v = 0; v < 4; ++v) {
        const std::vector<Vertex> s{v};
        CHECK_FALSE(is_zero_forcing_set(named::complete(4), s));
    }
}

TEST_CASE("zero forcing numbers")
{
    CHECK(zero_forcing_number(named::bull()).z == 2);
    CHECK(mz(named::bull()) == 3);
    CHECK(zero_forcing_number(named::octahedron()).z == 4);
    for (std::size_t n = 3; n <= 10; ++n) {
        CHECK(zero_forcing_number(named::path(n)).z == 1);
        CHECK(zero_forcing_number(named::cycle(n)).z == 2);
        CHECK(zero_forcing_number(named::complete(n)).z == n - 1);
    }
    CHECK(zero_forcing_number(named::cycle(7)).z == 2);
    for (std::size_t n = 1; n <= 7; ++n) CHECK(mz(named::complete(n)) == (n > 1 ? 1u : 0u));
    CHECK(mz(named::forbidden_family()[0].digraph) == 2);
}

TEST_CASE("closure is confluent over random orders")
{
    // Replays forces in a random legal order each time; the final blue set must
    // not depend on the order.
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 3 + trial % 8;
        const auto d = trial % 2 ? testing::random_digraph(rng, n) : to_digraph(testing::random_graph(rng, n));
        std::bernoulli_distribution coin(0.35);
        std::vector<Vertex> seed;
        for (Vertex v = 0; v < n; ++v)
            if (coin(rng)) seed.push_back(v);
        const auto out = testing::brute_out(d);
        std::uint64_t blue = mask_of(seed);
        while (true) {
            std::vector<std::pair<Vertex, Vertex>> legal;
            for (Vertex v = 0; v < n; ++v) {
                if (!(blue >> v & 1)) continue;
                const std::uint64_t white = out[v] & ~blue;
                if (white && !(white & (white - 1))) legal.emplace_back(v, static_cast<Vertex>(__builtin_ctzll(white)));
            }
            if (legal.empty()) break;
            std::uniform_int_distribution<std::size_t> pick(0, legal.size() - 1);
            blue |= std::uint64_t{1} << legal[pick(rng)].second;
        }
        const auto st = closure(d, seed);
        CHECK(mask_of(st.blue) == blue);
        CHECK(is_valid_record(d, ForceRecord{seed, st.forces}) == (st.blue.size() == n));
    }
}

TEST_CASE("exact zero forcing number matches brute force")
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + trial % 9;
        const auto d = trial % 3 == 0 ? to_digraph(testing::random_graph(rng, n)) : testing::random_digraph(rng, n);
        const auto zf = zero_forcing_number(d);
        CHECK(zf.exact);
        CHECK(zf.z == testing::brute_zero_forcing_number(d));
        CHECK(zf.witness.initial_set.size() == zf.z);
        CHECK(is_valid_record(d, zf.witness));
    }
    for (const auto& g : enumerate_connected_graphs(6))
        CHECK(zero_forcing_number(g).z == testing::brute_zero_forcing_number(to_digraph(g)));
}

TEST_CASE("greedy tier is an upper bound and still a forcing set")
{
    const auto g = named::petersen();
    const auto zf = zero_forcing_number(g);
    CHECK(zf.z == 5);
    std::mt19937_64 rng(4);
    const auto big = testing::random_tree(rng, 40);
    const auto zb = zero_forcing_number(big);
    CHECK_FALSE(zb.exact);
    CHECK(is_valid_record(to_digraph(big), zb.witness));
}

TEST_CASE("certificate minor")
{
    const auto bull = named::bull();
    const ForceRecord listed{{3, 4}, {{3, 0}, {4, 1}, {1, 2}}};
    const auto cm = certificate_minor(bull, listed);
    REQUIRE(cm.size() == 3);
    CHECK(cm.rows == std::vector<Vertex>{3, 4, 1});
    CHECK(cm.cols == std::vector<Vertex>{0, 1, 2});
    CHECK(cm(0, 0).constant == -1);
    CHECK(cm(1, 1).constant == -1);
    CHECK(cm(2, 2).constant == -1);
    CHECK(cm(2, 1).is_variable);
    CHECK(cm.determinant() == -1);

    const ForceRecord k2{{0}, {{0, 1}}};
    const auto m2 = certificate_minor(named::path(2), k2);
    CHECK(m2.size() == 1);
    CHECK(m2.determinant() == -1);

    const ForceRecord bogus{{0}, {{0, 2}}};
    CHECK_THROWS_AS(certificate_minor(named::path(3), bogus), CertificateError);
}

TEST_CASE("certificate determinant by cofactor expansion on random trees")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        const auto t = testing::random_tree(rng, 2 + trial % 8);
        const auto zf = zero_forcing_number(t);
        const auto cm = certificate_minor(t, zf.witness);
        CHECK(cm.size() == t.order() - zf.z);
        // Any value for the variables: use 7 as a generic stand-in.
        std::vector<std::vector<mpz_class>> m(cm.size(), std::vector<mpz_class>(cm.size()));
        for (std::size_t r = 0; r < cm.size(); ++r)
            for (std::size_t c = 0; c < cm.size(); ++c)
                m[r][c] = cm(r, c).is_variable ? mpz_class(7) : mpz_class(static_cast<long>(cm(r, c).constant));
        const auto det = testing::laplace_det(m);
        CHECK((det == 1 || det == -1));
        CHECK(det == cm.determinant());
    }
}
