#include <compat/generators.hpp>
#include <compat/random.hpp>

#include <doctest.h>

#include "fixtures.hpp"
#include "reference.hpp"

using namespace compat;

TEST_CASE("new_graph builds simple graphs")
{
    auto k3 = new_graph(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.edge_count() == 3);
    for (Vertex v = 0; v < 3; ++v)
        CHECK(k3.degree(v) == 2);

    auto single = new_graph(1, std::vector<Edge>{});
    CHECK(single.order() == 1);
    CHECK(single.degree(0) == 0);

    auto c5 = fixture::cycle(5);
    CHECK(c5.edge_count() == 5);
    for (Vertex v = 0; v < 5; ++v)
        CHECK(c5.degree(v) == 2);
}

TEST_CASE("new_graph rejects malformed input")
{
    CHECK_THROWS_AS(new_graph(3, std::vector<Edge>{{0, 3}}), GraphError);
    CHECK_THROWS_AS(Edge(1, 1), GraphError);
    CHECK_THROWS_AS(new_graph(3, std::vector<Edge>{{0, 1}, {1, 0}}), GraphError);
    CHECK_THROWS_AS(Graph(-1), GraphError);
}

TEST_CASE("adjacency is symmetric and degrees match rows")
{
    auto g = gen_random_dirac(11, 0.3, 5);
    for (Vertex a = 0; a < g.order(); ++a) {
        CHECK_FALSE(g.adjacent(a, a));
        int degree = 0;
        for (Vertex b = 0; b < g.order(); ++b) {
            CHECK(g.adjacent(a, b) == g.adjacent(b, a));
            degree += g.adjacent(a, b) ? 1 : 0;
        }
        CHECK(g.degree(a) == degree);
    }
}

TEST_CASE("is_dirac")
{
    CHECK(is_dirac(fixture::complete(4)));
    CHECK_FALSE(is_dirac(fixture::cycle(5)));
    CHECK_FALSE(is_dirac(fixture::glued_cliques(4)));
    CHECK_FALSE(is_dirac(fixture::complete(2)));
}

TEST_CASE("boundedness")
{
    auto k4 = fixture::complete(4);
    CHECK(boundedness(k4, IncompatSystem(4)) == 0);

    IncompatSystem f(4);
    f.add(k4, 0, 1, 2);
    f.add(k4, 0, 1, 3);
    CHECK(boundedness(k4, f) == 2);

    // Proper 3-edge-coloring of K4: perfect matchings 01|23, 02|13, 03|12.
    EdgeColoring coloring{{{0, 1}, 0}, {{2, 3}, 0}, {{0, 2}, 1}, {{1, 3}, 1}, {{0, 3}, 2}, {{1, 2}, 2}};
    CHECK(boundedness(k4, gen_system_from_coloring(k4, coloring)) == 0);
}

TEST_CASE("system rejects pairs that are not incident edges")
{
    auto c5 = fixture::cycle(5);
    IncompatSystem f(5);
    CHECK_THROWS_AS(f.add(c5, 0, 1, 2), GraphError);
    CHECK_THROWS_AS(f.add(c5, 0, 1, 1), GraphError);
}

TEST_CASE("is_compatible_pair")
{
    auto k3 = fixture::complete(3);
    IncompatSystem empty(3);
    CHECK(is_compatible_pair(empty, Edge(0, 1), Edge(1, 2)));

    IncompatSystem f(3);
    f.add(k3, 1, 0, 2);
    CHECK_FALSE(is_compatible_pair(f, Edge(0, 1), Edge(1, 2)));
    CHECK_FALSE(is_compatible_pair(f, Edge(1, 2), Edge(0, 1)));
    CHECK(is_compatible_pair(f, Edge(0, 2), Edge(1, 2)));
    CHECK_THROWS_AS(is_compatible_pair(f, Edge(0, 1), Edge(0, 1)), GraphError);
}

TEST_CASE("is_compatible_path and cycle")
{
    auto c5 = fixture::cycle(5);
    Cycle ring{0, 1, 2, 3, 4};
    CHECK(is_compatible_cycle(c5, IncompatSystem(5), ring));

    IncompatSystem f(5);
    f.add(c5, 1, 0, 2);
    CHECK_FALSE(is_compatible_cycle(c5, f, ring));

    auto k3 = fixture::complete(3);
    IncompatSystem g3(3);
    g3.add(k3, 2, 0, 1);
    CHECK(is_compatible_path(k3, g3, Path{0, 1, 2}));

    CHECK_THROWS_AS(is_compatible_path(c5, f, Path{0, 2}), GraphError);
    CHECK_THROWS_AS(is_compatible_cycle(c5, f, Cycle{0, 1, 2}), GraphError);
}

TEST_CASE("edges_between")
{
    auto k4 = fixture::complete(4);
    CHECK(edges_between(k4, VertexSet(4, {0, 1}), VertexSet(4, {2, 3})) == 4);
    auto k3 = fixture::complete(3);
    auto all = VertexSet::full(3);
    CHECK(edges_between(k3, all, all) == 6);
    CHECK(internal_edges(k3, all) == 3);
    CHECK(edges_between(fixture::cycle(5), VertexSet(5, {0}), VertexSet(5, {1, 4})) == 2);
}

TEST_CASE("property: boundedness equals the brute-force double loop")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int n = 5 + static_cast<int>(seed % 8);
        auto g = gen_random_dirac(n, 0.25, seed);
        auto f = gen_random_bounded_system(g, static_cast<int>(seed % 4), seed + 99, 0.7);
        CHECK(boundedness(g, f) == ref::boundedness(g, f));
    }
}

TEST_CASE("property: path compatibility equals the per-pair queries")
{
    Rng rng(17);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto g = fixture::complete(7);
        auto f = gen_random_bounded_system(g, 2, seed);
        std::vector<Vertex> p{0, 1, 2, 3, 4, 5, 6};
        rng.shuffle(p);
        bool pairwise = true;
        auto edges = path_edges(p);
        for (std::size_t i = 1; i < edges.size(); ++i)
            pairwise = pairwise && is_compatible_pair(f, edges[i - 1], edges[i]);
        CHECK(is_compatible_path(g, f, p) == pairwise);
        CHECK(is_compatible_path(g, f, p) == ref::is_compatible_path(g, f, p));
    }
}

TEST_CASE("property: degree-sum cut identity 2e(A,Ac) + 2e(A) + 2e(Ac) = 2|E|")
{
    Rng rng(3);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = gen_random_dirac(12, 0.2, seed);
        VertexSet a(12);
        for (Vertex v = 0; v < 12; ++v)
            if (rng.below(2))
                a.insert(v);
        auto b = a.complement();
        CHECK(2 * edges_between(g, a, b) + 2 * internal_edges(g, a) + 2 * internal_edges(g, b) == 2L * g.edge_count());
        CHECK(edges_between(g, a, a) == 2 * internal_edges(g, a));
    }
}

TEST_CASE("system stores pairs symmetrically and removes them")
{
    auto k4 = fixture::complete(4);
    IncompatSystem f(4);
    f.add(k4, 0, 3, 1);
    CHECK(f.incompatible(0, 1, 3));
    CHECK(f.incompatible(0, 3, 1));
    CHECK(f.pairs() == std::vector<Conflict>{{0, 1, 3}});
    CHECK(f.conflict_degree(0, 1) == 1);
    f.remove(0, 1, 3);
    CHECK(f.empty());
}

TEST_CASE("induced subgraph relabels")
{
    auto g = fixture::cycle(6);
    std::vector<Vertex> keep{1, 2, 3};
    auto h = g.induced(keep);
    CHECK(h.order() == 3);
    CHECK(h.adjacent(0, 1));
    CHECK(h.adjacent(1, 2));
    CHECK_FALSE(h.adjacent(0, 2));
}
