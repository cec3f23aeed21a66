#include <compat/generators.hpp>
#include <compat/random.hpp>
#include <compat/rotation.hpp>

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "fixtures.hpp"
#include "reference.hpp"

using namespace compat;

namespace {
auto path_graph(int n) -> Graph
{
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

auto dirac() -> ThresholdProfile { return ThresholdProfile::dirac(1.0 / 64.0); }

auto random_path(const Graph & g, Rng & rng) -> Path
{
    // Greedy random walk without repeats.
    Path p{static_cast<Vertex>(rng.below(g.order()))};
    VertexSet used(g.order(), {p.front()});
    while (true) {
        auto options = (g.neighbors(p.back()) - used).to_vector();
        if (options.empty())
            break;
        auto next = options[rng.below(options.size())];
        used.insert(next);
        p.push_back(next);
    }
    return p;
}

auto edge_set(const std::vector<Edge> & edges) -> std::set<Edge> { return {edges.begin(), edges.end()}; }
}

TEST_CASE("bad_neighbors")
{
    auto h = path_graph(5);
    h.remove_edge(3, 4);
    h.add_edge(4, 1);
    Path p{0, 1, 2, 3};

    for (Vertex w = 0; w < 5; ++w)
        CHECK(bad_neighbors(h, IncompatSystem(5), p, w).empty());

    IncompatSystem succ(5);
    succ.add(h, 1, 4, 2);
    CHECK(bad_neighbors(h, succ, p, 4) == VertexSet(5, {1}));

    IncompatSystem pred(5);
    pred.add(h, 1, 4, 0);
    CHECK(bad_neighbors(h, pred, p, 4) == VertexSet(5, {1}));
}

TEST_CASE("is_gamma_good threshold")
{
    Graph g(11);
    for (Vertex v = 0; v + 1 < 10; ++v)
        g.add_edge(v, v + 1);
    g.add_edge(10, 1);
    g.add_edge(10, 3);
    Path p{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    CHECK(is_gamma_good(g, IncompatSystem(11), p, 10, 0.1));

    IncompatSystem f(11);
    f.add(g, 1, 10, 2);
    f.add(g, 3, 10, 4);
    CHECK(bad_neighbors(g, f, p, 10).count() == 2);
    CHECK_FALSE(is_gamma_good(g, f, p, 10, 0.1));
    CHECK(is_gamma_good(g, f, p, 10, 0.25));
}

TEST_CASE("correlated_count")
{
    auto k5 = fixture::complete(5);
    CHECK(correlated_count(k5, IncompatSystem(5), 1, 2) == 0);

    Graph star(3);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    IncompatSystem f(3);
    f.add(star, 0, 1, 2);
    CHECK(correlated_count(star, f, 1, 2) == 1);

    auto k33 = fixture::complete_bipartite(3, 3);
    CHECK(correlated_count(k33, IncompatSystem(6), 0, 3) == 0);
    CHECK_THROWS_AS(correlated_count(k5, IncompatSystem(5), 2, 2), GraphError);
}

TEST_CASE("is_smooth clauses")
{
    auto k5 = fixture::complete(5);
    ThresholdProfile plain;
    CHECK(is_smooth(k5, IncompatSystem(5), Path{3, 1, 4, 0}, plain));

    IncompatSystem f(5);
    f.add(k5, 1, 3, 4);
    CHECK_FALSE(is_smooth(k5, f, Path{3, 1, 4, 0}, plain));

    auto k22 = fixture::complete_bipartite(2, 2);
    std::vector<Vertex> partner{2, 3, 0, 1};
    VertexSet side_a(4, {0, 1});
    Path proper{0, 3, 1, 2};
    auto open = ThresholdProfile::almost_bipartite(1.0 / 64.0, partner, side_a, {}, VertexSet(4), VertexSet(4));
    CHECK(is_smooth(k22, IncompatSystem(4), proper, open));
    auto filtered
        = ThresholdProfile::almost_bipartite(1.0 / 64.0, partner, side_a, {}, VertexSet(4, {0}), VertexSet(4));
    CHECK_FALSE(is_smooth(k22, IncompatSystem(4), proper, filtered));
    auto filtered_b
        = ThresholdProfile::almost_bipartite(1.0 / 64.0, partner, side_a, {}, VertexSet(4), VertexSet(4, {2}));
    CHECK_FALSE(is_smooth(k22, IncompatSystem(4), proper, filtered_b));
}

TEST_CASE("profile invariants")
{
    auto p = ThresholdProfile::dirac(1.0 / 4.0);
    CHECK(p.good_frac <= 1.0);
    CHECK(p.corr_frac == doctest::Approx(0.5));
    ThresholdProfile bad;
    bad.rotation_depth = 0;
    CHECK_THROWS_AS(bad.validate(), GraphError);
    auto tier3 = dirac().relaxed(3);
    CHECK_FALSE(tier3.require_good);
    CHECK_FALSE(tier3.require_uncorrelated);
    CHECK_FALSE(tier3.apply_filters);
}

TEST_CASE("rotate")
{
    auto k5 = fixture::complete(5);
    Path p{0, 1, 2, 3, 4};
    CHECK(rotate(k5, p, 2) == Path{1, 0, 2, 3, 4});
    CHECK(rotate(k5, rotate(k5, p, 2), 2) == p);
    CHECK(rotate(k5, p, 4) == Path{3, 2, 1, 0, 4});

    auto c5 = fixture::cycle(5);
    CHECK_THROWS_AS(rotate(c5, p, 2), GraphError);
    CHECK_THROWS_AS(rotate(k5, p, 5), GraphError);
    CHECK_THROWS_AS(rotate(k5, p, 1), GraphError);
    CHECK_THROWS_AS(rotate(k5, p, 3, {Edge(2, 3)}), GraphError);
}

TEST_CASE("try_extend")
{
    auto g = path_graph(3);
    auto profile = dirac();
    CHECK(try_extend(g, IncompatSystem(3), Path{1, 2}, profile) == Path{0, 1, 2});
    CHECK_FALSE(try_extend(g, IncompatSystem(3), Path{0, 1, 2}, profile));

    // The only outside neighbor of v_0 conflicts with the first path edge.
    IncompatSystem f(3);
    f.add(g, 1, 0, 2);
    CHECK_FALSE(try_extend(g, f, Path{1, 2}, profile));
}

TEST_CASE("pivot_set examples agree with brute-force rotation enumeration")
{
    auto profile = dirac();
    auto check = [&](const Graph & g, const IncompatSystem & f, const Path & p, VertexSet expected) {
        auto x = pivot_set(g, f, p, profile);
        CHECK(x == expected);
        VertexSet brute(g.order());
        for (auto i : ref::smooth_rotations(g, f, p, profile.good_frac, profile.corr_frac))
            brute.insert(p[i]);
        CHECK(x == brute);
    };
    auto k5 = fixture::complete(5);
    check(k5, IncompatSystem(5), Path{0, 1, 2, 3, 4}, VertexSet(5, {2, 3, 4}));
    check(fixture::cycle(5), IncompatSystem(5), Path{0, 1, 2, 3, 4}, VertexSet(5, {4}));

    IncompatSystem f(5);
    f.add(k5, 3, 0, 4);
    f.add(k5, 3, 0, 2);
    check(k5, f, Path{0, 1, 2, 3, 4}, VertexSet(5, {2, 4}));

    CHECK_THROWS_AS(pivot_set(path_graph(3), IncompatSystem(3), Path{1, 2}, profile), GraphError);
}

TEST_CASE("reachable_endpoints")
{
    auto k5 = fixture::complete(5);
    Path p{0, 1, 2, 3, 4};

    auto one = dirac();
    one.rotation_depth = 1;
    auto atlas1 = reachable_endpoints(k5, IncompatSystem(5), p, one);
    VertexSet expected(5, {p.front()});
    pivot_set(k5, IncompatSystem(5), p, one).for_each([&](Vertex v) {
        auto pos = std::find(p.begin(), p.end(), v) - p.begin();
        expected.insert(p[pos - 1]);
    });
    CHECK(atlas1.endpoints(5) == expected);

    auto atlas3 = reachable_endpoints(k5, IncompatSystem(5), p, dirac());
    CHECK(atlas3.endpoints(5) == VertexSet(5, {0, 1, 2, 3}));

    auto g = path_graph(3);
    auto stuck = reachable_endpoints(g, IncompatSystem(3), Path{0, 1, 2}, dirac());
    CHECK(stuck.endpoints(3) == VertexSet(3, {0}));
}

TEST_CASE("extend_or_close examples")
{
    auto profile = dirac();
    auto c5 = fixture::cycle(5);
    auto closed = extend_or_close(c5, IncompatSystem(5), Path{0, 1, 2, 3, 4}, profile);
    REQUIRE(std::holds_alternative<ClosedCycle>(closed));
    CHECK(ref::is_compatible_hamilton(c5, IncompatSystem(5), std::get<ClosedCycle>(closed).cycle));

    auto k5 = fixture::complete(5);
    IncompatSystem f(5);
    f.add(k5, 0, 4, 1);
    auto rotated = extend_or_close(k5, f, Path{0, 1, 2, 3, 4}, profile);
    REQUIRE(std::holds_alternative<ClosedCycle>(rotated));
    CHECK(ref::is_compatible_hamilton(k5, f, std::get<ClosedCycle>(rotated).cycle));
    CHECK(ref::count_hamilton(k5, f) > 0);

    auto glued = fixture::glued_cliques(4);
    auto failed = extend_or_close(glued, IncompatSystem(7), Path{0, 1, 2, 3, 4, 5, 6}, profile);
    REQUIRE(std::holds_alternative<RotationFailure>(failed));
    auto & witness = std::get<RotationFailure>(failed);
    CHECK_FALSE(witness.first_round.empty());
    CHECK(witness.path.back() == 6);

    IncompatSystem blocked(5);
    blocked.add(k5, 0, 1, 2);
    CHECK_THROWS_AS(extend_or_close(k5, blocked, Path{1, 0, 2}, profile), GraphError);
}

TEST_CASE("property: rotation preserves vertices and is an involution")
{
    Rng rng(11);
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        auto g = gen_random_dirac(10, 0.3, seed);
        auto p = random_path(g, rng);
        for (int i = 2; i < static_cast<int>(p.size()); ++i) {
            if (! g.adjacent(p.front(), p[i]))
                continue;
            auto q = rotate(g, p, i);
            CHECK(q.size() == p.size());
            CHECK(std::is_permutation(q.begin(), q.end(), p.begin()));
            CHECK(q.back() == p.back());
            CHECK(q == ref::rotation(p, i));
            auto added = edge_set(path_edges(q));
            auto before = edge_set(path_edges(p));
            CHECK(added.contains(Edge(p.front(), p[i])));
            CHECK_FALSE(added.contains(Edge(p[i - 1], p[i])));
            CHECK(before.size() == added.size());
            CHECK(rotate(g, q, i) == p);
        }
    }
}

TEST_CASE("property: PathState caches equal recomputation")
{
    Rng rng(5);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = gen_random_dirac(9, 0.3, seed);
        auto f = gen_random_bounded_system(g, 2, seed);
        auto p = random_path(g, rng);
        if (! is_compatible_path(g, f, p))
            continue;
        PathState state(g, f, p);
        CHECK(state.front_bad() == ref::bad_count(g, f, p, p.front()));
        CHECK(state.back_bad() == ref::bad_count(g, f, p, p.back()));
    }
}

TEST_CASE("property: pivot sets and atlases only hold smooth rotations")
{
    Rng rng(23);
    int atlases = 0;
    for (std::uint64_t seed = 0; seed < 600; ++seed) {
        int n = 6 + static_cast<int>(seed % 6);
        auto g = gen_random_dirac(n, 0.2, seed);
        auto f = gen_random_bounded_system(g, 1 + static_cast<int>(seed % 2), seed + 7);
        auto profile = dirac().relaxed(static_cast<int>(seed % 2));
        auto p = random_path(g, rng);
        if (! is_smooth(g, f, p, profile))
            continue;
        double good = profile.require_good ? profile.good_frac : 2.0;
        double corr = profile.require_uncorrelated ? profile.corr_frac : 2.0;

        auto positions = pivot_positions(g, f, p, profile);
        auto brute = ref::smooth_rotations(g, f, p, good, corr);
        for (auto i : positions)
            CHECK(std::find(brute.begin(), brute.end(), i) != brute.end());

        auto atlas = reachable_endpoints(g, f, p, profile);
        auto reach = ref::reachable(g, f, p, good, corr, profile.rotation_depth);
        ++atlases;
        for (auto v : atlas.order) {
            auto & entry = atlas.at(v);
            CHECK(entry.path.front() == v);
            CHECK(entry.path.back() == p.back());
            CHECK(entry.rounds <= profile.rotation_depth);
            CHECK(is_smooth(g, f, entry.path, profile));
            CHECK(ref::smooth(g, f, entry.path, good, corr));
            CHECK(reach.contains(v));
        }
    }
    CHECK(atlases > 20);
}

TEST_CASE("property: closed cycles are compatible, contain the path and respect the budget")
{
    Rng rng(31);
    int closes = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        int n = 6 + static_cast<int>(seed % 7);
        auto g = gen_random_dirac(n, 0.15, seed);
        auto f = gen_random_bounded_system(g, 1, seed + 3);
        auto profile = dirac();
        auto p = random_path(g, rng);
        p.resize(std::max<std::size_t>(2, p.size() / 2));
        if (! is_smooth(g, f, p, profile))
            continue;
        auto result = extend_or_close(g, f, p, profile);
        if (! std::holds_alternative<ClosedCycle>(result))
            continue;
        auto & closed = std::get<ClosedCycle>(result);
        ++closes;
        CHECK(is_compatible_cycle(g, f, closed.cycle));
        for (auto v : p)
            CHECK(std::find(closed.cycle.begin(), closed.cycle.end(), v) != closed.cycle.end());
        auto path_set = edge_set(path_edges(p));
        int added = 0;
        for (auto & e : cycle_edges(closed.cycle))
            added += path_set.contains(e) ? 0 : 1;
        int fresh = static_cast<int>(closed.cycle.size() - p.size());
        CHECK(added == closed.added_edges);
        CHECK(fresh == closed.new_vertices);
        CHECK(added <= 3 * fresh + 4);
    }
    CHECK(closes > 50);
}

TEST_CASE("property: correlated_count matches the definition")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = gen_random_dirac(9, 0.3, seed);
        auto f = gen_random_bounded_system(g, 3, seed);
        for (Vertex a = 0; a < 9; ++a)
            for (Vertex b = a + 1; b < 9; ++b)
                CHECK(correlated_count(g, f, a, b) == ref::correlated(g, f, a, b));
    }
}
