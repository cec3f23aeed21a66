#pragma once

#include <compat/graph.hpp>

#include <cstdint>
#include <map>
#include <string>

namespace compat {

using EdgeColoring = std::map<Edge, int>;

/// Two cliques on {0..k-1} and {k-1..2k-2} sharing vertex k-1.
auto gen_two_cliques(int k) -> Graph;

/// K_{k,k-1} on parts {0..k-1} and {k..2k-2}.
auto gen_complete_bipartite(int k) -> Graph;

struct ColoredInstance
{
    Graph graph;
    IncompatSystem system;
    EdgeColoring coloring;
    /// Degree of each color class.
    int regularity = 0;
    /// True when k is odd and the color classes use regularity k + 1.
    bool adjusted = false;
};

/// Union of two edge-disjoint circulant graphs on Z_{4k-1}, red with offsets
/// 1..a and blue with offsets a+1..2a, where 2a is k rounded up to even.
/// Incident edges of the same color are incompatible.
auto gen_bollobas_erdos(int k) -> ColoredInstance;

/// Planted Hamilton cycle, degree floor ceil(n/2), then each missing pair
/// independently with probability extra_density.
auto gen_random_dirac(int n, double extra_density, std::uint64_t seed) -> Graph;

/// K_{m,m} on {0..m-1} and {m..2m-1} minus `removed` random edges, never
/// removing the matching {i, m+i}.
auto gen_near_bipartite(int m, int removed, std::uint64_t seed) -> Graph;

/// Random Δ-bounded system: at every vertex, incident pairs in random order
/// are kept with probability `fill` while both edges stay under the cap.
auto gen_random_bounded_system(const Graph & g, int delta, std::uint64_t seed, double fill = 1.0) -> IncompatSystem;

/// Systems for increasing caps, each containing the previous one.
auto gen_nested_systems(const Graph & g, const std::vector<int> & deltas, std::uint64_t seed, double fill = 1.0)
    -> std::vector<IncompatSystem>;

/// Incident same-color pairs become incompatible. Throws if an edge is uncolored.
auto gen_system_from_coloring(const Graph & g, const EdgeColoring & coloring) -> IncompatSystem;

/// Forbids every pair of edges at v.
auto gen_blocking_system(const Graph & g, Vertex v) -> IncompatSystem;

struct GenSpec
{
    std::string family;
    int n = 0;
    int k = 0;
    int m = 0;
    std::uint64_t seed = 0;
    double density = 0.0;
    /// Random bounded system cap for random families; negative means none.
    int delta = -1;
    double fill = 1.0;
    int removed = 0;
};

struct GeneratedInstance
{
    Graph graph;
    IncompatSystem system;
    std::vector<std::string> notes;
};

auto generator_families() -> std::vector<std::string>;

/// Dispatches on spec.family and checks the family's postconditions.
/// Throws std::invalid_argument on bad parameters.
auto generate(const GenSpec & spec) -> GeneratedInstance;

} // namespace compat
