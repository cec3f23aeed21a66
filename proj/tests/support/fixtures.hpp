#pragma once

#include <compat/graph.hpp>

#include <vector>

namespace fixture {

using compat::Edge;
using compat::Graph;
using compat::Vertex;

inline auto complete(int n) -> Graph
{
    Graph g(n);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            g.add_edge(a, b);
    return g;
}

inline auto cycle(int n) -> Graph
{
    Graph g(n);
    for (Vertex v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

/// K_{a,b} on {0..a-1} and {a..a+b-1}.
inline auto complete_bipartite(int a, int b) -> Graph
{
    Graph g(a + b);
    for (Vertex x = 0; x < a; ++x)
        for (Vertex y = a; y < a + b; ++y)
            g.add_edge(x, y);
    return g;
}

/// Two K_k sharing vertex k-1.
inline auto glued_cliques(int k) -> Graph
{
    Graph g(2 * k - 1);
    for (Vertex a = 0; a < k; ++a)
        for (Vertex b = a + 1; b < k; ++b) {
            g.add_edge(a, b);
            g.add_edge(a + k - 1, b + k - 1);
        }
    return g;
}

/// Two disjoint K_k on {0..k-1} and {k..2k-1} joined by the matching {i, k+i}.
inline auto cliques_with_matching(int k) -> Graph
{
    Graph g(2 * k);
    for (Vertex a = 0; a < k; ++a) {
        for (Vertex b = a + 1; b < k; ++b) {
            g.add_edge(a, b);
            g.add_edge(a + k, b + k);
        }
        g.add_edge(a, a + k);
    }
    return g;
}

} // namespace fixture
