#pragma once

#include <compat/vertex_set.hpp>

#include <compare>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace compat {

/// Raised for malformed graphs, systems, paths and queries.
class GraphError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Unordered pair of distinct vertices, stored with u < v.
struct Edge
{
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b);

    auto contains(Vertex x) const -> bool { return u == x || v == x; }
    auto other(Vertex x) const -> Vertex { return x == u ? v : u; }

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Shared vertex of two edges that meet in exactly one vertex, or -1.
auto shared_vertex(const Edge & a, const Edge & b) -> Vertex;

using Path = std::vector<Vertex>;
using Cycle = std::vector<Vertex>;

/// Simple undirected graph with bitset adjacency rows.
class Graph
{
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);

    auto order() const -> int { return _n; }
    auto edge_count() const -> int { return _edge_count; }

    auto adjacent(Vertex a, Vertex b) const -> bool;
    auto neighbors(Vertex v) const -> const VertexSet & { return _rows[v]; }
    auto degree(Vertex v) const -> int { return _rows[v].count(); }
    auto min_degree() const -> int;
    auto max_degree() const -> int;

    /// Edges in lexicographic order.
    auto edges() const -> std::vector<Edge>;

    auto add_edge(Vertex a, Vertex b) -> void;
    auto remove_edge(Vertex a, Vertex b) -> void;
    auto has_edge(const Edge & e) const -> bool { return adjacent(e.u, e.v); }

    /// Subgraph induced by `keep`, relabelled so that keep[i] becomes i.
    auto induced(std::span<const Vertex> keep) const -> Graph;

    friend auto operator==(const Graph &, const Graph &) -> bool = default;

private:
    auto check_vertex(Vertex v) const -> void;

    int _n = 0;
    int _edge_count = 0;
    std::vector<VertexSet> _rows;
};

/// Incompatibility pair at vertex v between edges {v,a} and {v,b}, with a < b.
struct Conflict
{
    Vertex at = 0;
    Vertex a = 0;
    Vertex b = 0;

    friend auto operator<=>(const Conflict &, const Conflict &) = default;
};

/// Per-vertex families of incompatible incident edge pairs.
///
/// An edge {v,a} incident to v is keyed at v by its far endpoint a. Each
/// stored pair is kept in both directions so lookups are symmetric.
class IncompatSystem
{
public:
    IncompatSystem() = default;
    explicit IncompatSystem(int n);

    auto order() const -> int { return static_cast<int>(_table.size()); }

    /// Marks {at,a} and {at,b} incompatible. Both edges must exist in g.
    auto add(const Graph & g, Vertex at, Vertex a, Vertex b) -> void;
    auto remove(Vertex at, Vertex a, Vertex b) -> void;

    auto incompatible(Vertex at, Vertex a, Vertex b) const -> bool;
    auto incompatible(const Edge & e, const Edge & f) const -> bool;

    /// Number of edges incident to `at` that conflict with {at,a}.
    auto conflict_degree(Vertex at, Vertex a) const -> int;

    /// Far endpoints b with {at,b} incompatible with {at,a}.
    auto conflicts(Vertex at, Vertex a) const -> VertexSet;

    auto boundedness() const -> int;
    auto pair_count() const -> int;
    auto empty() const -> bool { return pair_count() == 0; }

    /// All stored pairs, each once, sorted.
    auto pairs() const -> std::vector<Conflict>;

    friend auto operator==(const IncompatSystem &, const IncompatSystem &) -> bool = default;

private:
    std::vector<std::map<Vertex, VertexSet>> _table;
};

auto new_graph(int n, std::span<const Edge> edges) -> Graph;

auto is_dirac(const Graph & g) -> bool;

auto boundedness(const Graph & g, const IncompatSystem & f) -> int;

/// True iff the two incident edges are compatible at their shared vertex.
auto is_compatible_pair(const IncompatSystem & f, const Edge & e, const Edge & e2) -> bool;

auto is_valid_path(const Graph & g, std::span<const Vertex> p) -> bool;
auto is_valid_cycle(const Graph & g, std::span<const Vertex> c) -> bool;
auto is_hamilton_cycle(const Graph & g, std::span<const Vertex> c) -> bool;

/// Throws GraphError when p is not a path of g.
auto is_compatible_path(const Graph & g, const IncompatSystem & f, std::span<const Vertex> p) -> bool;
/// Throws GraphError when c is not a cycle of g.
auto is_compatible_cycle(const Graph & g, const IncompatSystem & f, std::span<const Vertex> c) -> bool;

auto is_compatible_hamilton_cycle(const Graph & g, const IncompatSystem & f, std::span<const Vertex> c) -> bool;

auto path_edges(std::span<const Vertex> p) -> std::vector<Edge>;
auto cycle_edges(std::span<const Vertex> c) -> std::vector<Edge>;

/// e(A,B) counted with multiplicity, so e(X,X) = 2 e(X).
auto edges_between(const Graph & g, const VertexSet & a, const VertexSet & b) -> long;
auto internal_edges(const Graph & g, const VertexSet & x) -> long;

} // namespace compat
