#include <compat/graph.hpp>

#include <algorithm>

using std::span;
using std::to_string;
using std::vector;

namespace compat {

Edge::Edge(Vertex a, Vertex b) :
    u(std::min(a, b)), v(std::max(a, b))
{
    if (a == b)
        throw GraphError("self-loop at vertex " + to_string(a));
}

auto shared_vertex(const Edge & a, const Edge & b) -> Vertex
{
    if (a == b)
        return -1;
    if (a.u == b.u || a.u == b.v)
        return a.u;
    if (a.v == b.u || a.v == b.v)
        return a.v;
    return -1;
}

Graph::Graph(int n) :
    _n(n)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    _rows.assign(n, VertexSet(n));
}

Graph::Graph(int n, span<const Edge> edges) :
    Graph(n)
{
    for (auto & e : edges)
        add_edge(e.u, e.v);
}

auto Graph::check_vertex(Vertex v) const -> void
{
    if (v < 0 || v >= _n)
        throw GraphError("vertex " + to_string(v) + " out of range for n=" + to_string(_n));
}

auto Graph::adjacent(Vertex a, Vertex b) const -> bool
{
    if (a < 0 || a >= _n)
        return false;
    return _rows[a].contains(b);
}

auto Graph::min_degree() const -> int
{
    int best = _n == 0 ? 0 : _n;
    for (Vertex v = 0; v < _n; ++v)
        best = std::min(best, degree(v));
    return best;
}

auto Graph::max_degree() const -> int
{
    int best = 0;
    for (Vertex v = 0; v < _n; ++v)
        best = std::max(best, degree(v));
    return best;
}

auto Graph::edges() const -> vector<Edge>
{
    vector<Edge> result;
    result.reserve(_edge_count);
    for (Vertex u = 0; u < _n; ++u)
        _rows[u].for_each([&](Vertex v) {
            if (u < v)
                result.emplace_back(u, v);
        });
    return result;
}

auto Graph::add_edge(Vertex a, Vertex b) -> void
{
    check_vertex(a);
    check_vertex(b);
    if (a == b)
        throw GraphError("self-loop at vertex " + to_string(a));
    if (_rows[a].contains(b))
        throw GraphError("duplicate edge {" + to_string(a) + "," + to_string(b) + "}");
    _rows[a].insert(b);
    _rows[b].insert(a);
    ++_edge_count;
}

auto Graph::remove_edge(Vertex a, Vertex b) -> void
{
    if (! adjacent(a, b))
        throw GraphError("no edge {" + to_string(a) + "," + to_string(b) + "}");
    _rows[a].erase(b);
    _rows[b].erase(a);
    --_edge_count;
}

auto Graph::induced(span<const Vertex> keep) const -> Graph
{
    Graph result(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (adjacent(keep[i], keep[j]))
                result.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return result;
}

IncompatSystem::IncompatSystem(int n) :
    _table(n)
{
}

auto IncompatSystem::add(const Graph & g, Vertex at, Vertex a, Vertex b) -> void
{
    if (g.order() != order())
        throw GraphError("system and graph disagree on vertex count");
    if (a == b)
        throw GraphError("incompatibility pair needs two distinct edges");
    if (! g.adjacent(at, a) || ! g.adjacent(at, b))
        throw GraphError("incompatibility at " + to_string(at) + " references a missing edge ({" + to_string(at) + ","
            + to_string(a) + "} or {" + to_string(at) + "," + to_string(b) + "})");
    auto & row = _table[at];
    row.try_emplace(a, order()).first->second.insert(b);
    row.try_emplace(b, order()).first->second.insert(a);
}

auto IncompatSystem::remove(Vertex at, Vertex a, Vertex b) -> void
{
    if (at < 0 || at >= order())
        return;
    auto & row = _table[at];
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        auto it = row.find(x);
        if (it == row.end())
            continue;
        it->second.erase(y);
        if (it->second.empty())
            row.erase(it);
    }
}

auto IncompatSystem::incompatible(Vertex at, Vertex a, Vertex b) const -> bool
{
    if (at < 0 || at >= order())
        return false;
    auto & row = _table[at];
    auto it = row.find(a);
    return it != row.end() && it->second.contains(b);
}

auto IncompatSystem::incompatible(const Edge & e, const Edge & f) const -> bool
{
    auto at = shared_vertex(e, f);
    if (at < 0)
        return false;
    return incompatible(at, e.other(at), f.other(at));
}

auto IncompatSystem::conflict_degree(Vertex at, Vertex a) const -> int
{
    if (at < 0 || at >= order())
        return 0;
    auto it = _table[at].find(a);
    return it == _table[at].end() ? 0 : it->second.count();
}

auto IncompatSystem::conflicts(Vertex at, Vertex a) const -> VertexSet
{
    auto it = _table[at].find(a);
    return it == _table[at].end() ? VertexSet(order()) : it->second;
}

auto IncompatSystem::boundedness() const -> int
{
    int best = 0;
    for (auto & row : _table)
        for (auto & [a, set] : row)
            best = std::max(best, set.count());
    return best;
}

auto IncompatSystem::pair_count() const -> int
{
    int total = 0;
    for (auto & row : _table)
        for (auto & [a, set] : row)
            total += set.count();
    return total / 2;
}

auto IncompatSystem::pairs() const -> vector<Conflict>
{
    vector<Conflict> result;
    for (Vertex at = 0; at < order(); ++at)
        for (auto & [a, set] : _table[at])
            set.for_each([&](Vertex b) {
                if (a < b)
                    result.push_back(Conflict{at, a, b});
            });
    return result;
}

auto new_graph(int n, span<const Edge> edges) -> Graph
{
    return Graph(n, edges);
}

auto is_dirac(const Graph & g) -> bool
{
    int n = g.order();
    return n >= 3 && g.min_degree() >= (n + 1) / 2;
}

auto boundedness(const Graph & g, const IncompatSystem & f) -> int
{
    if (f.order() != g.order())
        throw GraphError("system and graph disagree on vertex count");
    return f.boundedness();
}

auto is_compatible_pair(const IncompatSystem & f, const Edge & e, const Edge & e2) -> bool
{
    auto at = shared_vertex(e, e2);
    if (at < 0)
        throw GraphError("edges must share exactly one vertex");
    return ! f.incompatible(at, e.other(at), e2.other(at));
}

auto is_valid_path(const Graph & g, span<const Vertex> p) -> bool
{
    if (p.empty())
        return false;
    VertexSet seen(g.order());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || p[i] >= g.order() || seen.contains(p[i]))
            return false;
        seen.insert(p[i]);
        if (i > 0 && ! g.adjacent(p[i - 1], p[i]))
            return false;
    }
    return true;
}

auto is_valid_cycle(const Graph & g, span<const Vertex> c) -> bool
{
    return c.size() >= 3 && is_valid_path(g, c) && g.adjacent(c.back(), c.front());
}

auto is_hamilton_cycle(const Graph & g, span<const Vertex> c) -> bool
{
    return static_cast<int>(c.size()) == g.order() && is_valid_cycle(g, c);
}

auto is_compatible_path(const Graph & g, const IncompatSystem & f, span<const Vertex> p) -> bool
{
    if (! is_valid_path(g, p))
        throw GraphError("sequence is not a path of the graph");
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
        if (f.incompatible(p[i], p[i - 1], p[i + 1]))
            return false;
    return true;
}

auto is_compatible_cycle(const Graph & g, const IncompatSystem & f, span<const Vertex> c) -> bool
{
    if (! is_valid_cycle(g, c))
        throw GraphError("sequence is not a cycle of the graph");
    auto k = c.size();
    for (std::size_t i = 0; i < k; ++i)
        if (f.incompatible(c[i], c[(i + k - 1) % k], c[(i + 1) % k]))
            return false;
    return true;
}

auto is_compatible_hamilton_cycle(const Graph & g, const IncompatSystem & f, span<const Vertex> c) -> bool
{
    return is_hamilton_cycle(g, c) && is_compatible_cycle(g, f, c);
}

auto path_edges(span<const Vertex> p) -> vector<Edge>
{
    vector<Edge> result;
    for (std::size_t i = 1; i < p.size(); ++i)
        result.emplace_back(p[i - 1], p[i]);
    return result;
}

auto cycle_edges(span<const Vertex> c) -> vector<Edge>
{
    auto result = path_edges(c);
    if (c.size() >= 3)
        result.emplace_back(c.back(), c.front());
    return result;
}

auto edges_between(const Graph & g, const VertexSet & a, const VertexSet & b) -> long
{
    long total = 0;
    a.for_each([&](Vertex v) { total += g.neighbors(v).intersect_count(b); });
    return total;
}

auto internal_edges(const Graph & g, const VertexSet & x) -> long
{
    return edges_between(g, x, x) / 2;
}

} // namespace compat
