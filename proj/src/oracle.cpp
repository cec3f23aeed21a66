#include <compat/oracle.hpp>

#include <algorithm>

using std::vector;

namespace compat {

namespace {
    class Search
    {
    public:
        Search(const Graph & g, const IncompatSystem & f, const OracleOptions & options) :
            _g(g), _f(f), _options(options), _n(g.order()), _visited(g.order()), _required(g.order())
        {
            for (auto & e : options.required) {
                _required[e.u].push_back(e.v);
                _required[e.v].push_back(e.u);
            }
        }

        auto run() -> OracleResult
        {
            if (_n < 3)
                return finish();
            for (auto & e : _options.required)
                if (! _g.has_edge(e))
                    return finish();
            _path.push_back(0);
            _visited.insert(0);
            descend();
            return finish();
        }

    private:
        auto finish() -> OracleResult
        {
            _result.found = _result.cycle.has_value();
            if (_options.count_all)
                _result.count = _count;
            return std::move(_result);
        }

        auto done() const -> bool { return ! _options.count_all && _result.cycle.has_value(); }

        // An interior vertex is fixed; every required edge at it must be one of its path edges.
        auto interior_ok(Vertex v, Vertex prev, Vertex next) const -> bool
        {
            if (v == 0)
                return true;
            return std::all_of(_required[v].begin(), _required[v].end(), [&](Vertex x) { return x == prev || x == next; });
        }

        auto remainder_feasible() const -> bool
        {
            auto last = _path.back();
            auto open = _visited.complement();
            auto ends = open;
            ends.insert(last);
            ends.insert(0);
            bool ok = true;
            open.for_each([&](Vertex u) {
                if (ok && (_g.neighbors(u) & ends).count() < 2)
                    ok = false;
            });
            if (! ok || (_g.neighbors(0) & (open | VertexSet(_n, {last}))).empty())
                return false;

            // Unvisited vertices must all be reachable from the current end.
            auto seen = VertexSet(_n, {last});
            vector<Vertex> stack{last};
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                (_g.neighbors(v) & open).for_each([&](Vertex w) {
                    if (! seen.contains(w)) {
                        seen.insert(w);
                        stack.push_back(w);
                    }
                });
            }
            return (open - seen).empty();
        }

        auto closes() const -> bool
        {
            auto last = _path.back();
            auto prev = _path[_path.size() - 2];
            if (! _g.adjacent(last, 0) || _path[1] > last)
                return false;
            if (_f.incompatible(last, prev, 0) || _f.incompatible(0, _path[1], last))
                return false;
            return interior_ok(last, prev, 0) && required_at_anchor_ok();
        }

        auto required_at_anchor_ok() const -> bool
        {
            return std::all_of(_required[0].begin(), _required[0].end(), [&](Vertex x) { return x == _path[1] || x == _path.back(); });
        }

        auto descend() -> void
        {
            ++_result.nodes_explored;
            auto last = _path.back();
            if (static_cast<int>(_path.size()) == _n) {
                if (closes()) {
                    ++_count;
                    if (! _result.cycle)
                        _result.cycle = _path;
                }
                return;
            }
            if (_path.size() > 1 && ! remainder_feasible())
                return;
            auto candidates = _g.neighbors(last) - _visited;
            candidates.for_each([&](Vertex w) {
                if (done())
                    return;
                if (_path.size() > 1) {
                    auto prev = _path[_path.size() - 2];
                    if (_f.incompatible(last, prev, w) || ! interior_ok(last, prev, w))
                        return;
                }
                _path.push_back(w);
                _visited.insert(w);
                descend();
                _visited.erase(w);
                _path.pop_back();
            });
        }

        const Graph & _g;
        const IncompatSystem & _f;
        const OracleOptions & _options;
        int _n;
        VertexSet _visited;
        vector<vector<Vertex>> _required;
        Path _path;
        long _count = 0;
        OracleResult _result;
    };

    auto longest_from(const Graph & g, const IncompatSystem & f, Path & path, VertexSet & visited, int best) -> int
    {
        auto anchor = path.front(), last = path.back();
        auto len = static_cast<int>(path.size());
        if (len >= 3 && len > best && g.adjacent(last, anchor) && ! f.incompatible(last, path[len - 2], anchor)
            && ! f.incompatible(anchor, path[1], last))
            best = len;
        if (best == g.order())
            return best;
        auto candidates = g.neighbors(last) - visited;
        candidates.for_each([&](Vertex w) {
            if (w < anchor || best == g.order())
                return;
            if (len > 1 && f.incompatible(last, path[len - 2], w))
                return;
            path.push_back(w);
            visited.insert(w);
            best = longest_from(g, f, path, visited, best);
            visited.erase(w);
            path.pop_back();
        });
        return best;
    }
}

auto exhaustive_compatible_hamilton(const Graph & g, const IncompatSystem & f, bool count_all) -> OracleResult
{
    OracleOptions options;
    options.count_all = count_all;
    return exhaustive_compatible_hamilton(g, f, options);
}

auto exhaustive_compatible_hamilton(const Graph & g, const IncompatSystem & f, const OracleOptions & options)
    -> OracleResult
{
    return Search(g, f, options).run();
}

auto max_compatible_cycle_len(const Graph & g, const IncompatSystem & f) -> int
{
    int best = 0;
    for (Vertex s = 0; s < g.order() && best < g.order(); ++s) {
        Path path{s};
        VertexSet visited(g.order(), {s});
        best = longest_from(g, f, path, visited, best);
    }
    return best;
}

} // namespace compat
