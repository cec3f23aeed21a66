#include <compat/rotation.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

using std::optional;
using std::set;
using std::vector;

namespace compat {

namespace {
    auto clamp_fraction(double x) -> double { return std::clamp(x, 0.0, 1.0); }

    auto edge_set(const Path & p) -> set<Edge>
    {
        auto edges = path_edges(p);
        return set<Edge>(edges.begin(), edges.end());
    }

    auto count_new_edges(const vector<Edge> & edges, const set<Edge> & base) -> int
    {
        return static_cast<int>(std::count_if(edges.begin(), edges.end(), [&](const Edge & e) { return ! base.contains(e); }));
    }

    auto closes_compatibly(const Graph & g, const IncompatSystem & f, const Path & q) -> bool
    {
        auto len = q.size();
        if (len < 3)
            return false;
        auto u = q.front(), last = q.back();
        return g.adjacent(u, last) && ! f.incompatible(u, q[1], last) && ! f.incompatible(last, q[len - 2], u);
    }

    auto tier_key(const ThresholdProfile & p) { return std::tuple{p.require_good, p.require_uncorrelated, p.apply_filters}; }
}

auto ThresholdProfile::dirac(double mu, int depth) -> ThresholdProfile
{
    auto s = std::sqrt(mu);
    ThresholdProfile profile;
    profile.good_frac = clamp_fraction(8.0 * s);
    profile.bad_scan_frac = clamp_fraction(2.0 * s);
    profile.corr_frac = clamp_fraction(s);
    profile.rotation_depth = depth;
    return profile;
}

auto ThresholdProfile::almost_clique(double mu, Edge forced, int depth) -> ThresholdProfile
{
    auto profile = dirac(mu, depth);
    profile.forbidden_edges = {forced};
    return profile;
}

auto ThresholdProfile::almost_bipartite(double mu, vector<Vertex> partner, VertexSet side_a, vector<Edge> forced,
    VertexSet filter_a, VertexSet filter_b, int depth) -> ThresholdProfile
{
    auto profile = dirac(mu, depth);
    profile.require_uncorrelated = false;
    profile.partner = std::move(partner);
    profile.side_a = std::move(side_a);
    profile.forbidden_edges = std::move(forced);
    profile.start_filter = std::move(filter_a);
    profile.end_filter = std::move(filter_b);
    return profile;
}

auto ThresholdProfile::relaxed(int tier) const -> ThresholdProfile
{
    auto result = *this;
    if (tier >= 1)
        result.require_good = false;
    if (tier >= 2)
        result.require_uncorrelated = false;
    if (tier >= 3)
        result.apply_filters = false;
    return result;
}

auto ThresholdProfile::validate() const -> void
{
    for (auto x : {good_frac, bad_scan_frac, corr_frac})
        if (! (x >= 0.0 && x <= 1.0))
            throw GraphError("profile fractions must lie in [0,1]");
    if (rotation_depth < 1)
        throw GraphError("rotation depth must be at least 1");
}

PathState::PathState(const Graph & g, const IncompatSystem & f, Path path) :
    _path(std::move(path))
{
    if (! is_valid_path(g, _path))
        throw GraphError("sequence is not a path of the graph");
    _front_bad = bad_neighbors(g, f, _path, _path.front()).count();
    _back_bad = bad_neighbors(g, f, _path, _path.back()).count();
}

auto bad_neighbors(const Graph & g, const IncompatSystem & f, const Path & p, Vertex w) -> VertexSet
{
    VertexSet result(g.order());
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto v = p[i];
        if (v == w || ! g.adjacent(w, v))
            continue;
        bool bad = (i > 0 && p[i - 1] != w && f.incompatible(v, w, p[i - 1]))
            || (i + 1 < p.size() && p[i + 1] != w && f.incompatible(v, w, p[i + 1]));
        if (bad)
            result.insert(v);
    }
    return result;
}

auto cycle_bad_neighbors(const Graph & g, const IncompatSystem & f, const Cycle & c, Vertex w) -> VertexSet
{
    VertexSet result(g.order());
    auto k = c.size();
    for (std::size_t i = 0; i < k; ++i) {
        auto v = c[i];
        if (v == w || ! g.adjacent(w, v))
            continue;
        auto prev = c[(i + k - 1) % k], next = c[(i + 1) % k];
        if ((prev != w && f.incompatible(v, w, prev)) || (next != w && f.incompatible(v, w, next)))
            result.insert(v);
    }
    return result;
}

auto is_gamma_good(const Graph & g, const IncompatSystem & f, const Path & p, Vertex w, double gamma) -> bool
{
    return bad_neighbors(g, f, p, w).count() < gamma * static_cast<double>(p.size());
}

auto correlated_count(const Graph & g, const IncompatSystem & f, Vertex v1, Vertex v2) -> int
{
    if (v1 == v2)
        throw GraphError("correlation needs two distinct vertices");
    int count = 0;
    (g.neighbors(v1) & g.neighbors(v2)).for_each([&](Vertex w) {
        if (f.incompatible(w, v1, v2))
            ++count;
    });
    return count;
}

auto is_correlated(const Graph & g, const IncompatSystem & f, Vertex v1, Vertex v2, double frac) -> bool
{
    return correlated_count(g, f, v1, v2) >= frac * static_cast<double>(g.order());
}

auto is_smooth(const Graph & g, const IncompatSystem & f, const Path & p, const ThresholdProfile & profile) -> bool
{
    if (p.empty() || ! is_valid_path(g, p) || ! is_compatible_path(g, f, p))
        return false;
    auto v0 = p.front(), last = p.back();

    if (! profile.forbidden_edges.empty()) {
        auto edges = edge_set(p);
        for (auto & e : profile.forbidden_edges)
            if (! edges.contains(e))
                return false;
    }

    if (profile.bipartite()) {
        if (! profile.side_a.contains(v0) || profile.side_a.contains(last))
            return false;
        auto members = VertexSet::from_range(g.order(), p);
        for (auto v : p) {
            auto mate = profile.partner[v];
            if (mate < 0 || ! members.contains(mate))
                return false;
        }
    }

    if (profile.apply_filters && (profile.start_filter.contains(v0) || profile.end_filter.contains(last)))
        return false;

    if (profile.require_good) {
        auto limit = profile.good_frac * static_cast<double>(p.size());
        if (bad_neighbors(g, f, p, v0).count() >= limit || bad_neighbors(g, f, p, last).count() >= limit)
            return false;
    }

    if (profile.require_uncorrelated && v0 != last && is_correlated(g, f, v0, last, profile.corr_frac))
        return false;

    return true;
}

auto rotate(const Graph & g, const Path & p, int pivot, const vector<Edge> & forbidden) -> Path
{
    int last = static_cast<int>(p.size()) - 1;
    if (pivot < 2 || pivot > last)
        throw GraphError("pivot index out of range");
    if (! g.adjacent(p.front(), p[pivot]))
        throw GraphError("pivot is not a neighbor of the free endpoint");
    Edge broken(p[pivot - 1], p[pivot]);
    if (std::find(forbidden.begin(), forbidden.end(), broken) != forbidden.end())
        throw GraphError("rotation would break a forced edge");
    Path result(p.begin(), p.begin() + pivot);
    std::reverse(result.begin(), result.end());
    result.insert(result.end(), p.begin() + pivot, p.end());
    return result;
}

auto rotate(const Graph & g, const IncompatSystem & f, const PathState & p, int pivot,
    const ThresholdProfile & profile) -> PathState
{
    return PathState(g, f, rotate(g, p.path(), pivot, profile.forbidden_edges));
}

auto try_extend(const Graph & g, const IncompatSystem & f, const Path & p, const ThresholdProfile & profile)
    -> optional<Path>
{
    auto v0 = p.front();
    auto outside = g.neighbors(v0) - VertexSet::from_range(g.order(), p);
    optional<Path> found;
    outside.for_each([&](Vertex w) {
        if (found)
            return;
        Path candidate;
        if (profile.bipartite()) {
            auto mate = profile.partner[w];
            if (mate < 0 || std::find(p.begin(), p.end(), mate) != p.end())
                return;
            candidate.push_back(mate);
        }
        candidate.push_back(w);
        candidate.insert(candidate.end(), p.begin(), p.end());
        if (is_smooth(g, f, candidate, profile))
            found = std::move(candidate);
    });
    return found;
}

auto pivot_positions(const Graph & g, const IncompatSystem & f, const Path & p, const ThresholdProfile & profile)
    -> vector<int>
{
    int len = static_cast<int>(p.size());
    if (len < 3)
        return {};
    int n = g.order();
    auto v0 = p.front(), last = p.back();

    // B1: conflicts at v0 with the first path edge, plus (for goodness of the
    // fixed endpoint) conflicts involving the edges to v_l.
    VertexSet b1(n);
    g.neighbors(v0).for_each([&](Vertex w) {
        if (f.incompatible(v0, w, p[1]))
            b1.insert(w);
        if (profile.require_good && w != last) {
            if (f.incompatible(w, v0, last))
                b1.insert(w);
            if (g.adjacent(v0, last) && f.incompatible(v0, w, last))
                b1.insert(w);
        }
    });

    // B2: vertices unusable as new endpoints.
    VertexSet b2(n);
    if (profile.require_good) {
        auto limit = profile.bad_scan_frac * len;
        for (Vertex w = 0; w < n; ++w)
            if (bad_neighbors(g, f, p, w).count() >= limit)
                b2.insert(w);
    }
    if (profile.require_uncorrelated && ! profile.bipartite())
        for (Vertex w = 0; w < n; ++w)
            if (w != last && is_correlated(g, f, w, last, profile.corr_frac))
                b2.insert(w);
    if (profile.bipartite() && profile.apply_filters)
        b2 |= profile.start_filter;

    VertexSet b2_plus(n);
    for (int k = 0; k + 1 < len; ++k)
        if (b2.contains(p[k]))
            b2_plus.insert(p[k + 1]);

    // B3: pivots whose new edge conflicts along the path.
    VertexSet b3(n);
    if (profile.require_good)
        b3 = bad_neighbors(g, f, p, v0);
    else
        for (int i = 1; i + 1 < len; ++i)
            if (f.incompatible(p[i], v0, p[i + 1]))
                b3.insert(p[i]);
    if (profile.bipartite())
        for (auto & e : profile.forbidden_edges) {
            b3.insert(e.u);
            b3.insert(e.v);
        }

    auto excluded = b1 | b2_plus | b3;
    vector<int> result;
    for (int i = 2; i < len; ++i) {
        auto vi = p[i];
        if (! g.adjacent(v0, vi) || excluded.contains(vi))
            continue;
        Edge broken(p[i - 1], vi);
        if (std::find(profile.forbidden_edges.begin(), profile.forbidden_edges.end(), broken)
            != profile.forbidden_edges.end())
            continue;
        if (is_smooth(g, f, rotate(g, p, i), profile))
            result.push_back(i);
    }
    return result;
}

auto pivot_set(const Graph & g, const IncompatSystem & f, const Path & p, const ThresholdProfile & profile)
    -> VertexSet
{
    if (try_extend(g, f, p, profile))
        throw GraphError("pivot set requested for an extendable path");
    VertexSet result(g.order());
    for (auto i : pivot_positions(g, f, p, profile))
        result.insert(p[i]);
    return result;
}

auto reachable_endpoints(const Graph & g, const IncompatSystem & f, const Path & p, const ThresholdProfile & profile,
    EngineStats * stats) -> EndpointAtlas
{
    EndpointAtlas atlas;
    auto base = edge_set(p);
    atlas.order.push_back(p.front());
    atlas.entries.emplace(p.front(), AtlasEntry{p, 0, 0});
    if (stats)
        ++stats->atlas_builds;

    vector<Vertex> frontier{p.front()};
    for (int round = 1; round <= profile.rotation_depth && ! frontier.empty(); ++round) {
        vector<Vertex> next;
        for (auto u : frontier) {
            auto q = atlas.entries.at(u).path;
            for (auto i : pivot_positions(g, f, q, profile)) {
                auto r = rotate(g, q, i);
                if (stats)
                    ++stats->rotations;
                auto endpoint = r.front();
                if (atlas.contains(endpoint))
                    continue;
                auto added = count_new_edges(path_edges(r), base);
                atlas.entries.emplace(endpoint, AtlasEntry{std::move(r), round, added});
                atlas.order.push_back(endpoint);
                next.push_back(endpoint);
            }
        }
        frontier = std::move(next);
    }
    return atlas;
}

namespace {
    auto failure_from(const Graph & g, const Path & p, const EndpointAtlas & atlas) -> RotationFailure
    {
        int n = g.order();
        RotationFailure failure{p, atlas.endpoints(n), VertexSet(n), VertexSet(n), VertexSet(n)};
        for (auto v : atlas.order)
            if (atlas.at(v).rounds == 1)
                failure.first_round.insert(v);
        failure.sparse_a = failure.first_round;

        VertexSet shifted(n);
        for (std::size_t i = 0; i < p.size(); ++i)
            if (failure.reachable.contains(p[i])) {
                if (i > 0)
                    shifted.insert(p[i - 1]);
                if (i + 1 < p.size())
                    shifted.insert(p[i + 1]);
            }
        failure.sparse_b = shifted.complement();
        return failure;
    }

    auto ordered_endpoints(const EndpointAtlas & atlas, const ThresholdProfile & profile) -> vector<Vertex>
    {
        vector<Vertex> result;
        for (auto v : atlas.order)
            if (profile.preferred_endpoints.contains(v))
                result.push_back(v);
        for (auto v : atlas.order)
            if (! profile.preferred_endpoints.contains(v))
                result.push_back(v);
        return result;
    }
}

auto extend_or_close_step(const Graph & g, const IncompatSystem & f, const Path & p,
    const ThresholdProfile & profile, EngineStats * stats) -> StepOutcome
{
    auto base = edge_set(p);
    vector<EndpointAtlas> atlases;
    atlases.push_back(reachable_endpoints(g, f, p, profile, stats));
    if (! profile.bipartite()) {
        Path reversed(p.rbegin(), p.rend());
        if (reversed != p && is_smooth(g, f, reversed, profile))
            atlases.push_back(reachable_endpoints(g, f, reversed, profile, stats));
    }

    for (auto & atlas : atlases)
        for (auto v : atlas.order) {
            auto & entry = atlas.at(v);
            if (entry.rounds > profile.rotation_depth - 1)
                continue;
            if (auto longer = try_extend(g, f, entry.path, profile)) {
                if (stats)
                    ++stats->extensions;
                auto added = count_new_edges(path_edges(*longer), base);
                return Extended{std::move(*longer), added};
            }
        }

    for (auto & atlas : atlases)
        for (auto v : ordered_endpoints(atlas, profile)) {
            auto & q = atlas.at(v).path;
            if (closes_compatibly(g, f, q)) {
                if (stats)
                    ++stats->closes;
                auto added = count_new_edges(cycle_edges(q), base);
                return ClosedCycle{q, added, 0, 0};
            }
        }

    return failure_from(g, p, atlases.front());
}

auto extend_or_close(const Graph & g, const IncompatSystem & f, const Path & p, const ThresholdProfile & profile,
    EngineStats * stats) -> CloseOutcome
{
    if (! is_smooth(g, f, p, profile))
        throw GraphError("extend_or_close needs a smooth path");
    auto base = edge_set(p);
    auto base_vertices = VertexSet::from_range(g.order(), p);
    Path current = p;
    int extensions = 0;
    while (true) {
        auto step = extend_or_close_step(g, f, current, profile, stats);
        if (auto * ext = std::get_if<Extended>(&step)) {
            current = std::move(ext->path);
            ++extensions;
            continue;
        }
        if (auto * closed = std::get_if<ClosedCycle>(&step)) {
            closed->added_edges = count_new_edges(cycle_edges(closed->cycle), base);
            closed->new_vertices = static_cast<int>(closed->cycle.size()) - base_vertices.count();
            closed->extensions = extensions;
            return std::move(*closed);
        }
        return std::get<RotationFailure>(std::move(step));
    }
}

auto extend_or_close_cascade(const Graph & g, const IncompatSystem & f, const Path & p,
    const ThresholdProfile & profile, const RelaxationTiers & tiers, EngineStats * stats) -> CascadeResult
{
    CascadeResult result;
    bool enabled[4] = {tiers.strict, tiers.drop_goodness, tiers.drop_correlation, tiers.plain};
    optional<decltype(tier_key(profile))> previous;
    for (int tier = 0; tier < 4; ++tier) {
        if (! enabled[tier])
            continue;
        auto relaxed = profile.relaxed(tier);
        if (previous && *previous == tier_key(relaxed))
            continue;
        previous = tier_key(relaxed);
        if (! is_smooth(g, f, p, relaxed))
            continue;
        auto outcome = extend_or_close(g, f, p, relaxed, stats);
        if (auto * closed = std::get_if<ClosedCycle>(&outcome)) {
            result.closed = std::move(*closed);
            result.tier = tier;
            return result;
        }
        if (! result.failure)
            result.failure = std::get<RotationFailure>(std::move(outcome));
    }
    return result;
}

} // namespace compat
