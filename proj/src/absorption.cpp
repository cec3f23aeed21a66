#include <compat/absorption.hpp>

#include <algorithm>

using std::optional;
using std::vector;

namespace compat {

namespace {
    auto wrap(int i, int k) -> int { return ((i % k) + k) % k; }

    auto cycle_bad_set(const Graph & g, const IncompatSystem & f, const Cycle & c, const ThresholdProfile & profile)
        -> VertexSet
    {
        VertexSet bad(g.order());
        if (! profile.require_good)
            return bad;
        auto limit = profile.bad_scan_frac * static_cast<double>(c.size());
        for (Vertex w = 0; w < g.order(); ++w)
            if (cycle_bad_neighbors(g, f, c, w).count() >= limit)
                bad.insert(w);
        return bad;
    }

    auto is_forbidden(const ThresholdProfile & profile, const Edge & e) -> bool
    {
        auto & forced = profile.forbidden_edges;
        return std::find(forced.begin(), forced.end(), e) != forced.end();
    }

    // Positions p on the cycle with c[p] adjacent to `hub`, c[p] outside
    // `avoid`, and both cycle neighbors outside `bad`.
    auto splice_positions(const Graph & g, const Cycle & c, Vertex hub, const VertexSet & bad, const VertexSet & avoid)
        -> vector<int>
    {
        int k = static_cast<int>(c.size());
        vector<int> result;
        for (int p = 0; p < k; ++p) {
            auto v = c[p];
            if (! g.adjacent(hub, v) || bad.contains(v) || avoid.contains(v))
                continue;
            if (bad.contains(c[wrap(p - 1, k)]) || bad.contains(c[wrap(p + 1, k)]))
                continue;
            result.push_back(p);
        }
        return result;
    }

    // (v_{i+1}, ..., v_j, middle..., v_i, v_{i-1}, ..., v_{j+1}).
    auto splice(const Cycle & c, int i, int j, const vector<Vertex> & middle) -> Path
    {
        int k = static_cast<int>(c.size());
        Path path;
        for (int p = wrap(i + 1, k);; p = wrap(p + 1, k)) {
            path.push_back(c[p]);
            if (p == j)
                break;
        }
        path.insert(path.end(), middle.begin(), middle.end());
        for (int p = i;; p = wrap(p - 1, k)) {
            path.push_back(c[p]);
            if (p == wrap(j + 1, k))
                break;
        }
        return path;
    }

    // Flags for the two pairs created at v_j and v_i, in restoration order.
    auto splice_flags(const IncompatSystem & f, const Cycle & c, int i, int j, Vertex into_j, Vertex into_i)
        -> vector<RepairFlag>
    {
        int k = static_cast<int>(c.size());
        vector<RepairFlag> flags;
        auto vj = c[j], vj_prev = c[wrap(j - 1, k)];
        if (wrap(j - 1, k) != i && f.incompatible(vj, vj_prev, into_j))
            flags.push_back({Conflict{vj, std::min(vj_prev, into_j), std::max(vj_prev, into_j)}, Edge(vj_prev, vj)});
        auto vi = c[i], vi_prev = c[wrap(i - 1, k)];
        if (wrap(i - 1, k) != j && f.incompatible(vi, into_i, vi_prev))
            flags.push_back({Conflict{vi, std::min(vi_prev, into_i), std::max(vi_prev, into_i)}, Edge(vi_prev, vi)});
        return flags;
    }

    auto splice_allowed(const Cycle & c, int i, int j, const vector<RepairFlag> & flags,
        const ThresholdProfile & profile) -> bool
    {
        int k = static_cast<int>(c.size());
        if (is_forbidden(profile, Edge(c[i], c[wrap(i + 1, k)])) || is_forbidden(profile, Edge(c[j], c[wrap(j + 1, k)])))
            return false;
        return std::none_of(flags.begin(), flags.end(), [&](const RepairFlag & flag) { return is_forbidden(profile, flag.opened); });
    }
}

auto relaxed_system(const IncompatSystem & f, const vector<RepairFlag> & flags, std::size_t from) -> IncompatSystem
{
    auto result = f;
    for (auto k = from; k < flags.size(); ++k)
        result.remove(flags[k].pair.at, flags[k].pair.a, flags[k].pair.b);
    return result;
}

auto open_cycle(const Cycle & c, const Edge & edge, const ThresholdProfile & profile) -> optional<Path>
{
    int k = static_cast<int>(c.size());
    for (int p = 0; p < k; ++p) {
        auto q = wrap(p + 1, k);
        if (Edge(c[p], c[q]) != edge)
            continue;
        Path path;
        for (int s = 0; s < k; ++s)
            path.push_back(c[wrap(q + s, k)]);
        if (profile.bipartite() && ! profile.side_a.contains(path.front()))
            std::reverse(path.begin(), path.end());
        return path;
    }
    return std::nullopt;
}

auto absorption_candidates(const Graph & g, const IncompatSystem & f, const Cycle & c,
    const ThresholdProfile & profile, int limit) -> vector<Absorption>
{
    vector<Absorption> result;
    int n = g.order();
    int k = static_cast<int>(c.size());
    if (k < 3 || k >= n || limit <= 0)
        return result;
    auto on_cycle = VertexSet::from_range(n, c);
    auto bad = cycle_bad_set(g, f, c, profile);
    bool large = k >= (1.0 - profile.corr_frac) * n;

    // Outside vertices, those outside B_0 first while the cycle is short.
    vector<Vertex> outside;
    on_cycle.complement().for_each([&](Vertex z) {
        if (large || ! bad.contains(z))
            outside.push_back(z);
    });
    if (! large)
        on_cycle.complement().for_each([&](Vertex z) {
            if (bad.contains(z))
                outside.push_back(z);
        });

    for (auto z : outside) {
        auto avoid = large ? VertexSet(n) : cycle_bad_neighbors(g, f, c, z);
        auto t = splice_positions(g, c, z, bad, avoid);
        for (auto i : t)
            for (auto j : t) {
                if (i == j || f.incompatible(z, c[i], c[j]))
                    continue;
                auto a = c[wrap(i + 1, k)], b = c[wrap(j + 1, k)];
                if (profile.require_uncorrelated && is_correlated(g, f, a, b, profile.corr_frac))
                    continue;
                auto flags = splice_flags(f, c, i, j, z, z);
                if (! splice_allowed(c, i, j, flags, profile))
                    continue;
                auto path = splice(c, i, j, {z});
                if (! is_smooth(g, relaxed_system(f, flags, 0), path, profile))
                    continue;
                result.push_back(Absorption{std::move(path), {z}, std::move(flags)});
                if (static_cast<int>(result.size()) >= limit)
                    return result;
            }
    }
    return result;
}

auto absorb_outside_vertex(const Graph & g, const IncompatSystem & f, const Cycle & c,
    const ThresholdProfile & profile) -> Absorption
{
    if (! is_compatible_cycle(g, f, c))
        throw GraphError("absorption needs a compatible cycle");
    if (static_cast<int>(c.size()) >= g.order())
        throw AbsorptionError("cycle already spans the graph");
    auto candidates = absorption_candidates(g, f, c, profile, 1);
    if (candidates.empty())
        throw AbsorptionError("no outside vertex has two usable splice positions");
    return std::move(candidates.front());
}

auto bipartite_absorption_candidates(const Graph & g, const IncompatSystem & f, const Cycle & c,
    const ThresholdProfile & profile, int limit) -> vector<Absorption>
{
    vector<Absorption> result;
    if (! profile.bipartite())
        throw GraphError("bipartite absorption needs a bipartite profile");
    int n = g.order();
    int k = static_cast<int>(c.size());
    if (k < 4 || k >= n || limit <= 0)
        return result;
    auto on_cycle = VertexSet::from_range(n, c);
    auto bad = cycle_bad_set(g, f, c, profile);
    bool large = k >= (1.0 - profile.corr_frac) * n;

    for (Vertex a = 0; a < n; ++a) {
        if (on_cycle.contains(a) || ! profile.side_a.contains(a))
            continue;
        auto b = profile.partner[a];
        if (b < 0 || on_cycle.contains(b) || ! g.adjacent(a, b))
            continue;
        auto avoid_a = large ? VertexSet(n) : cycle_bad_neighbors(g, f, c, a);
        auto avoid_b = large ? VertexSet(n) : cycle_bad_neighbors(g, f, c, b);
        auto ta = splice_positions(g, c, a, bad, avoid_a);
        auto tb = splice_positions(g, c, b, bad, avoid_b);
        for (auto i : ta)
            for (auto j : tb) {
                if (f.incompatible(b, c[j], a) || f.incompatible(a, b, c[i]))
                    continue;
                auto flags = splice_flags(f, c, i, j, b, a);
                if (! splice_allowed(c, i, j, flags, profile))
                    continue;
                auto path = splice(c, i, j, {b, a});
                if (! is_smooth(g, relaxed_system(f, flags, 0), path, profile))
                    continue;
                result.push_back(Absorption{std::move(path), {a, b}, std::move(flags)});
                if (static_cast<int>(result.size()) >= limit)
                    return result;
            }
    }
    return result;
}

auto repair_absorption(const Graph & g, const IncompatSystem & f, const Absorption & a,
    const ThresholdProfile & profile, const RelaxationTiers & tiers, EngineStats * stats) -> optional<Cycle>
{
    optional<Cycle> cycle;
    Path path = a.path;
    for (std::size_t stage = 0; stage <= a.flags.size(); ++stage) {
        auto system = relaxed_system(f, a.flags, stage);
        if (cycle) {
            if (is_compatible_cycle(g, system, *cycle))
                continue;
            auto opened = open_cycle(*cycle, a.flags[stage - 1].opened, profile);
            if (! opened)
                return std::nullopt;
            path = std::move(*opened);
        }
        auto result = extend_or_close_cascade(g, system, path, profile, tiers, stats);
        if (! result.closed)
            return std::nullopt;
        cycle = std::move(result.closed->cycle);
    }
    if (! cycle || ! is_compatible_cycle(g, f, *cycle))
        return std::nullopt;
    return cycle;
}

auto grow_by_absorption(const Graph & g, const IncompatSystem & f, Cycle start, const ThresholdProfile & profile,
    const RelaxationTiers & tiers, int budget, const CandidateSource & source, EngineStats * stats) -> GrowthResult
{
    GrowthResult result{std::move(start)};
    bool enabled[4] = {tiers.strict, tiers.drop_goodness, tiers.drop_correlation, tiers.plain};
    while (static_cast<int>(result.cycle.size()) < g.order()) {
        ++result.iterations;
        bool grown = false;
        int tried = 0;
        for (int tier = 0; tier < 4 && ! grown && tried < budget; ++tier) {
            if (! enabled[tier])
                continue;
            for (auto & candidate : source(result.cycle, profile.relaxed(tier), budget - tried)) {
                ++tried;
                auto next = repair_absorption(g, f, candidate, profile, tiers, stats);
                if (next && next->size() > result.cycle.size()) {
                    result.absorbed += static_cast<int>(next->size() - result.cycle.size());
                    result.cycle = std::move(*next);
                    grown = true;
                    break;
                }
            }
        }
        result.candidates_tried += tried;
        if (! grown) {
            result.stalled = true;
            break;
        }
    }
    return result;
}

} // namespace compat
