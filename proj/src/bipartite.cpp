#include <compat/extremal.hpp>

#include <algorithm>
#include <cmath>
#include <functional>

using std::optional;
using std::string;
using std::vector;

namespace compat {

auto matching_filters(const Graph & g, const IncompatSystem & f, const vector<Vertex> & partner,
    const VertexSet & side_a, double mu) -> MatchingFilters
{
    int n = g.order();
    const auto side_b = side_a.complement();
    double threshold = std::sqrt(mu) * side_a.count();
    MatchingFilters result{VertexSet(n), VertexSet(n)};
    for (auto [side, other, out] : {std::tuple{&side_a, &side_b, &result.x_a}, std::tuple{&side_b, &side_a, &result.x_b}})
        side->for_each([&](Vertex x) {
            int count = 0;
            // Matched edges {x', y} at y in the other side whose pair with {x, y} conflicts.
            (g.neighbors(x) & *other).for_each([&](Vertex y) {
                auto mate = partner[y];
                if (mate >= 0 && mate != x && f.incompatible(y, mate, x))
                    ++count;
            });
            if (count >= threshold)
                out->insert(x);
        });
    return result;
}

auto bipartite_matching(const Graph & g, const VertexSet & left, const VertexSet & right) -> vector<Vertex>
{
    int n = g.order();
    vector<Vertex> mate(n, -1);
    std::function<bool(Vertex, VertexSet &)> augment = [&](Vertex u, VertexSet & seen) {
        bool done = false;
        (g.neighbors(u) & right).for_each([&](Vertex w) {
            if (done || seen.contains(w))
                return;
            seen.insert(w);
            if (mate[w] < 0 || augment(mate[w], seen)) {
                mate[w] = u;
                mate[u] = w;
                done = true;
            }
        });
        return done;
    };
    left.for_each([&](Vertex u) {
        VertexSet seen(n);
        augment(u, seen);
    });
    return mate;
}

namespace {
    auto check_instance(const BipartiteInstance & inst) -> void
    {
        int n = inst.graph.order();
        if (inst.side_a.count() != inst.side_b.count() || inst.side_a.count() + inst.side_b.count() != n)
            throw ExtremalError("bipartite instance sides are unbalanced");
        for (auto & e : inst.graph.edges())
            if (inst.side_a.contains(e.u) == inst.side_a.contains(e.v))
                throw ExtremalError("bipartite instance has an edge inside one side");
        for (Vertex v = 0; v < n; ++v) {
            auto w = inst.partner[v];
            if (w < 0 || inst.partner[w] != v || ! inst.graph.adjacent(v, w))
                throw ExtremalError("partner map is not a perfect matching");
        }
        for (auto & e : inst.forced)
            if (inst.partner[e.u] != e.v)
                throw ExtremalError("forced edge is not a matching edge");
    }
}

auto bipartite_instance(const Graph & g, const IncompatSystem & f, const VertexSet & side_a,
    const vector<Vertex> & partner, const vector<Edge> & forced) -> BipartiteInstance
{
    int n = g.order();
    BipartiteInstance inst{g, f, side_a, side_a.complement(), partner, forced, {}, {}, side_a.count()};
    inst.to_global.resize(n);
    for (Vertex v = 0; v < n; ++v)
        inst.to_global[v] = v;
    check_instance(inst);
    return inst;
}

auto select_E0_and_matching(const Graph & g, const IncompatSystem & f, const VertexSet & w) -> BipartiteInstance
{
    int n = g.order();
    auto rest = w.complement();
    int t = w.count() - rest.count();
    if (t < 0)
        throw ExtremalError("W must be the larger part");

    // E0: greedy disjoint edges inside W; the larger endpoint joins W_1.
    vector<std::pair<Vertex, Vertex>> e0;
    VertexSet covered(n);
    for (auto & e : g.edges()) {
        if (static_cast<int>(e0.size()) == t)
            break;
        if (w.contains(e.u) && w.contains(e.v) && ! covered.contains(e.u) && ! covered.contains(e.v)) {
            e0.emplace_back(e.u, e.v);
            covered.insert(e.u);
            covered.insert(e.v);
        }
    }
    if (static_cast<int>(e0.size()) < t)
        throw ExtremalError("W has fewer than t disjoint internal edges");

    auto w1 = w;
    vector<Vertex> x_of(n, -1);
    for (auto [x, v] : e0) {
        w1.erase(x);
        x_of[v] = x;
    }

    Graph h(n);
    w1.for_each([&](Vertex u) {
        (g.neighbors(u) & rest).for_each([&](Vertex z) {
            if (x_of[u] < 0 || ! f.incompatible(u, x_of[u], z))
                h.add_edge(u, z);
        });
    });
    auto mate = bipartite_matching(h, w1, rest);
    w1.for_each([&](Vertex u) {
        if (mate[u] < 0)
            throw ExtremalError("the filtered bipartite graph H has no perfect matching");
    });

    VertexSet removed(n);
    for (auto [x, v] : e0)
        removed.insert(v);
    auto kept = removed.complement().to_vector();
    vector<Vertex> local(n, -1);
    for (std::size_t i = 0; i < kept.size(); ++i)
        local[kept[i]] = static_cast<Vertex>(i);
    int size = static_cast<int>(kept.size());

    // Contracted edge {x_i, w_i} keyed by x_i.
    vector<Vertex> contracted_to(n, -1);
    for (auto [x, v] : e0)
        contracted_to[x] = mate[v];
    auto is_contracted = [&](Vertex a, Vertex b) {
        return (contracted_to[a] >= 0 && contracted_to[a] == b) || (contracted_to[b] >= 0 && contracted_to[b] == a);
    };

    BipartiteInstance inst{Graph(size), IncompatSystem(size), VertexSet(size), VertexSet(size),
        vector<Vertex>(size, -1), {}, kept, {}, rest.count()};
    (w - removed).for_each([&](Vertex a) {
        inst.side_a.insert(local[a]);
        (g.neighbors(a) & rest).for_each([&](Vertex b) {
            if (! is_contracted(a, b))
                inst.graph.add_edge(local[a], local[b]);
        });
    });
    inst.side_b = inst.side_a.complement();
    for (auto [x, v] : e0) {
        auto lx = local[x], lw = local[mate[v]];
        inst.graph.add_edge(lx, lw);
        inst.forced.emplace_back(lx, lw);
        inst.middle[Edge(lx, lw)] = v;
        inst.partner[lx] = lw;
        inst.partner[lw] = lx;
    }
    (w1 - removed).for_each([&](Vertex u) {
        inst.partner[local[u]] = local[mate[u]];
        inst.partner[local[mate[u]]] = local[u];
    });

    // Original pairs over surviving edges, then the contracted edges' inherited pairs.
    auto surviving = [&](Vertex a, Vertex b) {
        return local[a] >= 0 && local[b] >= 0 && ! is_contracted(a, b) && inst.graph.adjacent(local[a], local[b]);
    };
    for (auto & c : f.pairs())
        if (surviving(c.at, c.a) && surviving(c.at, c.b))
            inst.system.add(inst.graph, local[c.at], local[c.a], local[c.b]);
    for (auto [x, v] : e0) {
        auto wv = mate[v];
        for (auto [end, far] : {std::pair{x, wv}, std::pair{wv, x}})
            inst.graph.neighbors(local[end]).for_each([&](Vertex lz) {
                auto z = kept[lz];
                if (z != far && f.incompatible(end, v, z))
                    inst.system.add(inst.graph, local[end], local[far], lz);
            });
    }
    check_instance(inst);
    return inst;
}

auto expand_cycle(const BipartiteInstance & inst, const Cycle & local) -> Cycle
{
    Cycle result;
    auto k = local.size();
    for (std::size_t i = 0; i < k; ++i) {
        auto u = local[i], v = local[(i + 1) % k];
        result.push_back(inst.to_global[u]);
        auto it = inst.middle.find(Edge(u, v));
        if (it != inst.middle.end())
            result.push_back(it->second);
    }
    return result;
}

namespace {
    struct SeedContext
    {
        const BipartiteInstance & inst;
        VertexSet skip_a;
        VertexSet skip_b;

        auto graph() const -> const Graph & { return inst.graph; }
        auto f() const -> const IncompatSystem & { return inst.system; }
        auto mate(Vertex v) const -> Vertex { return inst.partner[v]; }
        auto clear(Vertex a) const -> bool { return ! skip_a.contains(a) && ! skip_b.contains(mate(a)); }
    };

    auto low_degree(const BipartiteInstance & inst) -> VertexSet
    {
        VertexSet result(inst.graph.order());
        for (Vertex v = 0; v < inst.graph.order(); ++v)
            if (4 * inst.graph.degree(v) < 3 * inst.m)
                result.insert(v);
        return result;
    }

    auto compatible_run(const SeedContext & ctx, const Path & p) -> bool
    {
        return is_valid_path(ctx.graph(), p) && is_compatible_path(ctx.graph(), ctx.f(), p);
    }

    // (P, b, a_i, b_k, a_k, b_i, a_j, b_l, a_l, b_j, a_t, b_t) with P ending at b.
    auto splice_ten(const SeedContext & ctx, const Path & p, Vertex at, Vertex bt, const VertexSet & avoid)
        -> optional<Path>
    {
        auto & g = ctx.graph();
        auto & f = ctx.f();
        auto b = p.back(), a = p[p.size() - 2];
        vector<Vertex> a1, b1;
        (g.neighbors(b) - avoid).for_each([&](Vertex ai) {
            if (! avoid.contains(ctx.mate(ai)) && ctx.clear(ai) && ! f.incompatible(b, a, ai))
                a1.push_back(ai);
        });
        (g.neighbors(at) - avoid).for_each([&](Vertex bj) {
            if (bj != bt && ! avoid.contains(ctx.mate(bj)) && ctx.clear(ctx.mate(bj)) && ! f.incompatible(at, bt, bj))
                b1.push_back(bj);
        });
        for (auto ai : a1)
            for (auto bj : b1) {
                auto bi = ctx.mate(ai), aj = ctx.mate(bj);
                if (aj == ai || ! g.adjacent(bi, aj))
                    continue;
                auto taken = avoid | VertexSet(g.order(), {ai, bi, aj, bj});
                vector<Vertex> ks, ls;
                (g.neighbors(ai) - taken).for_each([&](Vertex bk) {
                    auto ak = ctx.mate(bk);
                    if (! taken.contains(ak) && g.adjacent(bi, ak) && compatible_run(ctx, {b, ai, bk, ak, bi, aj}))
                        ks.push_back(bk);
                });
                (g.neighbors(aj) - taken).for_each([&](Vertex bl) {
                    auto al = ctx.mate(bl);
                    if (! taken.contains(al) && g.adjacent(bj, al) && compatible_run(ctx, {bi, aj, bl, al, bj, at}))
                        ls.push_back(bl);
                });
                for (auto bk : ks)
                    for (auto bl : ls) {
                        if (bk == bl)
                            continue;
                        auto path = p;
                        path.insert(path.end(), {ai, bk, ctx.mate(bk), bi, aj, bl, ctx.mate(bl), bj, at, bt});
                        if (compatible_run(ctx, path))
                            return path;
                    }
            }
        return std::nullopt;
    }

    auto short_join(const SeedContext & ctx, const Path & p, Vertex at, Vertex bt, const VertexSet & avoid)
        -> optional<Path>
    {
        auto & g = ctx.graph();
        auto b = p.back();
        auto direct = p;
        direct.insert(direct.end(), {at, bt});
        if (compatible_run(ctx, direct))
            return direct;
        optional<Path> found;
        (g.neighbors(b) - avoid).for_each([&](Vertex ai) {
            auto bi = ctx.mate(ai);
            if (found || avoid.contains(bi) || ai == at || ! g.adjacent(bi, at))
                return;
            auto path = p;
            path.insert(path.end(), {ai, bi, at, bt});
            if (compatible_run(ctx, path))
                found = std::move(path);
        });
        return found;
    }
}

auto proper_seed_path(const BipartiteInstance & inst, const MatchingFilters & filters) -> optional<Path>
{
    int n = inst.graph.order();
    if (n < 2)
        return std::nullopt;
    auto low = low_degree(inst);
    auto oriented = [&](Edge e) { return inst.side_a.contains(e.u) ? std::pair{e.u, e.v} : std::pair{e.v, e.u}; };

    vector<std::pair<Vertex, Vertex>> pending;
    for (auto & e : inst.forced)
        pending.push_back(oriented(e));
    if (pending.empty()) {
        auto a = inst.side_a.first();
        pending.emplace_back(a, inst.partner[a]);
    }

    Path p{pending[0].first, pending[0].second};
    VertexSet reserved(n);
    for (auto [a, b] : pending) {
        reserved.insert(a);
        reserved.insert(b);
    }
    for (std::size_t t = 1; t < pending.size(); ++t) {
        auto [at, bt] = pending[t];
        auto avoid = reserved | VertexSet::from_range(n, p);
        optional<Path> next;
        for (bool use_filters : {true, false}) {
            SeedContext ctx{inst, VertexSet(n), VertexSet(n)};
            if (use_filters) {
                ctx.skip_a = filters.x_a | (low & inst.side_a);
                ctx.skip_b = filters.x_b | (low & inst.side_b);
            }
            next = splice_ten(ctx, p, at, bt, avoid);
            if (next)
                break;
        }
        if (! next)
            next = short_join(SeedContext{inst, VertexSet(n), VertexSet(n)}, p, at, bt, avoid);
        if (! next)
            return std::nullopt;
        p = std::move(*next);
    }
    return p;
}

auto smooth_seed_path(const BipartiteInstance & inst, const MatchingFilters & filters, const Path & p,
    const ThresholdProfile & profile) -> optional<Path>
{
    auto & g = inst.graph;
    auto & f = inst.system;
    int n = g.order();
    auto mate = [&](Vertex v) { return inst.partner[v]; };
    auto low = low_degree(inst);
    auto skip_a = filters.x_a | (low & inst.side_a);
    auto skip_b = filters.x_b | (low & inst.side_b);
    auto on_path = VertexSet::from_range(n, p);
    auto a = p.front(), b = p.back();
    auto good = [&](Vertex v) { return bad_neighbors(g, f, p, v).count() < profile.bad_scan_frac * p.size(); };
    int budget = 4000;

    if (p.size() >= 2) {
        vector<Vertex> b_prime, a_prime;
        (g.neighbors(a) - on_path - skip_b).for_each([&](Vertex x) {
            if (! f.incompatible(a, p[1], x) && ! skip_a.contains(mate(x)) && good(mate(x)))
                b_prime.push_back(x);
        });
        (g.neighbors(b) - on_path - skip_a).for_each([&](Vertex y) {
            if (! f.incompatible(b, p[p.size() - 2], y) && ! skip_b.contains(mate(y)) && good(mate(y)))
                a_prime.push_back(y);
        });
        auto pairs = (inst.side_a - on_path).to_vector();
        for (auto bp : b_prime) {
            auto ap = mate(bp);
            for (auto ai : pairs) {
                auto bi = mate(ai);
                if (ai == ap || ! g.adjacent(ap, bi) || ! g.adjacent(ai, bp))
                    continue;
                Path head{ap, bi, ai, bp};
                head.insert(head.end(), p.begin(), p.end());
                if (! is_compatible_path(g, f, head))
                    continue;
                for (auto app : a_prime) {
                    auto bpp = mate(app);
                    if (app == ap || app == ai || bpp == bp)
                        continue;
                    for (auto aj : pairs) {
                        auto bj = mate(aj);
                        if (aj == ai || aj == ap || aj == app || ! g.adjacent(app, bj) || ! g.adjacent(aj, bpp))
                            continue;
                        if (--budget < 0)
                            goto done;
                        auto full = head;
                        full.insert(full.end(), {app, bj, aj, bpp});
                        if (is_valid_path(g, full) && is_smooth(g, f, full, profile))
                            return full;
                    }
                }
            }
        }
    }
done:
    if (is_smooth(g, f, p, profile))
        return p;
    return std::nullopt;
}

auto bipartite_profile(const BipartiteInstance & inst, const MatchingFilters & filters, const EndgameOptions & options)
    -> ThresholdProfile
{
    return ThresholdProfile::almost_bipartite(options.mu, inst.partner, inst.side_a, inst.forced, filters.x_a,
        filters.x_b, options.rotation_depth);
}

auto almost_bipartite_hamilton(const BipartiteInstance & inst, const EndgameOptions & options, EngineStats * stats,
    string * failed_stage) -> optional<Cycle>
{
    auto fail = [&](const char * stage) -> optional<Cycle> {
        if (failed_stage)
            *failed_stage = stage;
        return std::nullopt;
    };
    auto & g = inst.graph;
    auto & f = inst.system;
    if (g.order() < 4)
        return fail("instance too small");
    auto filters = matching_filters(g, f, inst.partner, inst.side_a, options.mu);
    auto profile = bipartite_profile(inst, filters, options);

    auto seed = proper_seed_path(inst, filters);
    if (! seed)
        return fail("proper seed path");

    optional<Path> start;
    for (int tier = 0; tier < 4 && ! start; ++tier)
        start = smooth_seed_path(inst, filters, *seed, profile.relaxed(tier));
    if (! start)
        return fail("smooth seed path");

    auto closed = extend_or_close_cascade(g, f, *start, profile, options.tiers, stats);
    if (! closed.closed)
        return fail("bipartite rotation");

    CandidateSource source = [&](const Cycle & c, const ThresholdProfile & p, int limit) {
        return bipartite_absorption_candidates(g, f, c, p, limit);
    };
    auto grown = grow_by_absorption(g, f, closed.closed->cycle, profile, options.tiers, options.absorb_budget, source,
        stats);
    auto & c = grown.cycle;
    if (! is_compatible_hamilton_cycle(g, f, c))
        return fail("bipartite absorption");
    auto edges = cycle_edges(c);
    for (auto & e : inst.forced)
        if (std::find(edges.begin(), edges.end(), e) == edges.end())
            return fail("forced edge lost");
    return c;
}

} // namespace compat
