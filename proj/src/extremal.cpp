#include <compat/extremal.hpp>

#include <algorithm>
#include <cmath>

using std::optional;
using std::string;
using std::vector;

namespace compat {

auto make_witness(const Graph & g, VertexSet a, VertexSet b, string source) -> SparsePairWitness
{
    auto cross = edges_between(g, a, b);
    return SparsePairWitness{std::move(a), std::move(b), cross, false, std::move(source)};
}

auto to_string(SparseBranch branch) -> string
{
    return branch == SparseBranch::disjointish ? "disjointish" : "identicalish";
}

auto witness_preconditions_hold(const Graph & g, const VertexSet & a, const VertexSet & b, double nu, double eta)
    -> bool
{
    double n = g.order();
    double floor = (0.5 - nu) * n;
    return a.count() >= floor && b.count() >= floor && static_cast<double>(edges_between(g, a, b)) <= eta * n * n;
}

auto classify_sparse_pair(const Graph & g, const VertexSet & a, const VertexSet & b, double nu, double eta)
    -> SparseBranch
{
    if (! witness_preconditions_hold(g, a, b, nu, eta))
        throw ExtremalError("sparse pair fails the size or sparsity bound");
    double n = g.order();
    auto common = static_cast<double>(a.intersect_count(b));
    if (common < 3.0 * eta * n)
        return SparseBranch::disjointish;
    if (common > (0.5 - 2.0 * nu - 3.0 * eta) * n)
        return SparseBranch::identicalish;
    throw ExtremalError("|A n B| = " + std::to_string(a.intersect_count(b)) + " lies in the forbidden middle band");
}

auto nearest_branch(const Graph & g, const VertexSet & a, const VertexSet & b) -> SparseBranch
{
    return 4 * a.intersect_count(b) < g.order() ? SparseBranch::disjointish : SparseBranch::identicalish;
}

namespace {
    auto flip(VertexSet & w, Vertex v) -> void
    {
        if (w.contains(v))
            w.erase(v);
        else
            w.insert(v);
    }

    auto part_of(const VertexSet & w, Vertex v) -> VertexSet { return w.contains(v) ? w : w.complement(); }
}

auto refine_partition_case1(const Graph & g, const VertexSet & a0) -> Refinement
{
    int n = g.order();
    Refinement result{a0};
    for (bool moved = true; moved;) {
        moved = false;
        for (Vertex v = 0; v < n; ++v) {
            auto own = part_of(result.w, v);
            int same = (g.neighbors(v) & own).count();
            int other = g.degree(v) - same;
            if (6 * same <= n && same < other && own.count() > 1) {
                flip(result.w, v);
                ++result.moves;
                moved = true;
                break;
            }
        }
    }
    return result;
}

auto refine_partition_case2(const Graph & g, const VertexSet & w0) -> Refinement
{
    int n = g.order();
    Refinement result{w0};
    for (bool moved = true; moved;) {
        moved = false;
        for (Vertex v = 0; v < n; ++v) {
            auto own = part_of(result.w, v);
            int same = (g.neighbors(v) & own).count();
            int cross = g.degree(v) - same;
            if (6 * cross <= n && cross < same && own.count() > 1) {
                flip(result.w, v);
                ++result.moves;
                moved = true;
                break;
            }
        }
    }

    if (2 * result.w.count() < n)
        result.w = result.w.complement();
    int target = (n + 1) / 2;
    while (result.w.count() > target) {
        Vertex chosen = -1;
        result.w.for_each([&](Vertex v) {
            if (chosen < 0 && 16 * (g.neighbors(v) & result.w).count() >= n)
                chosen = v;
        });
        if (chosen < 0)
            throw ExtremalError("case 2 refinement cannot shrink W to ceil(n/2)");
        result.w.erase(chosen);
        ++result.phase2_moves;
    }
    return result;
}

auto disjoint_cross_edge_pairs(const Graph & g, const VertexSet & w, int limit) -> vector<CrossEdges>
{
    vector<std::pair<Vertex, Vertex>> cross;
    auto rest = w.complement();
    w.for_each([&](Vertex x) { (g.neighbors(x) & rest).for_each([&](Vertex y) { cross.emplace_back(x, y); }); });
    vector<CrossEdges> result;
    for (std::size_t i = 0; i < cross.size(); ++i)
        for (std::size_t j = i + 1; j < cross.size(); ++j) {
            if (static_cast<int>(result.size()) >= limit)
                return result;
            if (cross[i].first != cross[j].first && cross[i].second != cross[j].second)
                result.push_back(CrossEdges{cross[i].first, cross[i].second, cross[j].first, cross[j].second});
        }
    return result;
}

auto find_disjoint_cross_edges(const Graph & g, const VertexSet & w) -> CrossEdges
{
    auto pairs = disjoint_cross_edge_pairs(g, w, 1);
    if (pairs.empty())
        throw ExtremalError("no two vertex-disjoint edges cross the partition");
    return pairs.front();
}

namespace {
    // G[side] + {p1,p2}; the artificial edge inherits conflicts of {p1,q1} at p1 and {p2,q2} at p2.
    auto merged_side(const Graph & g, const IncompatSystem & f, const VertexSet & side, Vertex p1, Vertex q1,
        Vertex p2, Vertex q2) -> MergedSide
    {
        auto members = side.to_vector();
        vector<Vertex> local(g.order(), -1);
        for (std::size_t i = 0; i < members.size(); ++i)
            local[members[i]] = static_cast<Vertex>(i);

        MergedSide result{g.induced(members), IncompatSystem(static_cast<int>(members.size())), members,
            local[p1], local[p2], false};
        if (! result.graph.adjacent(result.first, result.second)) {
            result.graph.add_edge(result.first, result.second);
            result.artificial_added = true;
        }

        auto artificial = [&](Vertex at, Vertex other) {
            return (at == p1 && other == p2) || (at == p2 && other == p1);
        };
        for (auto & c : f.pairs()) {
            if (! side.contains(c.at) || ! side.contains(c.a) || ! side.contains(c.b))
                continue;
            if (artificial(c.at, c.a) || artificial(c.at, c.b))
                continue;
            result.system.add(result.graph, local[c.at], local[c.a], local[c.b]);
        }
        for (auto [at, outside, far] : {std::tuple{p1, q1, p2}, std::tuple{p2, q2, p1}})
            (g.neighbors(at) & side).for_each([&](Vertex z) {
                if (z != far && f.incompatible(at, outside, z))
                    result.system.add(result.graph, local[at], local[far], local[z]);
            });
        return result;
    }
}

auto build_merged_clique_instance(const Graph & g, const IncompatSystem & f, const VertexSet & w,
    const CrossEdges & cross) -> MergedCliqueInstance
{
    auto rest = w.complement();
    if (! w.contains(cross.x1) || ! w.contains(cross.x2) || ! rest.contains(cross.y1) || ! rest.contains(cross.y2))
        throw ExtremalError("cross edges do not run from W to its complement");
    if (! g.adjacent(cross.x1, cross.y1) || ! g.adjacent(cross.x2, cross.y2))
        throw ExtremalError("cross edges are not edges of the graph");
    auto side1 = merged_side(g, f, w, cross.x1, cross.y1, cross.x2, cross.y2);
    auto side2 = merged_side(g, f, rest, cross.y2, cross.x2, cross.y1, cross.x1);
    return MergedCliqueInstance{std::move(side1), std::move(side2), cross};
}

namespace {
    // Hamilton path of the side from `first` to `second` avoiding the artificial edge.
    auto side_path(const MergedSide & side, const Cycle & c) -> optional<Path>
    {
        if (side.graph.order() == 2)
            return Path{side.first, side.second};
        auto opened = open_cycle(c, side.forced(), ThresholdProfile{});
        if (! opened)
            return std::nullopt;
        if (opened->front() != side.first)
            std::reverse(opened->begin(), opened->end());
        return opened;
    }
}

auto stitch_case1(const MergedCliqueInstance & inst, const Cycle & c1, const Cycle & c2) -> Cycle
{
    auto p1 = side_path(inst.side1, c1);
    auto p2 = side_path(inst.side2, c2);
    if (! p1 || ! p2)
        throw ExtremalError("side cycle misses its artificial edge");
    Cycle result;
    for (auto v : *p1)
        result.push_back(inst.side1.to_global[v]);
    for (auto v : *p2)
        result.push_back(inst.side2.to_global[v]);
    return result;
}

auto high_degree_set(const Graph & g) -> VertexSet
{
    VertexSet result(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        if (7 * g.degree(v) >= 6 * g.order())
            result.insert(v);
    return result;
}

auto almost_clique_hamilton(const Graph & g, const IncompatSystem & f, Edge forced, const EndgameOptions & options,
    EngineStats * stats) -> optional<Cycle>
{
    if (! g.has_edge(forced))
        throw ExtremalError("forced edge is not in the graph");
    int n = g.order();
    if (n < 3)
        return std::nullopt;

    // Drop edges between correlated endpoints, keeping the forced edge.
    auto sqrt_mu = std::sqrt(options.mu);
    Graph h = g;
    for (auto & e : g.edges())
        if (e != forced && correlated_count(g, f, e.u, e.v) >= sqrt_mu * n)
            h.remove_edge(e.u, e.v);

    for (const Graph * host : {static_cast<const Graph *>(&h), &g}) {
        auto profile = ThresholdProfile::almost_clique(options.mu, forced, options.rotation_depth);
        profile.preferred_endpoints = high_degree_set(*host);
        optional<Cycle> start;
        for (auto seed : {Path{forced.u, forced.v}, Path{forced.v, forced.u}}) {
            auto closed = extend_or_close_cascade(*host, f, seed, profile, options.tiers, stats);
            if (closed.closed) {
                start = closed.closed->cycle;
                break;
            }
        }
        if (! start)
            continue;
        CandidateSource source = [&](const Cycle & c, const ThresholdProfile & p, int limit) {
            return absorption_candidates(*host, f, c, p, limit);
        };
        auto grown = grow_by_absorption(*host, f, *start, profile, options.tiers, options.absorb_budget, source, stats);
        auto & c = grown.cycle;
        bool through = false;
        for (auto & e : cycle_edges(c))
            through = through || e == forced;
        if (through && is_compatible_hamilton_cycle(g, f, c))
            return c;
    }
    return std::nullopt;
}

namespace {
    auto local_search_cut(const Graph & g, VertexSet w, bool maximize, int max_rounds) -> VertexSet
    {
        int n = g.order();
        auto gain = [&](Vertex v) {
            auto own = part_of(w, v);
            int same = (g.neighbors(v) & own).count();
            int cross = g.degree(v) - same;
            return maximize ? same - cross : cross - same;
        };
        for (int round = 0; round < max_rounds; ++round) {
            bool improved = false;
            if (maximize) {
                for (Vertex v = 0; v < n && ! improved; ++v)
                    if (gain(v) > 0 && part_of(w, v).count() > 1) {
                        flip(w, v);
                        improved = true;
                    }
            } else {
                // Swaps keep the bisection balanced.
                auto rest = w.complement();
                for (Vertex a = 0; a < n && ! improved; ++a) {
                    if (! w.contains(a))
                        continue;
                    rest.for_each([&](Vertex b) {
                        if (improved)
                            return;
                        int delta = -gain(a) - gain(b) + (g.adjacent(a, b) ? 2 : 0);
                        if (delta < 0) {
                            flip(w, a);
                            flip(w, b);
                            improved = true;
                        }
                    });
                }
            }
            if (! improved)
                break;
        }
        return w;
    }
}

auto greedy_witnesses(const Graph & g, double nu, double eta) -> vector<SparsePairWitness>
{
    int n = g.order();
    vector<SparsePairWitness> result;
    if (n < 2)
        return result;

    // Breadth-first order from vertex 0 keeps dense blocks together.
    vector<Vertex> order;
    VertexSet seen(n);
    vector<int> layer(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (seen.contains(s))
            continue;
        seen.insert(s);
        layer[s] = 0;
        order.push_back(s);
        for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
            auto v = order[head];
            (g.neighbors(v) - seen).for_each([&](Vertex w) {
                seen.insert(w);
                layer[w] = layer[v] + 1;
                order.push_back(w);
            });
        }
    }

    VertexSet half(n);
    for (int i = 0; i < (n + 1) / 2; ++i)
        half.insert(order[i]);
    auto bisection = local_search_cut(g, half, false, 4 * n);
    auto w1 = make_witness(g, bisection, bisection.complement(), "greedy-bisection");
    w1.certified = witness_preconditions_hold(g, w1.a, w1.b, nu, eta);
    result.push_back(std::move(w1));

    VertexSet parity(n);
    for (Vertex v = 0; v < n; ++v)
        if (layer[v] % 2 == 0)
            parity.insert(v);
    auto cut = local_search_cut(g, parity, true, 4 * n);
    if (2 * cut.count() < n)
        cut = cut.complement();
    auto w2 = make_witness(g, cut, cut, "greedy-max-cut");
    w2.certified = witness_preconditions_hold(g, w2.a, w2.b, nu, eta);
    result.push_back(std::move(w2));
    return result;
}

} // namespace compat
