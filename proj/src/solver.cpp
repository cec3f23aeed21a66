#include <compat/oracle.hpp>
#include <compat/random.hpp>
#include <compat/solver.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

using std::optional;
using std::string;
using std::vector;

namespace compat {

auto preprocess_correlated(const Graph & g, const IncompatSystem & f, double mu) -> PreprocessResult
{
    int n = g.order();
    auto threshold = std::sqrt(mu) * n;
    PreprocessResult result{g};
    vector<int> loss(n, 0);
    for (auto & e : g.edges())
        if (correlated_count(g, f, e.u, e.v) >= threshold) {
            result.graph.remove_edge(e.u, e.v);
            ++result.removed_edges;
            ++loss[e.u];
            ++loss[e.v];
        }
    for (auto l : loss)
        result.max_degree_loss = std::max(result.max_degree_loss, l);
    auto bound = static_cast<int>(std::floor(mu * n));
    if (boundedness(g, f) <= bound && result.max_degree_loss > threshold)
        throw std::logic_error("correlated-edge removal exceeded the per-vertex bound");
    return result;
}

auto to_string(Outcome outcome) -> string
{
    switch (outcome) {
    case Outcome::cycle:
        return "cycle";
    case Outcome::witness:
        return "witness";
    case Outcome::unsolved:
        return "unsolved";
    }
    return "unsolved";
}

namespace {
    auto note(SolveReport * report, string stage, string status, string detail = {}) -> void
    {
        if (report)
            report->trace.push_back({std::move(stage), std::move(status), std::move(detail)});
    }

    auto absorb(SolveReport * report, const EngineStats & stats) -> void
    {
        if (! report)
            return;
        report->counters.rotations += stats.rotations;
        report->counters.extensions += stats.extensions;
        report->counters.closes += stats.closes;
        report->counters.atlas_builds += stats.atlas_builds;
    }

    auto endgame_options(const SolverConfig & config) -> EndgameOptions
    {
        return EndgameOptions{config.mu, config.rotation_depth, config.tiers, config.absorb_budget};
    }

    template <typename... Args>
    auto describe(Args &&... args) -> string
    {
        std::ostringstream out;
        (out << ... << args);
        return out.str();
    }

    // Disjoint A' in A and B' in B splitting A n B alternately, leftovers to
    // the smaller side or by a seeded coin.
    auto case1_split(const SparsePairWitness & witness, const SolverConfig & config) -> VertexSet
    {
        auto a = witness.a - witness.b;
        auto b = witness.b - witness.a;
        bool to_a = true;
        (witness.a & witness.b).for_each([&](Vertex v) {
            (to_a ? a : b).insert(v);
            to_a = ! to_a;
        });
        auto rest = (a | b).complement();
        Rng rng(mix_seed(config.seed, 1));
        rest.for_each([&](Vertex v) {
            bool pick_a = config.random_case1_split ? rng.below(2) == 0 : a.count() <= b.count();
            (pick_a ? a : b).insert(v);
        });
        return a;
    }

    auto verified(const Graph & g, const IncompatSystem & f, const optional<Cycle> & c) -> bool
    {
        return c && is_compatible_hamilton_cycle(g, f, *c);
    }
}

auto solve_case1(const Graph & g, const IncompatSystem & f, const SparsePairWitness & witness,
    const SolverConfig & config, SolveReport * report) -> optional<Cycle>
{
    int n = g.order();
    auto refinement = refine_partition_case1(g, case1_split(witness, config));
    auto w = refinement.w;
    if (2 * w.count() > n)
        w = w.complement();
    if (report) {
        report->counters.refinement_moves += refinement.moves;
        report->partition = w;
    }
    if (w.count() < 2 || n - w.count() < 2) {
        note(report, "case1", "failed", "degenerate partition");
        return std::nullopt;
    }
    auto pairs = disjoint_cross_edge_pairs(g, w, 8);
    if (pairs.empty()) {
        note(report, "case1", "failed", "no two disjoint cross edges");
        return std::nullopt;
    }
    auto options = endgame_options(config);
    for (auto & cross : pairs) {
        auto inst = build_merged_clique_instance(g, f, w, cross);
        EngineStats stats;
        auto side_cycle = [&](const MergedSide & side) -> optional<Cycle> {
            if (side.graph.order() == 2)
                return Cycle{};
            return almost_clique_hamilton(side.graph, side.system, side.forced(), options, &stats);
        };
        auto c1 = side_cycle(inst.side1);
        auto c2 = c1 ? side_cycle(inst.side2) : std::nullopt;
        absorb(report, stats);
        if (! c1 || ! c2)
            continue;
        auto cycle = stitch_case1(inst, *c1, *c2);
        if (is_compatible_hamilton_cycle(g, f, cycle)) {
            note(report, "case1", "cycle",
                describe("|W|=", w.count(), " cross {", cross.x1, ",", cross.y1, "} {", cross.x2, ",", cross.y2, "}"));
            return cycle;
        }
    }
    note(report, "case1", "failed", describe("|W|=", w.count(), ", ", pairs.size(), " cross pairs tried"));
    return std::nullopt;
}

auto solve_case2(const Graph & g, const IncompatSystem & f, const SparsePairWitness & witness,
    const SolverConfig & config, SolveReport * report) -> optional<Cycle>
{
    auto w0 = witness.a & witness.b;
    if (w0.empty()) {
        note(report, "case2", "failed", "empty intersection");
        return std::nullopt;
    }
    Refinement refinement;
    try {
        refinement = refine_partition_case2(g, w0);
    } catch (const ExtremalError & e) {
        note(report, "case2", "failed", e.what());
        return std::nullopt;
    }
    if (report) {
        report->counters.refinement_moves += refinement.moves + refinement.phase2_moves;
        report->partition = refinement.w;
    }
    BipartiteInstance inst;
    try {
        inst = select_E0_and_matching(g, f, refinement.w);
    } catch (const ExtremalError & e) {
        note(report, "case2", "failed", e.what());
        return std::nullopt;
    }
    EngineStats stats;
    string failed;
    auto local = almost_bipartite_hamilton(inst, endgame_options(config), &stats, &failed);
    absorb(report, stats);
    if (! local) {
        note(report, "case2", "failed", failed);
        return std::nullopt;
    }
    auto cycle = expand_cycle(inst, *local);
    if (! is_compatible_hamilton_cycle(g, f, cycle)) {
        note(report, "case2", "failed", "expanded cycle rejected");
        return std::nullopt;
    }
    note(report, "case2", "cycle", describe("m=", inst.m, ", forced=", inst.forced.size()));
    return cycle;
}

namespace {
    struct RotationPhase
    {
        optional<Cycle> cycle;
        optional<RotationFailure> failure;
    };

    // Close from a few edge seeds, then absorb. Keeps the longest cycle.
    auto rotation_phase(const Graph & host, const Graph & g, const IncompatSystem & f, const SolverConfig & config,
        const string & label, SolveReport & report) -> RotationPhase
    {
        RotationPhase phase;
        int n = host.order();
        auto profile = ThresholdProfile::dirac(config.mu, config.rotation_depth);
        EngineStats stats;
        optional<Cycle> best;
        int seeds = 0;
        VertexSet started(n);
        for (auto & e : host.edges()) {
            if (seeds >= 4)
                break;
            if (started.contains(e.u))
                continue;
            started.insert(e.u);
            ++seeds;
            auto cascade = extend_or_close_cascade(host, f, Path{e.u, e.v}, profile, config.tiers, &stats);
            if (! cascade.closed) {
                if (cascade.failure && ! phase.failure)
                    phase.failure = cascade.failure;
                continue;
            }
            if (report.counters.tier < 0)
                report.counters.tier = cascade.tier;
            auto source = [&](const Cycle & c, const ThresholdProfile & p, int limit) {
                return absorption_candidates(host, f, c, p, limit);
            };
            auto growth = grow_by_absorption(
                host, f, cascade.closed->cycle, profile, config.tiers, config.absorb_budget, source, &stats);
            report.counters.absorbed += growth.absorbed;
            if (! best || growth.cycle.size() > best->size())
                best = growth.cycle;
            if (static_cast<int>(growth.cycle.size()) == n && is_compatible_hamilton_cycle(g, f, growth.cycle))
                break;
        }
        absorb(&report, stats);
        if (best && static_cast<int>(best->size()) == n && is_compatible_hamilton_cycle(g, f, *best)) {
            note(&report, "rotation", "cycle", label);
            phase.cycle = best;
        } else if (best) {
            note(&report, "rotation", "stalled", describe(label, ": longest cycle ", best->size(), " of ", n));
        } else {
            note(&report, "rotation", "failed", describe(label, ": no seed closed"));
        }
        return phase;
    }

    auto collect_witnesses(const Graph & g, const optional<RotationFailure> & failure, const SolverConfig & config)
        -> vector<SparsePairWitness>
    {
        vector<SparsePairWitness> result;
        if (failure && ! failure->sparse_a.empty() && ! failure->sparse_b.empty())
            result.push_back(make_witness(g, failure->sparse_a, failure->sparse_b, "rotation-failure"));
        for (auto & w : greedy_witnesses(g, config.nu, config.eta))
            result.push_back(std::move(w));
        return result;
    }
}

auto solve(const Graph & g, const IncompatSystem & f, const SolverConfig & config) -> SolveReport
{
    config.validate();
    SolveReport report;
    int n = g.order();
    report.n = n;

    if (is_dirac(g)) {
        note(&report, "validate", "ok", "dirac");
    } else {
        report.warnings.push_back("graph is not Dirac: minimum degree below n/2");
        note(&report, "validate", "warning", describe("minimum degree ", g.min_degree(), " < n/2"));
    }

    auto finish_cycle = [&](Cycle cycle, string stage) {
        report.outcome = Outcome::cycle;
        report.certified = true;
        report.cycle = std::move(cycle);
        report.stage = std::move(stage);
        return report;
    };

    optional<RotationFailure> failure;
    if (n >= 3) {
        auto pre = preprocess_correlated(g, f, config.mu);
        report.counters.preprocess_removed = pre.removed_edges;
        report.counters.max_degree_loss = pre.max_degree_loss;
        note(&report, "preprocess", "ok",
            describe("removed ", pre.removed_edges, " edges, max degree loss ", pre.max_degree_loss));

        auto phase = rotation_phase(pre.graph, g, f, config, "preprocessed", report);
        if (phase.cycle)
            return finish_cycle(*phase.cycle, "rotation");
        failure = phase.failure;
        if (pre.removed_edges > 0) {
            auto again = rotation_phase(g, g, f, config, "original", report);
            if (again.cycle)
                return finish_cycle(*again.cycle, "rotation");
            if (! failure)
                failure = again.failure;
        }

        for (auto & witness : collect_witnesses(g, failure, config)) {
            SparseBranch branch;
            bool certified = witness.certified;
            try {
                branch = classify_sparse_pair(g, witness.a, witness.b, config.nu, config.eta);
            } catch (const ExtremalError &) {
                certified = false;
                branch = nearest_branch(g, witness.a, witness.b);
            }
            witness.certified = certified;
            note(&report, "witness", certified ? "certified" : "uncertified",
                describe(witness.source, ": |A|=", witness.a.count(), " |B|=", witness.b.count(),
                    " |A n B|=", witness.a.intersect_count(witness.b), " e(A,B)=", witness.cross_count, " -> ",
                    to_string(branch)));
            if (certified && ! report.witness) {
                report.witness = witness;
                report.branch = branch;
            }
            auto partition = report.partition;
            auto cycle = branch == SparseBranch::disjointish ? solve_case1(g, f, witness, config, &report)
                                                             : solve_case2(g, f, witness, config, &report);
            // Partitions refined from heuristic witnesses are not reported as structure.
            if (! certified)
                report.partition = partition;
            if (verified(g, f, cycle))
                return finish_cycle(*cycle, branch == SparseBranch::disjointish ? "case1" : "case2");
        }
    } else {
        note(&report, "preprocess", "skipped", "fewer than 3 vertices");
    }

    if (config.oracle_fallback && n <= config.oracle_cutoff) {
        auto result = exhaustive_compatible_hamilton(g, f);
        report.counters.oracle_nodes = result.nodes_explored;
        if (result.found && verified(g, f, result.cycle)) {
            note(&report, "oracle", "cycle", describe(result.nodes_explored, " nodes"));
            return finish_cycle(*result.cycle, "oracle");
        }
        note(&report, "oracle", "none", describe(result.nodes_explored, " nodes"));
        report.absence_certified = true;
    } else {
        note(&report, "oracle", "skipped", describe("n=", n, " cutoff=", config.oracle_cutoff));
    }

    if (report.witness) {
        report.outcome = Outcome::witness;
        report.certified = true;
    } else {
        report.outcome = Outcome::unsolved;
        report.certified = report.absence_certified;
    }
    return report;
}

} // namespace compat
