#pragma once

#include <compat/absorption.hpp>
#include <compat/config.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace compat {

class ExtremalError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Two large vertex sets with few edges between them.
struct SparsePairWitness
{
    VertexSet a;
    VertexSet b;
    long cross_count = 0;
    /// False when the sets were produced by a heuristic and fail the size or sparsity bounds.
    bool certified = false;
    std::string source;
};

auto make_witness(const Graph & g, VertexSet a, VertexSet b, std::string source) -> SparsePairWitness;

enum class SparseBranch
{
    disjointish,
    identicalish,
};

auto to_string(SparseBranch branch) -> std::string;

/// Whether (a, b) satisfies |A|,|B| >= (1/2 - nu) n and e(A,B) <= eta n^2.
auto witness_preconditions_hold(const Graph & g, const VertexSet & a, const VertexSet & b, double nu, double eta)
    -> bool;

/// |A n B| < 3 eta n is disjointish, |A n B| > (1/2 - 2 nu - 3 eta) n is
/// identicalish. Throws ExtremalError on a failed precondition or an
/// intersection in the middle band.
auto classify_sparse_pair(const Graph & g, const VertexSet & a, const VertexSet & b, double nu, double eta)
    -> SparseBranch;

/// The branch whose threshold the intersection is closer to, without checks.
auto nearest_branch(const Graph & g, const VertexSet & a, const VertexSet & b) -> SparseBranch;

struct Refinement
{
    VertexSet w;
    int moves = 0;
    int phase2_moves = 0;
};

/// Moves vertices with at most n/6 neighbors in their own part while that
/// strictly lowers e(W, W^c). Smallest id first.
auto refine_partition_case1(const Graph & g, const VertexSet & a0) -> Refinement;

/// Phase 1 moves vertices with at most n/6 neighbors across while that raises
/// e(W, W^c). Phase 2 makes W the larger part and moves W-vertices with at
/// least n/16 neighbors in W until |W| = ceil(n/2). Throws ExtremalError if
/// phase 2 gets stuck.
auto refine_partition_case2(const Graph & g, const VertexSet & w0) -> Refinement;

/// Vertex-disjoint cross edges {x1,y1}, {x2,y2} with x1, x2 in W.
struct CrossEdges
{
    Vertex x1, y1, x2, y2;
};

/// First disjoint pair in lexicographic order of (x, y). Throws ExtremalError if none exists.
auto find_disjoint_cross_edges(const Graph & g, const VertexSet & w) -> CrossEdges;

/// Up to `limit` disjoint pairs in the same order.
auto disjoint_cross_edge_pairs(const Graph & g, const VertexSet & w, int limit) -> std::vector<CrossEdges>;

/// One side of a Case 1 split, relabeled to 0..|side|-1.
struct MergedSide
{
    Graph graph;
    IncompatSystem system;
    std::vector<Vertex> to_global;
    /// Local endpoints of the artificial edge, in the order (x1, x2) or (y2, y1) of the stitched cycle.
    Vertex first = 0;
    Vertex second = 0;
    bool artificial_added = false;

    auto forced() const -> Edge { return Edge(first, second); }
};

struct MergedCliqueInstance
{
    MergedSide side1;
    MergedSide side2;
    CrossEdges cross;
};

/// G[W] + {x1,x2} and G[W^c] + {y1,y2}. The artificial edge's conflicts at x1
/// are those of {x1,y1}, at x2 those of {x2,y2}, and symmetrically on the other side.
auto build_merged_clique_instance(const Graph & g, const IncompatSystem & f, const VertexSet & w,
    const CrossEdges & cross) -> MergedCliqueInstance;

/// Joins Hamilton cycles of both sides through their artificial edges and the two cross edges.
auto stitch_case1(const MergedCliqueInstance & inst, const Cycle & c1, const Cycle & c2) -> Cycle;

struct EndgameOptions
{
    double mu = 1.0 / 64.0;
    int rotation_depth = 3;
    RelaxationTiers tiers;
    int absorb_budget = 256;
};

/// Vertices with degree at least 6n/7.
auto high_degree_set(const Graph & g) -> VertexSet;

/// Compatible Hamilton cycle through `forced`, or none when the engine stalls.
auto almost_clique_hamilton(const Graph & g, const IncompatSystem & f, Edge forced, const EndgameOptions & options,
    EngineStats * stats = nullptr) -> std::optional<Cycle>;

/// Contracted balanced bipartite instance of a Case 2 split.
struct BipartiteInstance
{
    Graph graph;
    IncompatSystem system;
    VertexSet side_a;
    VertexSet side_b;
    /// Perfect-matching partner of every local vertex.
    std::vector<Vertex> partner;
    /// Contracted edges {x_i, w_i}, in local ids; they lead the matching.
    std::vector<Edge> forced;
    std::vector<Vertex> to_global;
    /// Local contracted edge to the global middle vertex v_i.
    std::map<Edge, Vertex> middle;
    int m = 0;
};

/// Vertices x of one side with at least sqrt(mu) m matched edges {a_i,b_i}
/// incompatible with {x, b_i} (A side) or {a_i, x} (B side).
struct MatchingFilters
{
    VertexSet x_a;
    VertexSet x_b;
};

auto matching_filters(const Graph & g, const IncompatSystem & f, const std::vector<Vertex> & partner,
    const VertexSet & side_a, double mu) -> MatchingFilters;

/// Maximum matching by augmenting paths; result[v] is the partner or -1.
auto bipartite_matching(const Graph & g, const VertexSet & left, const VertexSet & right) -> std::vector<Vertex>;

/// Picks t = |W| - |W^c| disjoint edges inside W, matches W_1 to W^c in the
/// filtered graph H, and contracts every (x_i, v_i, w_i) into {x_i, w_i}.
/// Throws ExtremalError when either step fails.
auto select_E0_and_matching(const Graph & g, const IncompatSystem & f, const VertexSet & w) -> BipartiteInstance;

/// Replaces each contracted edge by its 2-path and maps back to global ids.
auto expand_cycle(const BipartiteInstance & inst, const Cycle & local) -> Cycle;

/// Builds a balanced instance directly from a bipartite graph with a perfect matching.
auto bipartite_instance(const Graph & g, const IncompatSystem & f, const VertexSet & side_a,
    const std::vector<Vertex> & partner, const std::vector<Edge> & forced) -> BipartiteInstance;

/// Proper compatible path through all forced edges, grown by 10-vertex
/// splices with shorter joins as a fallback.
auto proper_seed_path(const BipartiteInstance & inst, const MatchingFilters & filters) -> std::optional<Path>;

/// Extends a proper path by four vertices on each end so that it becomes smooth.
auto smooth_seed_path(const BipartiteInstance & inst, const MatchingFilters & filters, const Path & p,
    const ThresholdProfile & profile) -> std::optional<Path>;

auto bipartite_profile(const BipartiteInstance & inst, const MatchingFilters & filters, const EndgameOptions & options)
    -> ThresholdProfile;

/// Proper compatible Hamilton cycle of the instance in local ids, or none.
/// `failed_stage` names the step that gave up.
auto almost_bipartite_hamilton(const BipartiteInstance & inst, const EndgameOptions & options,
    EngineStats * stats = nullptr, std::string * failed_stage = nullptr) -> std::optional<Cycle>;

/// Heuristic witnesses: a local-search minimum bisection (Case 1 shape) and a
/// local-search maximum cut whose larger side is used as A = B (Case 2 shape).
auto greedy_witnesses(const Graph & g, double nu, double eta) -> std::vector<SparsePairWitness>;

} // namespace compat
