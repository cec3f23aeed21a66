#pragma once

#include <compat/config.hpp>
#include <compat/graph.hpp>

#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace compat {

/// Thresholds and structural constraints that define which paths count as
/// smooth. One engine serves the Dirac, almost-clique and almost-bipartite
/// variants; they differ only in the profile.
struct ThresholdProfile
{
    /// Endpoints must have fewer than good_frac * |P| bad neighbors.
    double good_frac = 1.0;
    /// Pivot exclusion scans for vertices with at least bad_scan_frac * |P| bad neighbors.
    double bad_scan_frac = 0.25;
    /// Two vertices are correlated with at least corr_frac * n conflicting common neighbors.
    double corr_frac = 0.125;
    int rotation_depth = 3;
    bool require_good = true;
    bool require_uncorrelated = true;
    /// Start and end filters are the matched-pair conflict sets of the bipartite variant.
    bool apply_filters = true;

    /// Edges a smooth path must contain and that rotations never break.
    std::vector<Edge> forbidden_edges;
    VertexSet start_filter;
    VertexSet end_filter;

    /// Bipartite variant: perfect-matching partner of every vertex, and the
    /// side that holds the free endpoint v_0. Empty outside that variant.
    std::vector<Vertex> partner;
    VertexSet side_a;

    /// Endpoints tried first when searching for a closing edge.
    VertexSet preferred_endpoints;

    auto bipartite() const -> bool { return ! partner.empty(); }

    /// Dirac profile: 8 sqrt(mu) goodness, 2 sqrt(mu) scan, sqrt(mu) correlation.
    static auto dirac(double mu, int depth = 3) -> ThresholdProfile;

    /// Dirac thresholds plus a forced edge.
    static auto almost_clique(double mu, Edge forced, int depth = 3) -> ThresholdProfile;

    /// Proper-path profile of the almost-bipartite variant.
    static auto almost_bipartite(double mu, std::vector<Vertex> partner, VertexSet side_a,
        std::vector<Edge> forced, VertexSet filter_a, VertexSet filter_b, int depth = 3) -> ThresholdProfile;

    /// Tier 0 is this profile; 1 drops goodness; 2 also drops correlation
    /// and filters; 3 is the plain compatible-rotation search.
    auto relaxed(int tier) const -> ThresholdProfile;

    auto validate() const -> void;
};

/// A path together with the cached bad-neighbor counts of both endpoints.
class PathState
{
public:
    PathState(const Graph & g, const IncompatSystem & f, Path path);

    auto path() const -> const Path & { return _path; }
    auto front() const -> Vertex { return _path.front(); }
    auto back() const -> Vertex { return _path.back(); }
    auto size() const -> int { return static_cast<int>(_path.size()); }
    auto front_bad() const -> int { return _front_bad; }
    auto back_bad() const -> int { return _back_bad; }

private:
    Path _path;
    int _front_bad = 0;
    int _back_bad = 0;
};

struct AtlasEntry
{
    Path path;
    int rounds = 0;
    /// |E(path) \ E(base path)|.
    int added_edges = 0;
};

/// Endpoints reachable from a base path by bounded rounds of rotation with
/// the last vertex fixed, each with one witness path.
struct EndpointAtlas
{
    std::vector<Vertex> order;
    std::map<Vertex, AtlasEntry> entries;

    auto contains(Vertex v) const -> bool { return entries.contains(v); }
    auto at(Vertex v) const -> const AtlasEntry & { return entries.at(v); }
    auto size() const -> int { return static_cast<int>(order.size()); }
    auto endpoints(int n) const -> VertexSet { return VertexSet::from_range(n, order); }
};

struct EngineStats
{
    long rotations = 0;
    long extensions = 0;
    long closes = 0;
    long atlas_builds = 0;
};

struct ClosedCycle
{
    Cycle cycle;
    int added_edges = 0;
    int new_vertices = 0;
    int extensions = 0;
};

/// Extension and closing both failed. `sparse_a` and `sparse_b` are the sets
/// X^- and V \ (S^- u S^+) read off the stuck path.
struct RotationFailure
{
    Path path;
    VertexSet reachable;
    VertexSet first_round;
    VertexSet sparse_a;
    VertexSet sparse_b;
};

struct Extended
{
    Path path;
    int added_edges = 0;
};

using StepOutcome = std::variant<Extended, ClosedCycle, RotationFailure>;
using CloseOutcome = std::variant<ClosedCycle, RotationFailure>;

struct CascadeResult
{
    std::optional<ClosedCycle> closed;
    std::optional<RotationFailure> failure;
    /// Tier that closed the cycle, or -1.
    int tier = -1;
};

auto bad_neighbors(const Graph & g, const IncompatSystem & f, const Path & p, Vertex w) -> VertexSet;
auto cycle_bad_neighbors(const Graph & g, const IncompatSystem & f, const Cycle & c, Vertex w) -> VertexSet;

auto is_gamma_good(const Graph & g, const IncompatSystem & f, const Path & p, Vertex w, double gamma) -> bool;

/// Common neighbors w with {v1,w} and {v2,w} incompatible at w.
auto correlated_count(const Graph & g, const IncompatSystem & f, Vertex v1, Vertex v2) -> int;
auto is_correlated(const Graph & g, const IncompatSystem & f, Vertex v1, Vertex v2, double frac) -> bool;

auto is_smooth(const Graph & g, const IncompatSystem & f, const Path & p, const ThresholdProfile & profile) -> bool;

/// (v_{i-1}, ..., v_0, v_i, ..., v_l). Throws on an illegal pivot.
auto rotate(const Graph & g, const Path & p, int pivot, const std::vector<Edge> & forbidden = {}) -> Path;
auto rotate(const Graph & g, const IncompatSystem & f, const PathState & p, int pivot,
    const ThresholdProfile & profile) -> PathState;

auto try_extend(const Graph & g, const IncompatSystem & f, const Path & p, const ThresholdProfile & profile)
    -> std::optional<Path>;

/// Pivot vertices whose rotation keeps the path smooth. Throws if p can be extended.
auto pivot_set(const Graph & g, const IncompatSystem & f, const Path & p, const ThresholdProfile & profile)
    -> VertexSet;

/// Pivot positions after the exclusion-set filter and smoothness re-check,
/// without the non-extendability precondition.
auto pivot_positions(const Graph & g, const IncompatSystem & f, const Path & p, const ThresholdProfile & profile)
    -> std::vector<int>;

auto reachable_endpoints(const Graph & g, const IncompatSystem & f, const Path & p, const ThresholdProfile & profile,
    EngineStats * stats = nullptr) -> EndpointAtlas;

/// One extend-or-close round: extend after at most depth-1 rotations, or
/// close through a compatible closing edge after at most depth rotations.
auto extend_or_close_step(const Graph & g, const IncompatSystem & f, const Path & p,
    const ThresholdProfile & profile, EngineStats * stats = nullptr) -> StepOutcome;

/// Repeats extend_or_close_step until a cycle closes or rotation fails.
/// Throws GraphError when p is not smooth under the profile.
auto extend_or_close(const Graph & g, const IncompatSystem & f, const Path & p, const ThresholdProfile & profile,
    EngineStats * stats = nullptr) -> CloseOutcome;

/// Runs extend_or_close over the enabled relaxation tiers, strictest first.
auto extend_or_close_cascade(const Graph & g, const IncompatSystem & f, const Path & p,
    const ThresholdProfile & profile, const RelaxationTiers & tiers, EngineStats * stats = nullptr) -> CascadeResult;

} // namespace compat
