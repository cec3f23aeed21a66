#pragma once

#include <compat/rotation.hpp>

#include <functional>
#include <stdexcept>

namespace compat {

class AbsorptionError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A pair of the original system that the splice needs relaxed, and the
/// edge whose removal reopens the cycle once the pair is restored.
struct RepairFlag
{
    Conflict pair;
    Edge opened;
};

/// A cycle with outside vertices spliced in, as a path on V(C) plus the inserted vertices.
struct Absorption
{
    Path path;
    std::vector<Vertex> inserted;
    /// Incompatible pairs used by the splice, restored in order.
    std::vector<RepairFlag> flags;
};

/// The system with flags[from..] made compatible.
auto relaxed_system(const IncompatSystem & f, const std::vector<RepairFlag> & flags, std::size_t from)
    -> IncompatSystem;

/// Opens a cycle at `edge`. In the bipartite variant the path starts on side A.
auto open_cycle(const Cycle & c, const Edge & edge, const ThresholdProfile & profile) -> std::optional<Path>;

/// Splices of one outside vertex z into c, in deterministic order, at most `limit` of them.
/// Candidate endpoints avoid 2 sqrt(mu)-bad cycle vertices when the profile asks for goodness;
/// while |C| < (1 - corr_frac) n the pivots also avoid bad neighbors of z.
auto absorption_candidates(const Graph & g, const IncompatSystem & f, const Cycle & c,
    const ThresholdProfile & profile, int limit) -> std::vector<Absorption>;

/// First candidate of absorption_candidates. Throws AbsorptionError when none exists.
auto absorb_outside_vertex(const Graph & g, const IncompatSystem & f, const Cycle & c,
    const ThresholdProfile & profile) -> Absorption;

/// Bipartite variant: splices an outside matching edge {a, b}.
auto bipartite_absorption_candidates(const Graph & g, const IncompatSystem & f, const Cycle & c,
    const ThresholdProfile & profile, int limit) -> std::vector<Absorption>;

/// Closes the spliced path under the relaxed systems, restoring one flagged
/// pair per stage and reopening the cycle at its edge when it is used.
auto repair_absorption(const Graph & g, const IncompatSystem & f, const Absorption & a,
    const ThresholdProfile & profile, const RelaxationTiers & tiers, EngineStats * stats = nullptr)
    -> std::optional<Cycle>;

using CandidateSource
    = std::function<std::vector<Absorption>(const Cycle &, const ThresholdProfile &, int limit)>;

struct GrowthResult
{
    Cycle cycle;
    int absorbed = 0;
    int iterations = 0;
    long candidates_tried = 0;
    bool stalled = false;
};

/// Absorbs outside vertices until the cycle is Hamiltonian or no candidate
/// within `budget` per step succeeds. Each iteration strictly grows the cycle.
auto grow_by_absorption(const Graph & g, const IncompatSystem & f, Cycle start, const ThresholdProfile & profile,
    const RelaxationTiers & tiers, int budget, const CandidateSource & source, EngineStats * stats = nullptr)
    -> GrowthResult;

} // namespace compat
