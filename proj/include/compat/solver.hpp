#pragma once

#include <compat/extremal.hpp>

#include <optional>
#include <string>
#include <vector>

namespace compat {

struct PreprocessResult
{
    Graph graph;
    int removed_edges = 0;
    /// Largest number of edges any single vertex lost.
    int max_degree_loss = 0;
};

/// Removes every edge whose endpoints have at least sqrt(mu) n conflicting
/// common neighbors. When F is floor(mu n)-bounded the per-vertex loss is at
/// most sqrt(mu) n; a larger loss under that bound throws std::logic_error.
auto preprocess_correlated(const Graph & g, const IncompatSystem & f, double mu) -> PreprocessResult;

enum class Outcome
{
    cycle,
    witness,
    unsolved,
};

auto to_string(Outcome outcome) -> std::string;

struct StageRecord
{
    std::string stage;
    std::string status;
    std::string detail;
};

struct SolveCounters
{
    long rotations = 0;
    long extensions = 0;
    long closes = 0;
    long atlas_builds = 0;
    /// Relaxation tier of the first successful close, -1 if none.
    int tier = -1;
    int refinement_moves = 0;
    long oracle_nodes = 0;
    int absorbed = 0;
    int preprocess_removed = 0;
    int max_degree_loss = 0;
};

struct SolveReport
{
    Outcome outcome = Outcome::unsolved;
    /// Cycle: verified against the input. Witness: the sparse pair meets its
    /// bounds. Unsolved: the oracle proved that no cycle exists.
    bool certified = false;
    bool absence_certified = false;
    /// Stage that produced the cycle.
    std::string stage;
    std::optional<Cycle> cycle;
    std::optional<SparsePairWitness> witness;
    std::optional<SparseBranch> branch;
    /// Final part W of the last refinement attempted.
    std::optional<VertexSet> partition;
    std::vector<StageRecord> trace;
    SolveCounters counters;
    std::vector<std::string> warnings;
    int n = 0;
};

/// Rotation and absorption on the preprocessed graph, then the two extremal
/// cases on witnesses, then the oracle for small n. Every cycle is verified
/// against the original g and f before it is reported. Throws ConfigError on
/// an invalid config; all other failures become report outcomes.
auto solve(const Graph & g, const IncompatSystem & f, const SolverConfig & config) -> SolveReport;

/// Case 1 on a given witness: refine, merge both sides and stitch.
auto solve_case1(const Graph & g, const IncompatSystem & f, const SparsePairWitness & witness,
    const SolverConfig & config, SolveReport * report = nullptr) -> std::optional<Cycle>;

/// Case 2 on a given witness: refine, contract, solve the bipartite instance and expand.
auto solve_case2(const Graph & g, const IncompatSystem & f, const SparsePairWitness & witness,
    const SolverConfig & config, SolveReport * report = nullptr) -> std::optional<Cycle>;

} // namespace compat
