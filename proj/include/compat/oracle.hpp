#pragma once

#include <compat/graph.hpp>

#include <optional>

namespace compat {

struct OracleOptions
{
    bool count_all = false;
    /// Edges every counted cycle must contain.
    std::vector<Edge> required;
};

struct OracleResult
{
    bool found = false;
    std::optional<Cycle> cycle;
    std::optional<long> count;
    long nodes_explored = 0;
};

/// Backtracking search for compatible Hamilton cycles, anchored at vertex 0
/// and counting each cycle once (second vertex < last vertex). Returns the
/// first cycle found, or the exact count with count_all.
auto exhaustive_compatible_hamilton(const Graph & g, const IncompatSystem & f, bool count_all = false)
    -> OracleResult;
auto exhaustive_compatible_hamilton(const Graph & g, const IncompatSystem & f, const OracleOptions & options)
    -> OracleResult;

/// Length of the longest compatible cycle, 0 if there is none.
auto max_compatible_cycle_len(const Graph & g, const IncompatSystem & f) -> int;

} // namespace compat
