#pragma once

#include <compat/generators.hpp>
#include <compat/io.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace compat {

/// Exit codes shared by the subcommands.
enum ExitCode : int
{
    exit_cycle = 0,
    exit_no_cycle = 1,
    exit_unsolved = 2,
    exit_bad_input = 3,
};

/// Writes the generated instance to `out_path`, or to `out` when the path is
/// empty or "-". Family notes go to `err`.
auto cmd_generate(const GenSpec & spec, const std::string & out_path, bool json, std::ostream & out,
    std::ostream & err) -> int;

/// Prints the report JSON. 0 = cycle, 1 = absence certified, 2 = unsolved, 3 = bad input.
/// A non-empty manifest path also receives a run manifest with timing.
auto cmd_solve(const std::string & in_path, const SolverConfig & config, const std::string & manifest_path,
    std::ostream & out, std::ostream & err) -> int;

/// 0 iff `cycle` is a compatible Hamilton cycle of the instance, 1 otherwise, 3 on bad input.
auto cmd_verify(const std::string & in_path, const std::string & cycle, std::ostream & out, std::ostream & err)
    -> int;

/// Exhaustive search. 0 = found, 1 = none, 3 = bad input.
auto cmd_oracle(const std::string & in_path, bool count_all, std::ostream & out, std::ostream & err) -> int;

/// Grid value standing for "every pair at vertex 0 forbidden".
inline constexpr int sweep_blocking = -1;

struct SweepSpec
{
    GenSpec base;
    std::vector<int> deltas;
    int trials = 10;
    std::uint64_t seed = 0;
    int threads = 1;
    int oracle_cutoff = 12;
};

struct SweepRow
{
    int delta = 0;
    int n = 0;
    int trials = 0;
    int found = 0;
    double mean_oracle_nodes = 0.0;
};

/// "0,1,2,max" into grid values. Throws ParseError.
auto parse_delta_grid(const std::string & text) -> std::vector<int>;

/// Workers actually used: the request, capped by COMPAT_HC_THREADS and the trial count.
auto sweep_threads(int requested, int trials) -> int;

/// Trial t draws its graph from mix_seed(seed, t) and nested random systems
/// over the numeric grid values, so fractions are monotone along the grid.
/// Throws std::invalid_argument on an empty grid or n above the oracle cutoff.
auto run_sweep(const SweepSpec & spec) -> std::vector<SweepRow>;

auto sweep_csv(const std::vector<SweepRow> & rows) -> std::string;

auto cmd_sweep(const SweepSpec & spec, std::ostream & out, std::ostream & err) -> int;

} // namespace compat
