// Command-line front end: generate, solve, verify, oracle, sweep.

#include <compat/commands.hpp>

#include <CLI11.hpp>

#include <iostream>

using namespace compat;

namespace {
auto add_config_flags(CLI::App * app, SolverConfig & config) -> void
{
    app->add_option("--mu", config.mu, "incompatibility fraction mu");
    app->add_option("--nu", config.nu, "sparse-pair size slack");
    app->add_option("--eta", config.eta, "sparse-pair density");
    app->add_option("--beta", config.beta, "bipartite edge deficit");
    app->add_option("--gamma", config.gamma, "forced-edge fraction");
    app->add_option("--depth", config.rotation_depth, "rotation rounds");
    app->add_option("--seed", config.seed, "seed for randomized choices");
    app->add_option("--oracle-cutoff", config.oracle_cutoff, "largest n for the exhaustive fallback");
    app->add_flag("--strict-params", config.strict_params, "enforce the structure constraint on nu, eta, mu");
}

auto add_gen_flags(CLI::App * app, GenSpec & spec) -> void
{
    app->add_option("--family", spec.family, "graph family")->required();
    app->add_option("--n", spec.n, "vertex count (random-dirac)");
    app->add_option("--k", spec.k, "family parameter k");
    app->add_option("--m", spec.m, "side size (near-bipartite)");
    app->add_option("--density", spec.density, "extra edge probability (random-dirac)");
    app->add_option("--removed", spec.removed, "removed edges (near-bipartite)");
    app->add_option("--fill", spec.fill, "pair keep probability of random systems");
}
}

int main(int argc, char ** argv)
{
    CLI::App app{"Compatible Hamilton cycles in dense graphs"};
    app.require_subcommand(1);

    GenSpec gen;
    std::string gen_out;
    bool gen_json = false;
    auto * generate_cmd = app.add_subcommand("generate", "write a generated instance");
    add_gen_flags(generate_cmd, gen);
    generate_cmd->add_option("--seed", gen.seed, "generator seed");
    generate_cmd->add_option("--delta", gen.delta, "random bounded system cap (negative for none)");
    generate_cmd->add_option("-o,--out", gen_out, "output path, stdout if omitted");
    generate_cmd->add_flag("--json", gen_json, "JSON instead of the text format");

    SolverConfig config;
    std::string solve_in, manifest;
    bool no_oracle = false, random_split = false;
    auto * solve_cmd = app.add_subcommand("solve", "solve an instance and print the report");
    solve_cmd->add_option("input", solve_in, "instance file")->required();
    add_config_flags(solve_cmd, config);
    solve_cmd->add_option("--manifest", manifest, "also write a run manifest with timing");
    solve_cmd->add_flag("--no-oracle", no_oracle, "disable the exhaustive fallback");
    solve_cmd->add_flag("--random-split", random_split, "seeded random split of leftover vertices in Case 1");

    std::string verify_in, verify_cycle;
    auto * verify_cmd = app.add_subcommand("verify", "check a vertex sequence");
    verify_cmd->add_option("input", verify_in, "instance file")->required();
    verify_cmd->add_option("cycle", verify_cycle, "vertices, comma or blank separated")->required();

    std::string oracle_in;
    bool oracle_count = false;
    auto * oracle_cmd = app.add_subcommand("oracle", "exhaustive search");
    oracle_cmd->add_option("input", oracle_in, "instance file")->required();
    oracle_cmd->add_flag("--count", oracle_count, "count all cycles");

    SweepSpec sweep;
    std::string grid;
    auto * sweep_cmd = app.add_subcommand("sweep", "fraction of instances with a compatible Hamilton cycle per cap");
    add_gen_flags(sweep_cmd, sweep.base);
    sweep_cmd->add_option("--deltas", grid, "cap grid, e.g. 0,1,2,max")->required();
    sweep_cmd->add_option("--trials", sweep.trials, "instances per grid point");
    sweep_cmd->add_option("--seed", sweep.seed, "base seed");
    sweep_cmd->add_option("--threads", sweep.threads, "workers, capped by COMPAT_HC_THREADS");
    sweep_cmd->add_option("--oracle-cutoff", sweep.oracle_cutoff, "largest n allowed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        // Help exits 0; any usage error is bad input.
        auto code = app.exit(e);
        return code == 0 ? 0 : exit_bad_input;
    }

    if (*generate_cmd)
        return cmd_generate(gen, gen_out, gen_json, std::cout, std::cerr);
    if (*solve_cmd) {
        config.oracle_fallback = ! no_oracle;
        config.random_case1_split = random_split;
        return cmd_solve(solve_in, config, manifest, std::cout, std::cerr);
    }
    if (*verify_cmd)
        return cmd_verify(verify_in, verify_cycle, std::cout, std::cerr);
    if (*oracle_cmd)
        return cmd_oracle(oracle_in, oracle_count, std::cout, std::cerr);
    try {
        sweep.deltas = parse_delta_grid(grid);
    } catch (const ParseError & e) {
        std::cerr << e.what() << '\n';
        return exit_bad_input;
    }
    return cmd_sweep(sweep, std::cout, std::cerr);
}
