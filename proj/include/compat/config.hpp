#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace compat {

class ConfigError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Enabled tiers of the rotation relaxation cascade, strictest first.
struct RelaxationTiers
{
    bool strict = true;
    bool drop_goodness = true;
    bool drop_correlation = true;
    bool plain = true;
};

/// Numeric knobs of the pipeline.
///
/// The theory's constants are asymptotic; at desk scale the defaults are
/// chosen so thresholds stay meaningful for n around 10..100.
struct SolverConfig
{
    double mu = 1.0 / 64.0;
    double nu = 0.05;
    double eta = 0.02;
    double beta = 0.05;
    double gamma = 0.05;
    double min_degree_slack = 0.0;
    int rotation_depth = 3;
    RelaxationTiers tiers;
    std::uint64_t seed = 0;
    int oracle_cutoff = 12;
    bool strict_params = false;
    bool oracle_fallback = true;
    bool random_case1_split = false;
    /// Absorption candidates (outside vertex, splice pair) tried per growth step.
    int absorb_budget = 256;

    auto sqrt_mu() const -> double;

    /// Left-hand side of 110 nu + 250 eta + 10 sqrt(mu) < 1/2000.
    auto structure_constraint() const -> double;

    /// Throws ConfigError on out-of-range values; in strict mode also
    /// enforces the structure-theorem parameter constraint.
    auto validate() const -> void;

    /// Defaults for nu and eta: a quarter of the remaining slack of the
    /// structure constraint when sqrt(mu) leaves any, desk-scale values otherwise.
    static auto derived(double mu) -> SolverConfig;
};

} // namespace compat
