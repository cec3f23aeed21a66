#include <compat/config.hpp>

#include <cmath>

namespace compat {

namespace {
    auto check_fraction(double value, const char * name, bool allow_zero) -> void
    {
        if (! (value >= 0.0 && value < 1.0) || (! allow_zero && value == 0.0))
            throw ConfigError(std::string(name) + " must lie in " + (allow_zero ? "[0,1)" : "(0,1)"));
    }
}

auto SolverConfig::sqrt_mu() const -> double
{
    return std::sqrt(mu);
}

auto SolverConfig::structure_constraint() const -> double
{
    return 110.0 * nu + 250.0 * eta + 10.0 * sqrt_mu();
}

auto SolverConfig::validate() const -> void
{
    check_fraction(mu, "mu", false);
    check_fraction(nu, "nu", true);
    check_fraction(eta, "eta", true);
    check_fraction(beta, "beta", true);
    check_fraction(gamma, "gamma", true);
    check_fraction(min_degree_slack, "min_degree_slack", true);
    if (rotation_depth < 1)
        throw ConfigError("rotation depth must be at least 1");
    if (oracle_cutoff < 3)
        throw ConfigError("oracle cutoff must be at least 3");
    if (absorb_budget < 1)
        throw ConfigError("absorb budget must be positive");
    if (! (tiers.strict || tiers.drop_goodness || tiers.drop_correlation || tiers.plain))
        throw ConfigError("at least one relaxation tier must be enabled");
    if (strict_params) {
        if (! (structure_constraint() < 1.0 / 2000.0))
            throw ConfigError("strict mode: 110 nu + 250 eta + 10 sqrt(mu) must be below 1/2000 (got "
                + std::to_string(structure_constraint()) + ")");
        if (min_degree_slack > sqrt_mu())
            throw ConfigError("strict mode: min_degree_slack must not exceed sqrt(mu)");
    }
}

auto SolverConfig::derived(double mu) -> SolverConfig
{
    SolverConfig config;
    config.mu = mu;
    auto slack = 1.0 / 2000.0 - 10.0 * std::sqrt(mu);
    if (slack > 0.0) {
        config.nu = slack / (4.0 * 110.0);
        config.eta = slack / (4.0 * 250.0);
        config.beta = slack / 4.0;
        config.gamma = slack / 4.0;
        config.min_degree_slack = std::sqrt(mu);
    }
    return config;
}

} // namespace compat
