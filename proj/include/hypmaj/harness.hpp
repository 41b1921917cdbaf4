#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypmaj/contraction.hpp"
#include "hypmaj/polynomial.hpp"
#include "hypmaj/scalar.hpp"

namespace hypmaj::harness {

using json = nlohmann::json;

struct ExperimentConfig {
    std::string suite;
    std::size_t trials = 100;
    std::size_t min_degree = 0;  ///< 0 selects the suite default
    std::size_t max_degree = 0;
    std::uint64_t seed = 1;
    std::optional<Mode> mode;         ///< unset selects rational
    std::optional<double> tol;        ///< relative slack factor; unset selects the suite default
    std::string out;                  ///< report path; empty writes to stdout
    std::size_t threads = 1;
    std::string family;               ///< hunt generator family; empty selects the default
    std::size_t chain_cap = kDefaultChainCap;
};

/// Reads the config-file schema (same keys as the CLI flags). Unknown keys
/// and ill-typed values raise Config.
ExperimentConfig config_from_json(const json& j, ExperimentConfig base = {});
json config_to_json(const ExperimentConfig& c);

struct FailureRecord {
    std::size_t trial = 0;  ///< seed offset: inputs come from Rng::for_trial(seed, trial)
    json inputs;            ///< self-contained; feed to recheck()
    json certificate;
    std::string message;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    Mode mode = Mode::Rational;
    double tol = 0.0;
    std::size_t trials = 0;
    std::size_t skipped = 0;
    std::vector<FailureRecord> failures;
    double worst_slack = 0.0;  ///< most negative slack seen (0 when none)
    double wall_seconds = 0.0;
    json evidence = json::object();  ///< hunt counters and observations

    bool passed() const noexcept { return failures.empty(); }

    json summary() const;
    /// One JSON line per failure, then the summary line. Wall time is left
    /// out so that identical configs give byte-identical reports.
    void write_jsonl(std::ostream& os) const;
};

std::vector<std::string> suite_names();
std::vector<std::string> hunt_names();

/// Runs a verification suite. Throws UnknownSuite, Config, FloatModeUnsupported.
SuiteReport run_suite(const ExperimentConfig& config);

/// Searches for counterexamples to pb1 (normalised truncations of multiplier
/// sequences), pb2 (finite hyperbolicity-preserving diagonal operators) or
/// pb3 (operators keeping the barycenter-0 slice). Only exactly confirmed
/// violations are reported as failures. Throws UnknownSuite,
/// GeneratorExhausted.
SuiteReport run_hunt(const std::string& problem, const ExperimentConfig& config);

/// The suite inputs drawn for one trial.
json generate_inputs(const std::string& name, const ExperimentConfig& config, std::size_t trial);

struct RecheckResult {
    bool ok = true;
    json certificate;
    std::string message;
};

/// Re-runs the check of a suite or hunt on recorded inputs.
RecheckResult recheck(const std::string& name, const json& inputs, const ExperimentConfig& config = {});

/// Exact confirmation that Z(lower) ⪯ Z(upper) fails for two real-rooted
/// rational polynomials of equal degree: either the root sums differ, or
/// certified root brackets give a top-k sum of `lower` strictly above that
/// of `upper`. Returns the certificate, or nullopt when the violation cannot
/// be certified.
std::optional<json> confirm_violation(const Polynomial<Rational>& lower, const Polynomial<Rational>& upper);

/// Exact certificate that p (after removing zero roots) has only simple real
/// roots; nullopt when isolation fails.
std::optional<std::vector<RootBracket>> certified_real_roots(const Polynomial<Rational>& p);

}  // namespace hypmaj::harness
