#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "reldyn/classifier.hpp"
#include "reldyn/model.hpp"
#include "reldyn/spectral.hpp"

namespace reldyn::cli {

// Exit-code contract shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCompareFailed = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitIoError = 3;

/// One fully resolved simulate/classify/predict invocation, separated from
/// flag parsing so the commands are testable without a process boundary.
struct RunConfig {
    ModelParams params;
    std::optional<State> initial;
    std::size_t steps = 0;
    std::uint64_t t = 0;
    double divergence_threshold = kDefaultDivergenceThreshold;
    double compare_tolerance = 1e-9;
    std::optional<std::string> output_path;
};

/// Inclusive rectangular grid over (alpha, beta) at fixed gamma.
/// alpha_steps/beta_steps count grid points per axis (>= 2).
struct SweepSpec {
    double gamma = 1.0;
    double alpha_min = 0.0;
    double alpha_max = 0.0;
    std::size_t alpha_steps = 2;
    double beta_min = 0.0;
    double beta_max = 0.0;
    std::size_t beta_steps = 2;
    double epsilon = kClassifyEpsilon;
};

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double value);

std::string report_json(const ClassificationReport& report);
std::string predicted_state_json(std::uint64_t t, const State& s);
std::string comparison_json(const PowerComparison& comparison);

/// CSV with header "t,a,b,power", one row per stored state, and a trailing
/// "# truncated_at=<t>" comment when the run was cut short.
std::string trajectory_csv(const Trajectory& trajectory);

/// CSV with header "alpha,beta,lambda2,behavioral_class,archetype", beta
/// varying fastest. Grid cells with alpha = beta = 0 get the literal
/// "degenerate" in both label columns.
std::string sweep_csv(const SweepSpec& spec);

int cmd_classify(const RunConfig& config);
int cmd_simulate(const RunConfig& config);
int cmd_predict(const RunConfig& config);
int cmd_compare(const RunConfig& config);
int cmd_sweep(const SweepSpec& spec, const std::optional<std::string>& output_path);

/// Full argv entry point used by the binary.
int run(int argc, const char* const* argv);

}  // namespace reldyn::cli
