#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "reldyn/errors.hpp"

namespace reldyn {

/// Parameters of the two-player affinity model. alpha and beta are the
/// players' sensitivities to power (positive = drawn to the stronger side,
/// negative = repelled), gamma > 0 scales power itself. At least one of
/// alpha, beta must be nonzero. Construct through validate_params().
struct ModelParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 1.0;

    friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Affinity pair at one timestep: a is player A's affinity, b is player B's.
struct State {
    double a = 0.0;
    double b = 0.0;

    friend bool operator==(const State&, const State&) = default;
};

std::ostream& operator<<(std::ostream& os, const ModelParams& p);
std::ostream& operator<<(std::ostream& os, const State& s);

/// Forward-simulated orbit. states[0] is the initial state; if the run was
/// truncated, truncated_at is the index of the first state whose magnitude
/// crossed the divergence threshold (that state is the last one stored).
struct Trajectory {
    ModelParams params;
    State initial;
    std::vector<State> states;
    std::optional<std::size_t> truncated_at;

    bool truncated() const noexcept { return truncated_at.has_value(); }
};

inline constexpr double kDefaultDivergenceThreshold = 1e12;

/// Checks finiteness, gamma > 0, and (alpha, beta) != (0, 0).
/// Throws NonFiniteInput, GammaNotPositive, or DegenerateModel.
ModelParams validate_params(double alpha, double beta, double gamma);

/// Player A's power gamma * (b - a); player B's power is its negation.
double power(const ModelParams& params, const State& s) noexcept;

/// One step of the coupled update:
///   a' = a + alpha * gamma * (b - a)
///   b' = b - beta  * gamma * (b - a)
/// evaluated as a'(= a*(1 - ag) + ag*b), b'(= b*(1 - bg) + bg*a) with
/// ag = alpha*gamma, bg = beta*gamma. Equal affinities are returned
/// unchanged: they are exact fixed points.
State step(const ModelParams& params, const State& s) noexcept;

/// Iterates step() up to `steps` times, recording every state. Stops early
/// once max(|a|, |b|) exceeds divergence_threshold. Throws NonFiniteInput
/// if the initial state is not finite.
Trajectory simulate(const ModelParams& params, const State& initial, std::size_t steps,
                    double divergence_threshold = kDefaultDivergenceThreshold);

}  // namespace reldyn
