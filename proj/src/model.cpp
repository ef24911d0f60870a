#include "reldyn/model.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

namespace reldyn {

std::ostream& operator<<(std::ostream& os, const ModelParams& p) {
    return os << "{alpha=" << p.alpha << ", beta=" << p.beta << ", gamma=" << p.gamma << "}";
}

std::ostream& operator<<(std::ostream& os, const State& s) {
    return os << "(" << s.a << ", " << s.b << ")";
}

ModelParams validate_params(double alpha, double beta, double gamma) {
    if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma)) {
        throw NonFiniteInput("model parameters must be finite");
    }
    if (!(gamma > 0.0)) {
        throw GammaNotPositive("gamma must be strictly positive, got " + std::to_string(gamma));
    }
    if (alpha == 0.0 && beta == 0.0) {
        throw DegenerateModel("alpha and beta must not both be zero");
    }
    return ModelParams{alpha, beta, gamma};
}

double power(const ModelParams& params, const State& s) noexcept {
    return params.gamma * (s.b - s.a);
}

State step(const ModelParams& params, const State& s) noexcept {
    if (s.a == s.b) {
        return s;
    }
    const double ag = params.alpha * params.gamma;
    const double bg = params.beta * params.gamma;
    return State{s.a * (1.0 - ag) + ag * s.b, s.b * (1.0 - bg) + bg * s.a};
}

Trajectory simulate(const ModelParams& params, const State& initial, std::size_t steps,
                    double divergence_threshold) {
    if (!std::isfinite(initial.a) || !std::isfinite(initial.b)) {
        throw NonFiniteInput("initial state must be finite");
    }
    Trajectory traj;
    traj.params = params;
    traj.initial = initial;
    traj.states.reserve(steps + 1);
    traj.states.push_back(initial);

    const auto exceeds = [divergence_threshold](const State& s) {
        return std::max(std::abs(s.a), std::abs(s.b)) > divergence_threshold;
    };
    if (exceeds(initial)) {
        traj.truncated_at = 0;
        return traj;
    }
    for (std::size_t t = 1; t <= steps; ++t) {
        const State next = step(params, traj.states.back());
        if (!std::isfinite(next.a) || !std::isfinite(next.b)) {
            traj.truncated_at = t;  // overflow past the threshold; keep stored states finite
            break;
        }
        traj.states.push_back(next);
        if (exceeds(next)) {
            traj.truncated_at = t;
            break;
        }
    }
    return traj;
}

}  // namespace reldyn
