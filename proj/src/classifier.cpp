#include "reldyn/classifier.hpp"

#include <cmath>
#include <string>

#include "reldyn/spectral.hpp"

namespace reldyn {
namespace {

// -1 / 0 / +1 with a dead-zone of width epsilon around zero.
int sign_within(double x, double epsilon) noexcept {
    if (x > epsilon) {
        return 1;
    }
    if (x < -epsilon) {
        return -1;
    }
    return 0;
}

// Common limit of both coordinates in the convergent class; also the
// midpoint of the period-2 orbit.
double limit_value(const ModelParams& p, const State& s) noexcept {
    return (p.beta * s.a + p.alpha * s.b) / (p.alpha + p.beta);
}

}  // namespace

std::pair<SpectralClass, BehavioralClass> classify_stability(const ModelParams& params,
                                                             double epsilon) noexcept {
    const double l2 = lambda2(params);
    if (std::abs(l2 - 1.0) <= epsilon) {
        return {SpectralClass::MarginallyStable, BehavioralClass::LinearlyDivergent};
    }
    if (std::abs(l2 + 1.0) <= epsilon) {
        return {SpectralClass::MarginallyStable, BehavioralClass::PeriodTwoOscillation};
    }
    if (std::abs(l2) < 1.0) {
        return {SpectralClass::MarginallyStable, BehavioralClass::Convergent};
    }
    if (l2 > 1.0) {
        return {SpectralClass::Unstable, BehavioralClass::GeometricallyDivergent};
    }
    return {SpectralClass::Unstable, BehavioralClass::GeometricallyAlternating};
}

Archetype classify_archetype(const ModelParams& params, double epsilon) noexcept {
    const auto stance = [epsilon](double x) {
        const int s = sign_within(x, epsilon);
        if (s > 0) {
            return Stance::Dominant;
        }
        return s < 0 ? Stance::Submissive : Stance::Neutral;
    };
    Archetype archetype;
    archetype.stance_a = stance(params.alpha);
    archetype.stance_b = stance(params.beta);
    if (archetype.stance_a == Stance::Neutral || archetype.stance_b == Stance::Neutral) {
        archetype.case_label = ArchetypeCase::MixedWithNeutral;
    } else if (archetype.stance_a == Stance::Dominant) {
        archetype.case_label = archetype.stance_b == Stance::Dominant
                                   ? ArchetypeCase::BothDominant
                                   : ArchetypeCase::ADominantBSubmissive;
    } else {
        archetype.case_label = archetype.stance_b == Stance::Submissive
                                   ? ArchetypeCase::BothSubmissive
                                   : ArchetypeCase::BDominantASubmissive;
    }
    return archetype;
}

State equilibrium_limit(const ModelParams& params, const State& initial, double epsilon) {
    const auto [spectral, behavioral] = classify_stability(params, epsilon);
    if (behavioral != BehavioralClass::Convergent) {
        throw NotConvergent("equilibrium limit requires |lambda2| < 1, got lambda2 = " +
                            std::to_string(lambda2(params)));
    }
    const double v = limit_value(params, initial);
    return State{v, v};
}

std::pair<State, State> oscillation_points(const ModelParams& params, const State& initial,
                                           double epsilon) {
    const auto [spectral, behavioral] = classify_stability(params, epsilon);
    if (behavioral != BehavioralClass::PeriodTwoOscillation) {
        throw NotOscillatory("period-2 orbit requires lambda2 = -1, got lambda2 = " +
                             std::to_string(lambda2(params)));
    }
    if (std::abs(initial.b - initial.a) <= epsilon) {
        throw TrivialOrbit("initial state is an equilibrium; its orbit is a single point");
    }
    return {initial, step(params, initial)};
}

Fate asymptotic_fate(const ModelParams& params, const State& initial, double epsilon) {
    Fate fate;
    const int gap_sign = sign_within(initial.b - initial.a, epsilon);
    if (gap_sign == 0) {
        fate.a_limit = PlayerLimit::finite(initial.a);
        fate.b_limit = PlayerLimit::finite(initial.a);
        return fate;
    }
    const int a_sign = sign_within(params.alpha, epsilon);
    const int b_sign = sign_within(params.beta, epsilon);
    const auto [spectral, behavioral] = classify_stability(params, epsilon);
    switch (behavioral) {
        case BehavioralClass::Convergent: {
            const double v = limit_value(params, initial);
            fate.a_limit = PlayerLimit::finite(v);
            fate.b_limit = PlayerLimit::finite(v);
            return fate;
        }
        case BehavioralClass::PeriodTwoOscillation: {
            const auto orbit = oscillation_points(params, initial, epsilon);
            fate.a_limit = std::abs(orbit.second.a - orbit.first.a) <= epsilon
                               ? PlayerLimit::finite(orbit.first.a)
                               : PlayerLimit::alternating();
            fate.b_limit = std::abs(orbit.second.b - orbit.first.b) <= epsilon
                               ? PlayerLimit::finite(orbit.first.b)
                               : PlayerLimit::alternating();
            fate.period = 2;
            fate.orbit_points = orbit;
            return fate;
        }
        case BehavioralClass::LinearlyDivergent: {
            // Both affinities share the per-step drift alpha*gamma*(b0 - a0).
            const int dir = a_sign * gap_sign;
            if (dir > 0) {
                fate.a_limit = PlayerLimit::plus_inf();
                fate.b_limit = PlayerLimit::plus_inf();
            } else if (dir < 0) {
                fate.a_limit = PlayerLimit::minus_inf();
                fate.b_limit = PlayerLimit::minus_inf();
            } else {
                fate.a_limit = PlayerLimit::finite(initial.a);
                fate.b_limit = PlayerLimit::finite(initial.b);
            }
            return fate;
        }
        case BehavioralClass::GeometricallyDivergent: {
            // The gap grows like lambda2^t without changing sign; each
            // player follows or flees it according to its own sensitivity.
            if (a_sign == 0) {
                fate.a_limit = PlayerLimit::finite(initial.a);
            } else {
                fate.a_limit = a_sign * gap_sign > 0 ? PlayerLimit::plus_inf()
                                                     : PlayerLimit::minus_inf();
            }
            if (b_sign == 0) {
                fate.b_limit = PlayerLimit::finite(initial.b);
            } else {
                fate.b_limit = b_sign * gap_sign < 0 ? PlayerLimit::plus_inf()
                                                     : PlayerLimit::minus_inf();
            }
            return fate;
        }
        case BehavioralClass::GeometricallyAlternating: {
            // The gap flips sign every step with growing magnitude.
            fate.a_limit =
                a_sign == 0 ? PlayerLimit::finite(initial.a) : PlayerLimit::alternating();
            fate.b_limit =
                b_sign == 0 ? PlayerLimit::finite(initial.b) : PlayerLimit::alternating();
            fate.period = 2;
            return fate;
        }
    }
    return fate;  // unreachable
}

ClassificationReport classify(const ModelParams& params, std::optional<State> initial,
                              double epsilon) {
    validate_params(params.alpha, params.beta, params.gamma);
    ClassificationReport report;
    report.params = params;
    report.lambda2 = lambda2(params);
    const auto [spectral, behavioral] = classify_stability(params, epsilon);
    report.spectral = spectral;
    report.behavioral = behavioral;
    report.archetype = classify_archetype(params, epsilon);
    if (initial.has_value()) {
        report.fate = asymptotic_fate(params, *initial, epsilon);
        if (std::abs(initial->b - initial->a) <= epsilon) {
            report.equilibrium = State{initial->a, initial->a};
        } else if (behavioral == BehavioralClass::Convergent ||
                   behavioral == BehavioralClass::PeriodTwoOscillation) {
            const double v = limit_value(params, *initial);
            report.equilibrium = State{v, v};
        }
    }
    return report;
}

}  // namespace reldyn
