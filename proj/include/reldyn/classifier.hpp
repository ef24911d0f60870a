#pragma once

#include <optional>
#include <utility>

#include "reldyn/model.hpp"

namespace reldyn {

/// Tolerance shared by every classification boundary: eigenvalue comparisons
/// against +/-1 and the zero dead-zones on alpha, beta, and b0 - a0.
inline constexpr double kClassifyEpsilon = 1e-9;

/// lambda1 = 1 always, so the system is never asymptotically stable: the
/// spectral radius is 1 (marginal) when |lambda2| <= 1 and > 1 otherwise.
enum class SpectralClass { MarginallyStable, Unstable };

/// Refinement below the spectral verdict, decided on lambda2 alone:
///   lambda2 = -1  -> PeriodTwoOscillation
///   |lambda2| < 1 -> Convergent
///   lambda2 = 1   -> LinearlyDivergent (defective matrix)
///   lambda2 > 1   -> GeometricallyDivergent
///   lambda2 < -1  -> GeometricallyAlternating
enum class BehavioralClass {
    Convergent,
    PeriodTwoOscillation,
    LinearlyDivergent,
    GeometricallyDivergent,
    GeometricallyAlternating,
};

enum class Stance { Dominant, Submissive, Neutral };

enum class ArchetypeCase {
    BothDominant,
    BothSubmissive,
    ADominantBSubmissive,
    BDominantASubmissive,
    MixedWithNeutral,
};

/// Per-player dominance stances (sign of alpha resp. beta, with a dead-zone)
/// and the combined pairing label.
struct Archetype {
    Stance stance_a = Stance::Neutral;
    Stance stance_b = Stance::Neutral;
    ArchetypeCase case_label = ArchetypeCase::MixedWithNeutral;
};

/// t -> infinity behavior of one player's affinity. Alternating covers both
/// a finite two-point orbit (orbit points live in Fate) and divergence with
/// alternating sign.
enum class LimitKind { Finite, PlusInfinity, MinusInfinity, Alternating };

struct PlayerLimit {
    LimitKind kind = LimitKind::Finite;
    double value = 0.0;  // meaningful only when kind == Finite

    static PlayerLimit finite(double v) noexcept { return PlayerLimit{LimitKind::Finite, v}; }
    static PlayerLimit plus_inf() noexcept { return PlayerLimit{LimitKind::PlusInfinity, 0.0}; }
    static PlayerLimit minus_inf() noexcept { return PlayerLimit{LimitKind::MinusInfinity, 0.0}; }
    static PlayerLimit alternating() noexcept { return PlayerLimit{LimitKind::Alternating, 0.0}; }

    friend bool operator==(const PlayerLimit&, const PlayerLimit&) = default;
};

/// Asymptotic outcome for one concrete initial state. period is 2 for
/// period-2 oscillation and sign-alternating divergence, 1 otherwise.
/// orbit_points is set only for the finite period-2 orbit.
struct Fate {
    PlayerLimit a_limit;
    PlayerLimit b_limit;
    int period = 1;
    std::optional<std::pair<State, State>> orbit_points;
};

struct ClassificationReport {
    ModelParams params;
    double lambda2 = 0.0;
    SpectralClass spectral = SpectralClass::MarginallyStable;
    BehavioralClass behavioral = BehavioralClass::Convergent;
    Archetype archetype;
    std::optional<Fate> fate;          // present iff an initial state was given
    std::optional<State> equilibrium;  // limit / orbit midpoint, when one exists
};

std::pair<SpectralClass, BehavioralClass> classify_stability(
    const ModelParams& params, double epsilon = kClassifyEpsilon) noexcept;

Archetype classify_archetype(const ModelParams& params, double epsilon = kClassifyEpsilon) noexcept;

/// Limit point (equal coordinates (beta*a0 + alpha*b0) / (alpha + beta)) for
/// the convergent class. Throws NotConvergent otherwise.
State equilibrium_limit(const ModelParams& params, const State& initial,
                        double epsilon = kClassifyEpsilon);

/// The two points of the period-2 orbit, first = initial. Throws
/// NotOscillatory unless lambda2 = -1, TrivialOrbit if initial is an
/// equilibrium.
std::pair<State, State> oscillation_points(const ModelParams& params, const State& initial,
                                           double epsilon = kClassifyEpsilon);

Fate asymptotic_fate(const ModelParams& params, const State& initial,
                     double epsilon = kClassifyEpsilon);

/// Full report. Re-validates params; fate and equilibrium are populated only
/// when an initial state is supplied (equilibrium additionally requires the
/// orbit to have a limit point or midpoint).
ClassificationReport classify(const ModelParams& params,
                              std::optional<State> initial = std::nullopt,
                              double epsilon = kClassifyEpsilon);

}  // namespace reldyn
