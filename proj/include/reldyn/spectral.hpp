#pragma once

#include <cstdint>
#include <iosfwd>

#include "reldyn/model.hpp"

namespace reldyn {

/// Row-major 2x2 real matrix.
struct Mat2 {
    double m11 = 0.0;
    double m12 = 0.0;
    double m21 = 0.0;
    double m22 = 0.0;

    static constexpr Mat2 identity() noexcept { return Mat2{1.0, 0.0, 0.0, 1.0}; }

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

std::ostream& operator<<(std::ostream& os, const Mat2& m);
std::ostream& operator<<(std::ostream& os, const Vec2& v);

/// Entries are evaluated in the fixed order fl(fl(l*r) + fl(l*r)).
Mat2 operator*(const Mat2& lhs, const Mat2& rhs) noexcept;

State apply(const Mat2& m, const State& s) noexcept;
Vec2 apply(const Mat2& m, const Vec2& v) noexcept;

/// Tolerance on |alpha + beta| below which the transition matrix is treated
/// as defective (single eigenvalue 1, one eigenvector).
inline constexpr double kBranchEpsilon = 1e-12;

/// Eigenstructure of the transition matrix. lambda1 = 1 with eigenvector
/// (1, 1) always; lambda2 = 1 - alpha*gamma - beta*gamma with eigenvector
/// (-alpha, beta). The two eigenvectors coincide (up to scale) exactly when
/// alpha + beta = 0, which is the defective case.
struct Spectrum {
    double lambda1 = 1.0;
    double lambda2 = 0.0;
    Vec2 v1{1.0, 1.0};
    Vec2 v2{0.0, 0.0};
    bool diagonalizable = true;
};

/// M = [[1 - ag, ag], [bg, 1 - bg]] with ag = alpha*gamma, bg = beta*gamma,
/// so that step(params, s) = M * (a, b).
Mat2 transition_matrix(const ModelParams& params) noexcept;

double lambda2(const ModelParams& params) noexcept;

Spectrum spectrum(const ModelParams& params, double epsilon = kBranchEpsilon) noexcept;

/// M^t in closed form. Diagonalizable branch (|alpha + beta| > epsilon):
///   M^t = 1/(alpha+beta) * [[beta + alpha*L, alpha - alpha*L],
///                           [beta - beta*L,  alpha + beta*L]],  L = lambda2^t.
/// Defective branch: M = I + N with N^2 = 0, so M^t = I + t*N:
///   M^t = [[1 - t*ag, t*ag], [-t*ag, 1 + t*ag]].
Mat2 matrix_power_closed(const ModelParams& params, std::uint64_t t,
                         double epsilon = kBranchEpsilon) noexcept;

/// M^t by t successive left-multiplications of the transition matrix,
/// starting from the identity. Independent check for matrix_power_closed.
Mat2 matrix_power_iterative(const ModelParams& params, std::uint64_t t) noexcept;

/// State after t steps via the closed form. Equal affinities are returned
/// unchanged; in the defective branch both coordinates gain the same drift
/// t * alpha * gamma * (b0 - a0), leaving the gap b - a constant.
State state_at(const ModelParams& params, const State& initial, std::uint64_t t,
               double epsilon = kBranchEpsilon) noexcept;

/// Worst entrywise disagreement between the closed-form and iterative
/// matrix powers over t = 0..max_t. at_t is the first t attaining it.
struct PowerComparison {
    double max_abs_entry_diff = 0.0;
    std::uint64_t at_t = 0;
};

PowerComparison compare_matrix_powers(const ModelParams& params, std::uint64_t max_t) noexcept;

}  // namespace reldyn
