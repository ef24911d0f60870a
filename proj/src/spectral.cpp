#include "reldyn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace reldyn {

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << "[[" << m.m11 << ", " << m.m12 << "], [" << m.m21 << ", " << m.m22 << "]]";
}

std::ostream& operator<<(std::ostream& os, const Vec2& v) {
    return os << "(" << v.x << ", " << v.y << ")";
}

namespace {

// Repeated squaring; exact for base in {-1, 0, 1} at any exponent.
double pow_uint(double base, std::uint64_t exp) noexcept {
    double result = 1.0;
    double b = base;
    std::uint64_t e = exp;
    while (e != 0) {
        if (e & 1u) {
            result *= b;
        }
        e >>= 1u;
        if (e != 0) {
            b *= b;
        }
    }
    return result;
}

}  // namespace

Mat2 operator*(const Mat2& lhs, const Mat2& rhs) noexcept {
    return Mat2{
        lhs.m11 * rhs.m11 + lhs.m12 * rhs.m21,
        lhs.m11 * rhs.m12 + lhs.m12 * rhs.m22,
        lhs.m21 * rhs.m11 + lhs.m22 * rhs.m21,
        lhs.m21 * rhs.m12 + lhs.m22 * rhs.m22,
    };
}

State apply(const Mat2& m, const State& s) noexcept {
    return State{m.m11 * s.a + m.m12 * s.b, m.m21 * s.a + m.m22 * s.b};
}

Vec2 apply(const Mat2& m, const Vec2& v) noexcept {
    return Vec2{m.m11 * v.x + m.m12 * v.y, m.m21 * v.x + m.m22 * v.y};
}

Mat2 transition_matrix(const ModelParams& params) noexcept {
    const double ag = params.alpha * params.gamma;
    const double bg = params.beta * params.gamma;
    return Mat2{1.0 - ag, ag, bg, 1.0 - bg};
}

double lambda2(const ModelParams& params) noexcept {
    return 1.0 - params.alpha * params.gamma - params.beta * params.gamma;
}

Spectrum spectrum(const ModelParams& params, double epsilon) noexcept {
    Spectrum s;
    s.lambda1 = 1.0;
    s.lambda2 = lambda2(params);
    s.v1 = Vec2{1.0, 1.0};
    s.v2 = Vec2{-params.alpha, params.beta};
    s.diagonalizable = std::abs(params.alpha + params.beta) > epsilon;
    return s;
}

Mat2 matrix_power_closed(const ModelParams& params, std::uint64_t t, double epsilon) noexcept {
    const double sum = params.alpha + params.beta;
    if (std::abs(sum) <= epsilon) {
        const double k = static_cast<double>(t) * params.alpha * params.gamma;
        return Mat2{1.0 - k, k, -k, 1.0 + k};
    }
    const double l = pow_uint(lambda2(params), t);
    const double a = params.alpha;
    const double b = params.beta;
    return Mat2{
        (b + a * l) / sum,
        (a - a * l) / sum,
        (b - b * l) / sum,
        (a + b * l) / sum,
    };
}

Mat2 matrix_power_iterative(const ModelParams& params, std::uint64_t t) noexcept {
    const Mat2 m = transition_matrix(params);
    Mat2 acc = Mat2::identity();
    for (std::uint64_t i = 0; i < t; ++i) {
        acc = m * acc;
    }
    return acc;
}

State state_at(const ModelParams& params, const State& initial, std::uint64_t t,
               double epsilon) noexcept {
    if (initial.a == initial.b) {
        return initial;
    }
    if (std::abs(params.alpha + params.beta) <= epsilon) {
        const double drift =
            static_cast<double>(t) * params.alpha * params.gamma * (initial.b - initial.a);
        return State{initial.a + drift, initial.b + drift};
    }
    return apply(matrix_power_closed(params, t, epsilon), initial);
}

PowerComparison compare_matrix_powers(const ModelParams& params, std::uint64_t max_t) noexcept {
    const auto max_abs_diff = [](const Mat2& x, const Mat2& y) {
        double d = std::abs(x.m11 - y.m11);
        d = std::max(d, std::abs(x.m12 - y.m12));
        d = std::max(d, std::abs(x.m21 - y.m21));
        return std::max(d, std::abs(x.m22 - y.m22));
    };
    PowerComparison result;
    const Mat2 m = transition_matrix(params);
    Mat2 acc = Mat2::identity();  // equals matrix_power_iterative(params, t) at step t
    for (std::uint64_t t = 0;; ++t) {
        const double d = max_abs_diff(matrix_power_closed(params, t), acc);
        if (d > result.max_abs_entry_diff) {
            result.max_abs_entry_diff = d;
            result.at_t = t;
        }
        if (t == max_t) {
            break;
        }
        acc = m * acc;
    }
    return result;
}

}  // namespace reldyn
