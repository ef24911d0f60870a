#pragma once

#include <stdexcept>

namespace reldyn {

/// Base class for every error this library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The power gain must be strictly positive.
class GammaNotPositive final : public Error {
public:
    using Error::Error;
};

/// alpha = beta = 0 leaves both players indifferent to power; nothing to analyze.
class DegenerateModel final : public Error {
public:
    using Error::Error;
};

class NonFiniteInput final : public Error {
public:
    using Error::Error;
};

/// Raised when an equilibrium limit is requested outside |lambda2| < 1.
class NotConvergent final : public Error {
public:
    using Error::Error;
};

/// Raised when a period-2 orbit is requested but lambda2 != -1.
class NotOscillatory final : public Error {
public:
    using Error::Error;
};

/// Raised when the requested orbit starts at an equilibrium (a = b).
class TrivialOrbit final : public Error {
public:
    using Error::Error;
};

}  // namespace reldyn
