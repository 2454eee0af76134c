#pragma once

#include <stdexcept>
#include <string>

namespace pdc {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when quadrature refinement fails to stabilize within the round
/// budget. Carries the last two iterates of the gated quantities so the
/// caller can see how far apart they still were.
struct ConvergenceFailure : Error {
    ConvergenceFailure(const std::string& what_failed,
                       double prev, double last, int rounds_used)
        : Error(what_failed + " did not converge after " +
                std::to_string(rounds_used) + " refinement rounds (last two iterates " +
                std::to_string(prev) + ", " + std::to_string(last) + ")"),
          previous(prev), latest(last), rounds(rounds_used) {}
    double previous;
    double latest;
    int rounds;
};

/// Division by a vanishing pair-correlation amplitude (gain identically zero).
struct DegenerateGain : Error {
    explicit DegenerateGain(const std::string& msg) : Error(msg) {}
};

/// Requested a quantity that is only defined for type I crystals.
struct InvalidForTypeII : Error {
    explicit InvalidForTypeII(const std::string& msg) : Error(msg) {}
};

/// Invalid configuration file or command-line value.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

} // namespace pdc
