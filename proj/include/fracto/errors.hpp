// Error types shared across the simulation modules.

#pragma once

#include <stdexcept>
#include <string>

namespace fracto {

/// A state entry exceeded the divergence threshold (1e12) or went non-finite.
class BlowupError : public std::runtime_error {
public:
    BlowupError(double t, long step, double magnitude)
        : std::runtime_error("numerical blow-up at t = " + std::to_string(t) +
                             " (step " + std::to_string(step) + ", max |entry| = " +
                             std::to_string(magnitude) + ")"),
          t_(t), step_(step), magnitude_(magnitude) {}

    double t() const { return t_; }
    long step() const { return step_; }
    double magnitude() const { return magnitude_; }

private:
    double t_;
    long step_;
    double magnitude_;
};

/// Configuration text failed to parse or validate.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& msg, int line = 0, int column = 0)
        : std::runtime_error(line > 0 ? ("config line " + std::to_string(line) +
                                         ":" + std::to_string(column) + ": " + msg)
                                      : ("config: " + msg)),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// A lattice-vs-continuum comparison could not be completed or failed its bound.
class ComparisonFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kBlowupThreshold = 1e12;

}  // namespace fracto
