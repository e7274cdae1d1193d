#pragma once

#include <stdexcept>
#include <string>

namespace phasefield {

/// Invalid grid, parameters, or configuration text. Carries the offending
/// key (or empty) and the 1-based line number (or 0) when parsed from text.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what, std::string key = {}, int line = 0)
        : std::runtime_error(what), key_(std::move(key)), line_(line) {}

    const std::string& key() const noexcept { return key_; }
    int line() const noexcept { return line_; }

private:
    std::string key_;
    int line_;
};

/// An operation was called outside its preconditions.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Explicit time step exceeds the forward-Euler stability bound.
class StabilityError : public std::runtime_error {
public:
    StabilityError(const std::string& what, double dt, double dt_max)
        : std::runtime_error(what), dt_(dt), dt_max_(dt_max) {}

    double dt() const noexcept { return dt_; }
    double dt_max() const noexcept { return dt_max_; }

private:
    double dt_;
    double dt_max_;
};

/// A field went non-finite during a run.
class NumericalAbort : public std::runtime_error {
public:
    NumericalAbort(const std::string& what, long step)
        : std::runtime_error(what), step_(step) {}

    long step() const noexcept { return step_; }

private:
    long step_;
};

/// Level-crossing detection found zero or several crossings.
class DetectionError : public std::runtime_error {
public:
    DetectionError(const std::string& what, int crossings)
        : std::runtime_error(what), crossings_(crossings) {}

    int crossings() const noexcept { return crossings_; }

private:
    int crossings_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the run driver when an iterative solve ends unconverged.
class NonConvergence : public std::runtime_error {
public:
    NonConvergence(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

}  // namespace phasefield
