#pragma once

#include <stdexcept>
#include <string>

namespace tfpe {

/// Invalid or mutually inconsistent configuration (parameters, grids, paths).
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// A time-stepped field became non-finite or blew past the runaway threshold.
class InstabilityError : public std::runtime_error {
public:
    InstabilityError(const std::string& what, double dt, double stable_bound)
        : std::runtime_error(what), dt(dt), stable_bound(stable_bound) {}
    double dt;
    double stable_bound;
};

/// Unnormalized filter mass underflowed; normalize more frequently.
class DegenerateMassError : public std::runtime_error {
public:
    explicit DegenerateMassError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tfpe
