#pragma once

#include <stdexcept>
#include <string>

namespace lmg {

// Bad run configuration or a violated input contract. CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical invariant failed at runtime (residual, unitarity, energy drift, NaN).
// CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lmg
