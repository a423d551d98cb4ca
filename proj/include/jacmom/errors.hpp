#pragma once

#include <stdexcept>
#include <string>

namespace jacmom {

// Gamma-function pole that the vanishing-reciprocal convention cannot absorb.
struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

struct NotTerminating : std::runtime_error {
    explicit NotTerminating(const std::string& what) : std::runtime_error(what) {}
};

struct PoleBeforeTermination : std::runtime_error {
    explicit PoleBeforeTermination(const std::string& what) : std::runtime_error(what) {}
};

struct NonScalarLeadingCoefficient : std::runtime_error {
    explicit NonScalarLeadingCoefficient(const std::string& what) : std::runtime_error(what) {}
};

struct DegreeError : std::runtime_error {
    explicit DegreeError(const std::string& what) : std::runtime_error(what) {}
};

struct MissingCoefficient : std::runtime_error {
    explicit MissingCoefficient(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace jacmom
