#pragma once

#include <stdexcept>
#include <string>

namespace stagxx {

// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
// Carries the best available estimate so callers can still report it.
class ToleranceNotReached : public std::runtime_error {
public:
    ToleranceNotReached(const std::string& what, double best_value, double error_estimate)
        : std::runtime_error(what), best_value_(best_value), error_estimate_(error_estimate) {}

    double best_value() const noexcept { return best_value_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double best_value_;
    double error_estimate_;
};

class ZeroTemperatureUnsupported : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class InvalidState : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NegativeRadicand : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DegenerateCoupling : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DimensionTooLarge : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace stagxx
