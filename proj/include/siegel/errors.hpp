#pragma once

#include <stdexcept>
#include <string>

namespace siegel {

// Quadrature could not reach the requested tolerance within its budget.
// Carries the error bound that was actually achieved.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double requested, double achieved)
        : std::runtime_error(what), requested_(requested), achieved_(achieved) {}

    double requested() const noexcept { return requested_; }
    double achieved() const noexcept { return achieved_; }

private:
    double requested_;
    double achieved_;
};

// An exact computation exceeded its enumeration/memory budget.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace siegel
