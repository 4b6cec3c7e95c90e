#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace spirallike {

/// Adaptive refinement gave up before meeting its tolerance.
class AccuracyError : public std::runtime_error
{
public:
    AccuracyError(const std::string& what, std::complex<double> best_estimate, double error_estimate)
        : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate)
    {}

    std::complex<double> best_estimate() const noexcept { return best_estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    std::complex<double> best_estimate_;
    double error_estimate_;
};

/// A point lies too close to a boundary curve for its winding number to be trusted.
class IndeterminateError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace spirallike
