#pragma once

#include "spirallike/core.hpp"

#include <Eigen/Core>

#include <complex>
#include <cstdint>

namespace spirallike {

/// Finite Herglotz measure: weights w_k >= 0 summing to one, carried by the
/// unit-circle points x_k = e^{i theta_k}.  Induces the Caratheodory function
/// h(z) = sum_k w_k (1 + x_k z) / (1 - x_k z).
class HerglotzMeasure
{
public:
    /// Throws std::invalid_argument unless the sizes match, there is at least one atom,
    /// every weight is non-negative and the weights sum to 1 within 1e-14.
    HerglotzMeasure(Eigen::ArrayXd weights, Eigen::ArrayXd thetas);

    static HerglotzMeasure single_atom(double theta = 0.0);

    Eigen::Index size() const noexcept { return weights_.size(); }
    const Eigen::ArrayXd& weights() const noexcept { return weights_; }
    const Eigen::ArrayXd& thetas() const noexcept { return thetas_; }
    const Eigen::ArrayXcd& points() const noexcept { return points_; }

private:
    Eigen::ArrayXd weights_;
    Eigen::ArrayXd thetas_;
    Eigen::ArrayXcd points_;
};

/// Member of the Robertson class determined by (lambda, measure): the normalized f with
/// 1 + z f''/f' = tilt(lambda, h) for the Caratheodory function h of the measure.
struct RobertsonSample
{
    Angle<double> lambda;
    HerglotzMeasure measure;
};

/// Default tolerance for f_value and q_of_f.
inline constexpr double kQuadratureTol = 1e-12;

/// Deterministic in seed: flat-simplex weights (normalized exponentials) and
/// uniformly distributed points.  Throws std::invalid_argument for n_atoms < 1.
HerglotzMeasure sample_measure(std::uint64_t seed, int n_atoms);

/// Sample used by trial `trial` of a harness run with the given seed: 1 to 8 atoms.
RobertsonSample trial_sample(const Angle<double>& a, std::uint64_t seed, std::uint64_t trial);

std::complex<double> eval_caratheodory(const HerglotzMeasure& m, const DiscPoint<double>& z);

/// e^{i lambda} (cos lambda * h - i sin lambda): sends Re h > 0, h(0) = 1 into the
/// tilted class with p(0) = 1.
std::complex<double> tilt(const Angle<double>& a, std::complex<double> h_value);

/// Closed form prod_k (1 - x_k z)^{-2 e^{i lambda} cos(lambda) w_k}, principal branches.
std::complex<double> f_prime(const RobertsonSample& s, const DiscPoint<double>& z);

/// f(z) as the integral of f_prime along [0, z].  Throws AccuracyError if the
/// adaptive quadrature cannot reach tol.
std::complex<double> f_value(const RobertsonSample& s, const DiscPoint<double>& z,
                             double tol = kQuadratureTol);

/// z f'(z) / f(z); series about 0 for |z| < kSeriesThreshold.
std::complex<double> q_of_f(const RobertsonSample& s, const DiscPoint<double>& z,
                            double tol = kQuadratureTol);

/// 1 + z f''(z) / f'(z) in closed form.
std::complex<double> p_of_f(const RobertsonSample& s, const DiscPoint<double>& z);

} // namespace spirallike
