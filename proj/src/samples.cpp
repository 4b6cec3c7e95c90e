#include "spirallike/samples.hpp"

#include "spirallike/quadrature.hpp"
#include "spirallike/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spirallike {

double Rng::exponential()
{
    // 1 - u lies in (0, 1], so the logarithm is finite.
    return -std::log(1.0 - uniform());
}

std::uint64_t Rng::below(std::uint64_t n)
{
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t x = engine_();
        if (x >= threshold) return x % n;
    }
}

HerglotzMeasure::HerglotzMeasure(Eigen::ArrayXd weights, Eigen::ArrayXd thetas)
    : weights_(std::move(weights)), thetas_(std::move(thetas))
{
    if (weights_.size() != thetas_.size()) {
        throw std::invalid_argument("HerglotzMeasure: weights and thetas differ in length");
    }
    if (weights_.size() == 0) {
        throw std::invalid_argument("HerglotzMeasure: at least one atom is required");
    }
    if (!weights_.allFinite() || !thetas_.allFinite()) {
        throw std::invalid_argument("HerglotzMeasure: non-finite weight or angle");
    }
    if ((weights_ < 0.0).any()) {
        throw std::invalid_argument("HerglotzMeasure: negative weight");
    }
    if (std::abs(weights_.sum() - 1.0) > 1e-14) {
        throw std::invalid_argument("HerglotzMeasure: weights must sum to 1");
    }
    points_ = thetas_.unaryExpr([](double t) { return std::polar(1.0, t); });
}

HerglotzMeasure HerglotzMeasure::single_atom(double theta)
{
    return HerglotzMeasure(Eigen::ArrayXd::Ones(1), Eigen::ArrayXd::Constant(1, theta));
}

HerglotzMeasure sample_measure(std::uint64_t seed, int n_atoms)
{
    if (n_atoms < 1) throw std::invalid_argument("sample_measure: n_atoms must be >= 1");

    Rng rng(seed);
    Eigen::ArrayXd weights(n_atoms);
    Eigen::ArrayXd thetas(n_atoms);
    for (int k = 0; k < n_atoms; ++k) {
        weights[k] = rng.exponential();
        thetas[k] = 2 * std::numbers::pi * rng.uniform();
    }
    const double total = weights.sum();
    if (total > 0.0) {
        weights /= total;
    } else {
        weights.setConstant(1.0 / n_atoms);
    }
    // one correction pass keeps the sum within an ulp or two of 1
    weights[0] += 1.0 - weights.sum();
    if (weights[0] < 0.0) weights[0] = 0.0;
    return HerglotzMeasure(std::move(weights), std::move(thetas));
}

RobertsonSample trial_sample(const Angle<double>& a, std::uint64_t seed, std::uint64_t trial)
{
    const std::uint64_t trial_seed = mix_seed(seed ^ mix_seed(trial));
    Rng rng(trial_seed);
    const int n_atoms = 1 + static_cast<int>(rng.below(8));
    return {a, sample_measure(mix_seed(trial_seed), n_atoms)};
}

std::complex<double> eval_caratheodory(const HerglotzMeasure& m, const DiscPoint<double>& z)
{
    const Eigen::ArrayXcd xz = m.points() * z.value();
    return (m.weights().cast<std::complex<double>>() * (1.0 + xz) / (1.0 - xz)).sum();
}

std::complex<double> tilt(const Angle<double>& a, std::complex<double> h_value)
{
    const double lam = a.radians();
    return a.rotation() * (std::cos(lam) * h_value - std::complex<double>(0.0, std::sin(lam)));
}

namespace {

// 1 + e^{2 i lambda} = 2 e^{i lambda} cos(lambda)
std::complex<double> exponent_scale(const Angle<double>& a)
{
    return 1.0 + a.double_rotation();
}

std::complex<double> f_prime_raw(const RobertsonSample& s, std::complex<double> z)
{
    // Sum of principal logarithms then one exponential: equal to the product of the
    // per-atom principal powers.
    std::complex<double> log_sum = 0;
    const auto& w = s.measure.weights();
    const auto& x = s.measure.points();
    for (Eigen::Index k = 0; k < w.size(); ++k) log_sum += w[k] * detail::log1p(-x[k] * z);
    return std::exp(-exponent_scale(s.lambda) * log_sum);
}

// f(z) / z = integral of f'(t z) over t in [0, 1].
//
// Near t = 1 the factors 1 - x_k t z can be tiny, and forming them from t z rounds
// differently at every node; the quadrature then chases noise.  Writing them as
// (1 - t) + t (1 - x_k z) with 1 - x_k z computed once keeps the integrand smooth.
std::complex<double> mean_derivative(const RobertsonSample& s, std::complex<double> z, double tol)
{
    const auto& w = s.measure.weights();
    const Eigen::ArrayXcd& x = s.measure.points();
    const Eigen::ArrayXcd gap = 1.0 - x * z;
    const std::complex<double> scale = exponent_scale(s.lambda);
    auto integrand = [&](double t) {
        std::complex<double> log_sum = 0;
        for (Eigen::Index k = 0; k < w.size(); ++k) {
            log_sum += w[k] * (t < 0.5 ? detail::log1p(-x[k] * (t * z))
                                       : std::log((1.0 - t) + t * gap[k]));
        }
        return std::exp(-scale * log_sum);
    };
    return integrate(integrand, 0.0, 1.0, tol).value;
}

} // namespace

std::complex<double> f_prime(const RobertsonSample& s, const DiscPoint<double>& z)
{
    return f_prime_raw(s, z.value());
}

std::complex<double> f_value(const RobertsonSample& s, const DiscPoint<double>& z, double tol)
{
    if (!(tol > 0.0)) throw std::invalid_argument("f_value: tol must be positive");
    const std::complex<double> zv = z.value();
    const double mod = std::abs(zv);
    if (mod == 0.0) return 0.0;
    return zv * mean_derivative(s, zv, tol / mod);
}

std::complex<double> q_of_f(const RobertsonSample& s, const DiscPoint<double>& z, double tol)
{
    if (!(tol > 0.0)) throw std::invalid_argument("q_of_f: tol must be positive");
    const std::complex<double> zv = z.value();
    if (std::abs(zv) < kSeriesThreshold) {
        // log f' = L1 z + L2 z^2 + ..., L_j = m sum_k w_k x_k^j / j
        const auto& w = s.measure.weights();
        const auto& x = s.measure.points();
        const std::complex<double> m = exponent_scale(s.lambda);
        const std::complex<double> l1 = m * (w.cast<std::complex<double>>() * x).sum();
        const std::complex<double> l2 = m * (w.cast<std::complex<double>>() * x * x).sum() / 2.0;
        const std::complex<double> a1 = l1;
        const std::complex<double> a2 = l2 + l1 * l1 / 2.0;
        return 1.0 + zv * (a1 / 2.0 + zv * (2.0 * a2 / 3.0 - a1 * a1 / 4.0));
    }
    return f_prime_raw(s, zv) / mean_derivative(s, zv, tol);
}

std::complex<double> p_of_f(const RobertsonSample& s, const DiscPoint<double>& z)
{
    const Eigen::ArrayXcd& x = s.measure.points();
    const std::complex<double> zv = z.value();
    const std::complex<double> sum =
        (s.measure.weights().cast<std::complex<double>>() * x / (1.0 - x * zv)).sum();
    return 1.0 + exponent_scale(s.lambda) * zv * sum;
}

} // namespace spirallike
