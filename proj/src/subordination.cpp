#include "spirallike/subordination.hpp"

#include "spirallike/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace spirallike {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kInvPhi = 0.6180339887498948482; // (sqrt 5 - 1) / 2

double wrap_angle(double theta)
{
    double t = std::fmod(theta, kTwoPi);
    if (t < 0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;
    return t;
}

struct PsiIntegrand
{
    Angle<double> a;
    double r;

    double at(std::complex<double> z) const
    {
        return std::abs(detail::p_lambda_inverse(a, detail::q_lambda(a, z))) / r;
    }
    double operator()(double theta) const { return at(std::polar(r, theta)); }
};

// Maximizes a unimodal function on [lo, hi]; returns (argmax, value).
template <class F>
std::pair<double, double> golden_section_max(const F& g, double lo, double hi, double tol)
{
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double g1 = g(x1);
    double g2 = g(x2);
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        if (g1 >= g2) {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - kInvPhi * (hi - lo);
            g1 = g(x1);
        } else {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + kInvPhi * (hi - lo);
            g2 = g(x2);
        }
    }
    return g1 >= g2 ? std::pair{x1, g1} : std::pair{x2, g2};
}

} // namespace

PsiValue psi(const Angle<double>& a, double r, int grid_n, double refine_tol)
{
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("psi: r must lie in [0, 1)");
    if (grid_n < 64) throw std::invalid_argument("psi: grid_n must be at least 64");
    if (!(refine_tol > 0.0)) throw std::invalid_argument("psi: refine_tol must be positive");
    if (r == 0.0) return {0.5, 0.0};

    const PsiIntegrand g{a, r};
    const double step = kTwoPi / grid_n;

    // Grid points j and n - j are exact conjugates so psi(lambda) and psi(-lambda)
    // see mirrored samples.
    std::vector<double> values(grid_n);
    for (int j = 0; j < grid_n; ++j) {
        const int k = std::min(j, grid_n - j);
        std::complex<double> z = std::polar(r, step * k);
        if (k != j) z = std::conj(z);
        values[j] = g.at(z);
        if (std::isinf(values[j])) return {std::numeric_limits<double>::infinity(), step * j};
    }

    std::vector<std::pair<double, double>> candidates; // (theta, value)
    for (int j = 0; j < grid_n; ++j) {
        const double prev = values[(j + grid_n - 1) % grid_n];
        const double next = values[(j + 1) % grid_n];
        if (values[j] < prev || values[j] < next) continue;
        candidates.emplace_back(step * j, values[j]);
        const auto [theta, v] = golden_section_max(g, step * (j - 1), step * (j + 1), refine_tol);
        candidates.emplace_back(wrap_angle(theta), v);
    }

    double best = -std::numeric_limits<double>::infinity();
    for (const auto& [theta, v] : candidates) best = std::max(best, v);
    double witness = kTwoPi;
    for (const auto& [theta, v] : candidates) {
        if (v >= best - refine_tol) witness = std::min(witness, theta);
    }
    return {best, witness};
}

SubordinationVerdict is_subordinate_to_halfplane(const Eigen::Ref<const Eigen::ArrayXcd>& values,
                                                 const Angle<double>& a)
{
    if (values.size() == 0) {
        throw std::invalid_argument("is_subordinate_to_halfplane: empty sample list");
    }
    const std::complex<double> unrotate = std::conj(a.rotation());
    Eigen::Index worst = 0;
    const double margin = (unrotate * values).real().minCoeff(&worst);
    return {margin > 0.0, kTwoPi * static_cast<double>(worst) / static_cast<double>(values.size()),
            margin};
}

double region_delta(const Angle<double>& a, double rho)
{
    if (!(rho >= 0.0 && rho < 1.0)) throw std::domain_error("region_delta: rho must lie in [0, 1)");
    const double delta = std::min(kCurveDelta, 0.5 * (1.0 - rho));
    if (!(1.0 - std::max(delta, 2 * (1.0 - q_lambda_pole_radius(a))) > rho)) {
        throw std::domain_error("region_delta: no pole-free curve of Q_lambda encloses |z| = rho");
    }
    return delta;
}

BoundaryCurve q_lambda_boundary(const Angle<double>& a, int n, double delta)
{
    if (n < 3) throw std::invalid_argument("q_lambda_boundary: need at least three samples");
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("q_lambda_boundary: delta must lie in (0, 1)");
    }
    // Stay inside the first pole so the winding number counts preimages only.
    delta = std::max(delta, 2 * (1.0 - q_lambda_pole_radius(a)));
    // phi(zeta) = (zeta + c) / (1 + c zeta) compresses angles near zeta = 1 by the
    // factor (1 - c) / (1 + c) = sqrt(delta).
    const double kappa = std::sqrt(delta);
    const double c = (1 - kappa) / (1 + kappa);
    const double radius = 1.0 - delta;

    BoundaryCurve curve;
    curve.theta.resize(n);
    curve.values.resize(n);
    for (int j = 0; j < n; ++j) {
        const std::complex<double> zeta = std::polar(1.0, kTwoPi * j / n);
        const double theta = j == 0 ? 0.0 : wrap_angle(std::arg((zeta + c) / (1.0 + c * zeta)));
        curve.theta[j] = theta;
        curve.values[j] = detail::q_lambda(a, std::polar(radius, theta));
    }
    return curve;
}

int winding_number(std::complex<double> point, const BoundaryCurve& boundary)
{
    const Eigen::Index n = boundary.values.size();
    double total = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        const std::complex<double> u = boundary.values[j] - point;
        const std::complex<double> v = boundary.values[(j + 1) % n] - point;
        total += std::atan2(u.real() * v.imag() - u.imag() * v.real(),
                            u.real() * v.real() + u.imag() * v.imag());
    }
    return static_cast<int>(std::lround(total / kTwoPi));
}

double distance_to_curve(std::complex<double> point, const BoundaryCurve& boundary)
{
    const Eigen::Index n = boundary.values.size();
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < n; ++j) {
        const std::complex<double> p = boundary.values[j];
        const std::complex<double> seg = boundary.values[(j + 1) % n] - p;
        const double len2 = std::norm(seg);
        double t = len2 > 0.0 ? ((point - p) * std::conj(seg)).real() / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        best = std::min(best, std::abs(point - (p + t * seg)));
    }
    return best;
}

bool region_membership(std::complex<double> point, const BoundaryCurve& boundary, double near_tol)
{
    if (!boundary.closed) throw std::invalid_argument("region_membership: curve is not closed");
    if (boundary.values.size() < 3) {
        throw std::invalid_argument("region_membership: need at least three curve samples");
    }
    if (distance_to_curve(point, boundary) < near_tol) {
        throw IndeterminateError("region_membership: point lies on the boundary curve");
    }
    return winding_number(point, boundary) != 0;
}

SubordinationVerdict check_q_subordination(const RobertsonSample& f, const BoundaryCurve& region,
                                           double rho, int test_n, double tol)
{
    if (!(rho > 0.0 && rho < 1.0)) throw std::domain_error("check_q_subordination: rho must lie in (0, 1)");
    if (test_n < 1) throw std::invalid_argument("check_q_subordination: test_n must be positive");
    if (!region.closed || region.values.size() < 3) {
        throw std::invalid_argument("check_q_subordination: region must be a closed curve");
    }

    SubordinationVerdict verdict{true, 0.0, std::numeric_limits<double>::infinity()};
    for (int j = 0; j < test_n; ++j) {
        const double theta = kTwoPi * j / test_n;
        const std::complex<double> w = q_of_f(f, DiscPoint(std::polar(rho, theta)), tol);
        const double d = distance_to_curve(w, region);
        if (d < 1e-9) throw IndeterminateError("check_q_subordination: Q_f touches the region boundary");
        const bool inside = winding_number(w, region) != 0;
        const double signed_distance = inside ? d : -d;
        if (signed_distance < verdict.margin) {
            verdict.margin = signed_distance;
            verdict.witness_theta = theta;
        }
    }
    verdict.holds = verdict.margin > 0.0;
    return verdict;
}

SubordinationVerdict check_q_subordination(const RobertsonSample& f, const Angle<double>& a,
                                           double rho, int curve_n, int test_n, double tol)
{
    if (!(rho > 0.0 && rho < 1.0)) throw std::domain_error("check_q_subordination: rho must lie in (0, 1)");
    if (!(psi(a, rho).value < 1.0)) {
        throw std::domain_error("check_q_subordination: rho must be below R1(lambda)");
    }
    return check_q_subordination(f, q_lambda_boundary(a, curve_n, region_delta(a, rho)), rho, test_n, tol);
}

} // namespace spirallike
