#include "spirallike/verify.hpp"

#include "spirallike/format.hpp"
#include "spirallike/parallel.hpp"
#include "spirallike/radii.hpp"
#include "spirallike/subordination.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace spirallike {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

constexpr std::array<std::pair<Claim, std::string_view>, 6> kClaimNames{{
    {Claim::Lemma1, "lemma1"},
    {Claim::Theorem1, "theorem1"},
    {Claim::Corollary1, "corollary1"},
    {Claim::Theorem2, "theorem2"},
    {Claim::DifferentialIdentity, "identity"},
    {Claim::NunokawaBound, "nunokawa"},
}};

std::string trial_descriptor(std::size_t trial) { return "trial " + std::to_string(trial); }

struct TrialResult
{
    PointMargin worst;
    std::optional<HerglotzMeasure> measure;
};

// Runs per-trial margins concurrently and merges by (smallest margin, lowest trial).
template <class PerTrial>
VerificationReport run_trials(Claim claim, const Angle<double>& a, int trials, std::uint64_t seed,
                              double slack, PerTrial&& per_trial)
{
    if (trials < 1) throw std::invalid_argument("verification: trials must be >= 1");
    std::vector<std::optional<TrialResult>> results(static_cast<std::size_t>(trials));
    parallel_for(results.size(), [&](std::size_t t) { results[t] = per_trial(t); });

    VerificationReport report{claim, a.radians(), trials, seed,
                              std::numeric_limits<double>::infinity(), slack, {}, false};
    for (std::size_t t = 0; t < results.size(); ++t) {
        if (results[t]->worst.margin < report.min_margin) {
            report.min_margin = results[t]->worst.margin;
            report.worst_witness = {trial_descriptor(t), results[t]->measure, results[t]->worst.z};
        }
    }
    report.passed = report.min_margin > -slack;
    return report;
}

} // namespace

std::string_view claim_name(Claim claim) noexcept
{
    for (const auto& [c, name] : kClaimNames) {
        if (c == claim) return name;
    }
    return "unknown";
}

std::optional<Claim> parse_claim(std::string_view name) noexcept
{
    for (const auto& [c, n] : kClaimNames) {
        if (n == name) return c;
    }
    return std::nullopt;
}

PointMargin lemma1_margin(const Angle<double>& a, const HerglotzMeasure& m)
{
    PointMargin worst{std::numeric_limits<double>::infinity(), 0.0};
    for (int i = 1; i <= 9; ++i) {
        const double r = 0.1 * i;
        const CaratheodoryDisc<double> disc = caratheodory_disc(a, r);
        for (int j = 0; j < 64; ++j) {
            const DiscPoint<double> z(std::polar(r, kTwoPi * j / 64));
            const std::complex<double> p = tilt(a, eval_caratheodory(m, z));
            const double margin = disc.radius - std::abs(p - disc.center);
            if (margin < worst.margin) worst = {margin, z.value()};
        }
    }
    return worst;
}

PointMargin spirallikeness_margin(const RobertsonSample& s, double radius, int angles, double tol)
{
    const std::complex<double> unrotate = std::conj(s.lambda.rotation());
    PointMargin worst{std::numeric_limits<double>::infinity(), 0.0};
    for (int j = 0; j < angles; ++j) {
        const DiscPoint<double> z(std::polar(radius, kTwoPi * j / angles));
        const double margin = (unrotate * q_of_f(s, z, tol)).real();
        if (margin < worst.margin) worst = {margin, z.value()};
    }
    return worst;
}

PointMargin starlikeness_margin(const RobertsonSample& s, double radius, int angles, double tol)
{
    PointMargin worst{std::numeric_limits<double>::infinity(), 0.0};
    for (int j = 0; j < angles; ++j) {
        const DiscPoint<double> z(std::polar(radius, kTwoPi * j / angles));
        const double margin = q_of_f(s, z, tol).real();
        if (margin < worst.margin) worst = {margin, z.value()};
    }
    return worst;
}

VerificationReport verify_lemma1(const Angle<double>& a, int trials, std::uint64_t seed)
{
    return run_trials(Claim::Lemma1, a, trials, seed, kHalfPlaneSlack, [&](std::size_t t) {
        RobertsonSample s = trial_sample(a, seed, t);
        return TrialResult{lemma1_margin(a, s.measure), std::move(s.measure)};
    });
}

VerificationReport verify_theorem1(const Angle<double>& a, int trials, std::uint64_t seed,
                                   double safety, bool with_subordination)
{
    if (!(safety > 0.0 && safety < 1.0)) throw std::invalid_argument("verify_theorem1: safety must lie in (0, 1)");
    const double radius = safety * radius_r1(a).value;
    std::optional<BoundaryCurve> region;
    if (with_subordination) region = q_lambda_boundary(a, 4096, region_delta(a, radius));

    const Claim claim = with_subordination ? Claim::Corollary1 : Claim::Theorem1;
    return run_trials(claim, a, trials, seed, kHalfPlaneSlack, [&](std::size_t t) {
        RobertsonSample s = trial_sample(a, seed, t);
        PointMargin worst = spirallikeness_margin(s, radius);
        if (region) {
            const SubordinationVerdict v = check_q_subordination(s, *region, radius);
            if (v.margin < worst.margin) worst = {v.margin, std::polar(radius, v.witness_theta)};
        }
        return TrialResult{worst, std::move(s.measure)};
    });
}

VerificationReport verify_theorem2(const Angle<double>& a, int trials, std::uint64_t seed, double safety)
{
    if (!(safety > 0.0 && safety < 1.0)) throw std::invalid_argument("verify_theorem2: safety must lie in (0, 1)");
    const double radius = safety * radius_r2(a).value;
    return run_trials(Claim::Theorem2, a, trials, seed, kHalfPlaneSlack, [&](std::size_t t) {
        RobertsonSample s = trial_sample(a, seed, t);
        return TrialResult{starlikeness_margin(s, radius), std::move(s.measure)};
    });
}

VerificationReport verify_differential_identity(const Angle<double>& a, int grid_n)
{
    if (grid_n < 16) throw std::invalid_argument("verify_differential_identity: grid_n must be >= 16");
    auto q = [&](std::complex<double> z) { return detail::q_lambda(a, z); };

    double worst = 0.0;
    std::complex<double> worst_z = 0.0;
    for (int i = 0; i < grid_n; ++i) {
        const double r = 0.9 * i / (grid_n - 1);
        for (int j = 0; j < grid_n; ++j) {
            const std::complex<double> z = std::polar(r, kTwoPi * j / grid_n);
            const std::complex<double> qz = q(z);
            const std::complex<double> dq = (q(z + kIdentityStep) - q(z - kIdentityStep)) / (2 * kIdentityStep);
            const double residual = std::abs(qz + z * dq / qz - detail::p_lambda(a, z));
            if (residual > worst) {
                worst = residual;
                worst_z = z;
            }
        }
    }
    VerificationReport report{Claim::DifferentialIdentity,
                              a.radians(),
                              grid_n * grid_n,
                              0,
                              kIdentityThreshold - worst,
                              0.0,
                              {"grid " + std::to_string(grid_n) + "x" + std::to_string(grid_n), std::nullopt, worst_z},
                              false};
    report.passed = report.min_margin > 0.0;
    return report;
}

VerificationReport verify_nunokawa_bound(std::span<const double> a_grid)
{
    if (a_grid.empty()) throw std::invalid_argument("verify_nunokawa_bound: empty grid");
    VerificationReport report{Claim::NunokawaBound,
                              0.0,
                              static_cast<int>(a_grid.size()),
                              0,
                              std::numeric_limits<double>::infinity(),
                              kNunokawaSlack,
                              {},
                              false};
    for (double av : a_grid) {
        if (av == 0.0 || !std::isfinite(av)) {
            throw std::invalid_argument("verify_nunokawa_bound: grid values must be finite and nonzero");
        }
        // extreme k = (a + 1/a)/2 on the side of the sign of a; a + k = (3a + 1/a)/2
        const double sum = (3 * av + 1 / av) / 2;
        const double margin = std::abs(sum) - std::numbers::sqrt3;
        if (margin < report.min_margin) {
            report.min_margin = margin;
            report.worst_witness = {"a = " + format_double(av), std::nullopt, {av, 0.0}};
        }
    }
    report.passed = report.min_margin > -kNunokawaSlack;
    return report;
}

NunokawaMinimum nunokawa_minimum()
{
    auto g = [](double av) { return (3 * av + 1 / av) / 2; };
    constexpr double inv_phi = 0.6180339887498948482;
    double lo = 1e-3;
    double hi = 10.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double g1 = g(x1);
    double g2 = g(x2);
    while (hi - lo > 1e-12) {
        if (g1 <= g2) {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - inv_phi * (hi - lo);
            g1 = g(x1);
        } else {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + inv_phi * (hi - lo);
            g2 = g(x2);
        }
    }
    const double a_star = 0.5 * (lo + hi);
    return {a_star, g(a_star)};
}

FalsifyResult falsify_starlikeness(const Angle<double>& a, double radius, int max_trials,
                                   std::uint64_t seed)
{
    if (!(radius > 0.0 && radius < 1.0)) throw std::domain_error("falsify_starlikeness: radius must lie in (0, 1)");
    if (max_trials < 1) throw std::invalid_argument("falsify_starlikeness: max_trials must be >= 1");
    for (int t = 0; t < max_trials; ++t) {
        RobertsonSample s = trial_sample(a, seed, static_cast<std::uint64_t>(t));
        const PointMargin m = starlikeness_margin(s, radius);
        if (m.margin < -kHalfPlaneSlack) {
            return {true, t + 1, seed, radius,
                    {trial_descriptor(static_cast<std::size_t>(t)), std::move(s.measure), m.z}, m.margin};
        }
    }
    return {false, max_trials, seed, radius, {}, std::numeric_limits<double>::quiet_NaN()};
}

} // namespace spirallike
