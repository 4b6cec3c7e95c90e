// Acceptance suite: one PASS/FAIL line per criterion, with the measured value, the
// pinned tolerance and the wall-clock time against its limit.  Exit status is nonzero
// if any criterion fails.

#include "spirallike/core.hpp"
#include "spirallike/radii.hpp"
#include "spirallike/samples.hpp"
#include "spirallike/subordination.hpp"
#include "spirallike/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace {

using namespace spirallike;
using cd = std::complex<double>;

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

struct Outcome
{
    bool ok;
    std::string detail;
};

struct Criterion
{
    int id;
    std::string title;
    double time_limit_s;
    std::function<Outcome()> check;
};

std::string fmt(const char* pattern, double a, double b = 0, double c = 0, double d = 0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
    return buf;
}

std::vector<double> symmetric_t_grid(int n_per_side)
{
    std::vector<double> t;
    for (int i = 0; i < n_per_side; ++i) {
        const double v = kSqrt3 + (100.0 - kSqrt3) * i / (n_per_side - 1);
        t.push_back(v);
        t.push_back(-v);
    }
    return t;
}

Outcome ac01()
{
    const double value = radius_r2(Angle(kPi / 4)).value;
    const double err = std::abs(value - (kSqrt3 - 1));
    return {err <= 1e-12, fmt("R2(pi/4) = %.17g, |err| = %.3g (tol 1e-12)", value, err)};
}

Outcome ac02()
{
    const double r2 = radius_r2(Angle(0.0)).value;
    const RadiusReport r1 = radius_r1(Angle(0.0), 1e-9);
    const double err = std::max(std::abs(r2 - 1), std::abs(r1.value - 1));
    return {err <= 1e-9,
            fmt("R2(0) = %.17g, R1(0) = %.17g via bisection cutoff [%.12g, %.12g] (tol 1e-9)", r2, r1.value,
                r1.bracket_lo, r1.bracket_hi)};
}

Outcome ac03()
{
    const MinRadius m = grid_min_radius_r2(100000);
    const double err = std::abs(m.value - (kSqrt3 - 1));
    const double loc = std::abs(std::abs(m.lambda_star) - kPi / 4);
    return {err <= 1e-9 && loc <= 1e-4,
            fmt("grid min %.17g at lambda %.9f; |err| = %.3g (tol 1e-9), |lambda - pi/4| = %.3g (tol 1e-4)", m.value,
                m.lambda_star, err, loc)};
}

Outcome ac04()
{
    // One-time brute-force validation of the closed form on a 2^14-point boundary scan.
    const Angle a(0.0);
    double worst_scan = 0.0;
    double worst_psi = 0.0;
    for (int k = 1; k <= 9; ++k) {
        const double r = 0.1 * k;
        double scan = 0.0;
        for (int j = 0; j < (1 << 14); ++j) {
            const cd z = std::polar(r, 2 * kPi * j / (1 << 14));
            scan = std::max(scan, std::abs(p_lambda_inverse(a, q_lambda(a, DiscPoint(z)))) / r);
        }
        worst_scan = std::max(worst_scan, std::abs(scan - 1 / (2 - r)));
        worst_psi = std::max(worst_psi, std::abs(psi(a, r).value - 1 / (2 - r)));
    }
    return {worst_psi <= 1e-9 && worst_scan <= 1e-9,
            fmt("max |psi_0(r) - 1/(2-r)| = %.3g, brute-force scan vs closed form %.3g (tol 1e-9)", worst_psi,
                worst_scan)};
}

Outcome ac05()
{
    double worst_drop = -1.0;
    for (double lam : {0.0, kPi / 6, kPi / 4, kPi / 3}) {
        double prev = psi(Angle(lam), 0.0).value;
        for (int i = 1; i < 50; ++i) {
            const double v = psi(Angle(lam), 0.999 * i / 49).value;
            worst_drop = std::max(worst_drop, prev - v);
            prev = v;
        }
    }
    return {worst_drop <= 1e-9,
            fmt("largest drop between consecutive radii %.3g (tol 1e-9; negative means strictly increasing), 4 angles x 50 radii", worst_drop)};
}

Outcome ac06()
{
    // Two clauses: the minimum over the grid lies in [-1e-12, 1e-6], and the margin is near
    // zero at the stated location t = -sign(sin 2 lambda) sqrt 3.  The second clause is
    // evaluated literally; |P^{-1}(it)|^2 = (t^2 + 1) / (t^2 + 1 + 2 t sin 2 lambda) puts
    // the minimum at t = +sign(sin 2 lambda) sqrt 3 instead.
    const std::vector<double> grid = symmetric_t_grid(50001);
    double lo = 1e300, hi = -1e300, stated_worst = 0.0, actual_worst = 0.0;
    for (int k = 1; k <= 5; ++k) {
        const Angle a(k * kPi / 12);
        const double m = omega_avoidance_margin(a, grid);
        lo = std::min(lo, m);
        hi = std::max(hi, m);
        const double sign = std::sin(2 * a.radians()) > 0 ? 1.0 : -1.0;
        const std::vector<double> stated = {-sign * kSqrt3};
        const std::vector<double> actual = {sign * kSqrt3};
        stated_worst = std::max(stated_worst, std::abs(omega_avoidance_margin(a, stated)));
        actual_worst = std::max(actual_worst, std::abs(omega_avoidance_margin(a, actual)));
    }
    const bool range_ok = lo >= -1e-12 && hi <= 1e-6;
    const bool stated_ok = stated_worst <= 1e-6;
    return {range_ok && stated_ok,
            fmt("min margins in [%.3g, %.3g] (need [-1e-12, 1e-6]); margin at t = -sign(sin 2l) sqrt3 up to %.6g "
                "(need <= 1e-6); at t = +sign(sin 2l) sqrt3 up to %.3g",
                lo, hi, stated_worst, actual_worst)};
}

Outcome ac07()
{
    bool ok = true;
    double worst = 1e300;
    for (double lam : {0.0, kPi / 6, -kPi / 6, kPi / 3, -kPi / 3}) {
        const VerificationReport r = verify_lemma1(Angle(lam), 100, 2024);
        ok = ok && r.passed;
        worst = std::min(worst, r.min_margin);
    }
    double equality = 0.0;
    for (double lam : {0.0, kPi / 6, -kPi / 3}) {
        for (double theta : {0.0, 1.0, 4.0}) {
            equality = std::max(equality, std::abs(lemma1_margin(Angle(lam), HerglotzMeasure::single_atom(theta)).margin));
        }
    }
    return {ok && equality <= 1e-12,
            fmt("min B(r) - |p - A(r)| over 500 samples = %.3g (slack 1e-9); extremal |margin| <= %.3g (tol 1e-12)",
                worst, equality)};
}

Outcome ac08()
{
    bool ok = true;
    std::string detail;
    for (double lam : {0.0, kPi / 4, -kPi / 4}) {
        const Angle a(lam);
        const VerificationReport half = verify_theorem1(a, 200, 7, kDefaultSafety, false);
        const VerificationReport sub = verify_theorem1(a, 200, 7, kDefaultSafety, true);
        ok = ok && half.passed && sub.passed;
        detail += fmt("lambda %.4f: Re margin %.3g, with subordination %.3g; ", lam, half.min_margin, sub.min_margin);
    }
    return {ok, detail + "200 samples each, |z| = 0.999 R1 (slack 1e-9)"};
}

Outcome ac09()
{
    bool ok = true;
    std::string detail;
    for (double lam : {kPi / 4, -kPi / 4, kPi / 3, -kPi / 3}) {
        const VerificationReport r = verify_theorem2(Angle(lam), 200, 7, kDefaultSafety);
        ok = ok && r.passed;
        detail += fmt("lambda %.4f: %.3g; ", lam, r.min_margin);
    }
    return {ok, "min Re Q_f " + detail + "200 samples each, |z| = 0.999 R2 (slack 1e-9)"};
}

Outcome ac10()
{
    bool ok = true;
    double worst = 0.0;
    for (double lam : {0.0, kPi / 12, -kPi / 6, kPi / 4, -kPi / 4, kPi / 3, 0.49 * kPi}) {
        const VerificationReport r = verify_differential_identity(Angle(lam), 64);
        ok = ok && r.passed;
        worst = std::max(worst, kIdentityThreshold - r.min_margin);
    }
    return {ok, fmt("max residual %.3g over 7 angles, 64x64 grid (tol 1e-6)", worst)};
}

Outcome ac11()
{
    const NunokawaMinimum m = nunokawa_minimum();
    const double err = std::abs(m.value - kSqrt3);
    const double loc = std::abs(m.a_star - 1 / kSqrt3);
    return {err <= 1e-12 && loc <= 1e-6,
            fmt("min (3a + 1/a)/2 = %.17g at a = %.12f; |err| = %.3g (tol 1e-12), |a - 1/sqrt3| = %.3g (tol 1e-6)",
                m.value, m.a_star, err, loc)};
}

Outcome ac12()
{
    std::mt19937_64 gen(12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (double lam : {0.0, kPi / 7, -kPi / 4, kPi / 3, -0.45 * kPi}) {
        const Angle a(lam);
        const RobertsonSample s{a, HerglotzMeasure::single_atom()};
        for (int i = 0; i < 100; ++i) {
            const DiscPoint<double> z(std::polar(0.9 * std::sqrt(u(gen)), 2 * kPi * u(gen)));
            worst = std::max({worst, std::abs(f_value(s, z) - f_lambda(a, z)), std::abs(q_of_f(s, z) - q_lambda(a, z)),
                              std::abs(p_of_f(s, z) - p_lambda(a, z))});
        }
    }
    return {worst <= 1e-10, fmt("max deviation from f, Q, P of the extremal function %.3g over 5 x 100 points, "
                                "|z| <= 0.9 (tol 1e-10)",
                                worst)};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "R2(pi/4) = sqrt3 - 1", 1e-3, ac01},
        {2, "R1(0) = R2(0) = 1", 10, ac02},
        {3, "grid minimum of R2", 1, ac03},
        {4, "psi_0 closed form", 5, ac04},
        {5, "psi monotone in r", 60, ac05},
        {6, "Omega-avoidance sharpness", 5, ac06},
        {7, "tilted Caratheodory disc bound", 60, ac07},
        {8, "spirallikeness and Q-subordination inside R1", 600, ac08},
        {9, "starlikeness inside R2", 600, ac09},
        {10, "differential identity", 10, ac10},
        {11, "Nunokawa bound", 1, ac11},
        {12, "extremal collapse", 10, ac12},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome{false, ""};
        try {
            outcome = c.check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < c.time_limit_s;
        const bool pass = outcome.ok && in_time;
        failures += pass ? 0 : 1;
        std::printf("AC%02d %s  %s: %s; runtime %.4g s (limit %g s%s)\n", c.id, pass ? "PASS" : "FAIL",
                    c.title.c_str(), outcome.detail.c_str(), seconds, c.time_limit_s, in_time ? "" : ", exceeded");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
