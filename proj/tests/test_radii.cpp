#include "spirallike/radii.hpp"

#include "spirallike/subordination.hpp"

#include "golden_values.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace {

using spirallike::Angle;
using spirallike::RadiusKind;

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

std::vector<double> t_grid(double sign, int n = 20001)
{
    std::vector<double> t(n);
    for (int i = 0; i < n; ++i) t[i] = sign * (kSqrt3 + (100.0 - kSqrt3) * i / (n - 1));
    return t;
}

std::vector<double> symmetric_t_grid()
{
    std::vector<double> t = t_grid(1.0);
    const std::vector<double> neg = t_grid(-1.0);
    t.insert(t.end(), neg.begin(), neg.end());
    return t;
}

TEST(RadiusR1, ZeroAngleIsOne)
{
    const auto report = spirallike::radius_r1(Angle(0.0));
    EXPECT_EQ(report.value, 1.0);
    EXPECT_EQ(report.kind, RadiusKind::R1);
    EXPECT_EQ(report.bracket_hi, 1.0);
    EXPECT_NEAR(report.bracket_lo, 1.0 - spirallike::kRadiusTol, 1e-15);
}

TEST(RadiusR1, GoldenValues)
{
    const std::pair<double, double> cases[] = {{kPi / 12, golden::kR1PiOver12},
                                               {kPi / 6, golden::kR1PiOver6},
                                               {kPi / 4, golden::kR1PiOver4},
                                               {kPi / 3, golden::kR1PiOver3}};
    for (const auto& [lam, expected] : cases) {
        const auto report = spirallike::radius_r1(Angle(lam));
        // oracle bisection tolerance plus our own bracket width
        EXPECT_NEAR(report.value, expected, 1e-9) << "lambda " << lam;
    }
}

TEST(RadiusR1, EvenInLambda)
{
    for (double lam : {kPi / 12, kPi / 4, 1.1}) {
        EXPECT_EQ(spirallike::radius_r1(Angle(lam)).value, spirallike::radius_r1(Angle(-lam)).value);
    }
}

TEST(RadiusR1, ReportInvariantsAndCertificate)
{
    for (double lam : {kPi / 12, -kPi / 6, kPi / 4}) {
        const Angle a(lam);
        const auto report = spirallike::radius_r1(a);
        EXPECT_LE(report.bracket_lo, report.value);
        EXPECT_LE(report.value, report.bracket_hi);
        EXPECT_LE(report.bracket_hi - report.bracket_lo, report.tol);
        EXPECT_GT(report.value, 0.0);
        EXPECT_LE(report.value, 1.0);
        EXPECT_GT(report.iterations, 0);
        ASSERT_LT(report.value, 1.0);
        const double refine = report.tol / 100;
        EXPECT_LE(spirallike::psi(a, report.bracket_lo, spirallike::kPsiGrid, refine).value, 1.0);
        EXPECT_GE(spirallike::psi(a, report.bracket_hi, spirallike::kPsiGrid, refine).value, 1.0);
    }
}

TEST(RadiusR1, ConsistentWithPsiOnBothSides)
{
    for (double lam : {kPi / 6, kPi / 3}) {
        const Angle a(lam);
        const auto report = spirallike::radius_r1(a);
        for (int i = 1; i <= 10; ++i) {
            const double below = report.value - report.tol - 0.005 * i * report.value;
            const double above = report.value + report.tol + 0.0005 * i * (1 - report.value);
            EXPECT_LT(spirallike::psi(a, below).value, 1.0) << below;
            EXPECT_GT(spirallike::psi(a, above).value, 1.0) << above;
        }
    }
}

TEST(RadiusR1, RejectsNonPositiveTolerance)
{
    EXPECT_THROW(spirallike::radius_r1(Angle(0.3), 0.0), std::invalid_argument);
}

TEST(RadiusR2, Examples)
{
    EXPECT_EQ(spirallike::radius_r2(Angle(0.0)).value, 1.0);
    EXPECT_NEAR(spirallike::radius_r2(Angle(kPi / 4)).value, kSqrt3 - 1, 1e-15);
    EXPECT_EQ(spirallike::radius_r2(Angle(kPi / 4)).value, spirallike::radius_r2(Angle(-kPi / 4)).value);
    const auto report = spirallike::radius_r2(Angle(0.5));
    EXPECT_EQ(report.kind, RadiusKind::R2);
    EXPECT_EQ(report.iterations, 0);
}

TEST(RadiusR2, RangeAndMonotoneInSine)
{
    std::vector<std::pair<double, double>> rows; // (|sin 2 lambda|, R2)
    for (int i = 0; i < 21; ++i) {
        const double lam = -kPi / 2 + kPi * (i + 0.5) / 21;
        const double r2 = spirallike::radius_r2(Angle(lam)).value;
        EXPECT_GE(r2, kSqrt3 - 1 - 1e-15);
        EXPECT_LE(r2, 1.0);
        rows.emplace_back(std::abs(std::sin(2 * lam)), r2);
    }
    for (const auto& [s1, v1] : rows) {
        for (const auto& [s2, v2] : rows) {
            if (s1 < s2) EXPECT_GE(v1, v2);
        }
    }
}

TEST(MinRadiusR2, ClosedFormAndGrid)
{
    const auto exact = spirallike::min_radius_r2();
    EXPECT_EQ(exact.lambda_star, kPi / 4);
    EXPECT_NEAR(exact.value, kSqrt3 - 1, 1e-15);

    const auto grid = spirallike::grid_min_radius_r2(100000);
    EXPECT_NEAR(grid.value, kSqrt3 - 1, 1e-9);
    EXPECT_NEAR(std::abs(grid.lambda_star), kPi / 4, 1e-4);
    EXPECT_EQ(spirallike::radius_r2(Angle(-kPi / 4)).value, spirallike::radius_r2(Angle(kPi / 4)).value);
}

TEST(OmegaAvoidance, ZeroAngleIsIdenticallyZero)
{
    EXPECT_NEAR(spirallike::omega_avoidance_margin(Angle(0.0), symmetric_t_grid()), 0.0, 1e-15);
}

TEST(OmegaAvoidance, SharpAtPositiveSignOfSine)
{
    // |P^{-1}(it)|^2 = (t^2 + 1) / (t^2 + 1 + 2 t sin 2 lambda), smallest for t of the same
    // sign as sin 2 lambda.
    for (double lam : {kPi / 4, -kPi / 4, kPi / 6, -kPi / 3}) {
        const Angle a(lam);
        const double sign = std::sin(2 * lam) > 0 ? 1.0 : -1.0;
        const std::vector<double> at_sharp = {sign * kSqrt3};
        EXPECT_NEAR(spirallike::omega_avoidance_margin(a, at_sharp), 0.0, 1e-12) << lam;

        const auto result = spirallike::omega_avoidance(a, symmetric_t_grid());
        EXPECT_NEAR(result.t_at_min, sign * kSqrt3, 1e-12);
        EXPECT_GE(result.margin, -1e-12);
        EXPECT_LE(result.margin, 1e-6);
    }
}

TEST(OmegaAvoidance, OppositeSignIsFarFromSharp)
{
    // At lambda = pi/4 and t = -sqrt 3, |z1|^2 = 4 / (4 - 2 sqrt 3), so the margin is
    // 2 / sqrt(4 - 2 sqrt 3) - (sqrt 3 - 1) = 2 / (sqrt 3 - 1) - (sqrt 3 - 1) = 2.
    const std::vector<double> t = {-kSqrt3};
    EXPECT_NEAR(spirallike::omega_avoidance_margin(Angle(kPi / 4), t), 2.0, 1e-12);
}

TEST(OmegaAvoidance, NeverViolatedOnDenseGrids)
{
    for (int k = -5; k <= 5; ++k) {
        const double lam = k * kPi / 12;
        EXPECT_GE(spirallike::omega_avoidance_margin(Angle(lam), symmetric_t_grid()), -1e-12) << lam;
    }
}

TEST(OmegaAvoidance, RejectsBadGrids)
{
    const std::vector<double> empty;
    const std::vector<double> inside = {1.0};
    EXPECT_THROW(spirallike::omega_avoidance(Angle(0.1), empty), std::invalid_argument);
    EXPECT_THROW(spirallike::omega_avoidance(Angle(0.1), inside), std::invalid_argument);
}

TEST(RadiusTable, Examples)
{
    const std::vector<Angle<double>> zero = {Angle(0.0)};
    const auto rows0 = spirallike::radius_table(zero);
    ASSERT_EQ(rows0.size(), 1u);
    EXPECT_EQ(rows0[0].lambda, 0.0);
    EXPECT_EQ(rows0[0].r1, 1.0);
    EXPECT_EQ(rows0[0].r2, 1.0);

    const std::vector<Angle<double>> grid = {Angle(kPi / 4), Angle(kPi / 6), Angle(-kPi / 6)};
    const auto rows = spirallike::radius_table(grid);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_NEAR(rows[0].r2, kSqrt3 - 1, 1e-15);
    EXPECT_EQ(rows[1].lambda, kPi / 6);
    EXPECT_EQ(rows[2].lambda, -kPi / 6);
    EXPECT_EQ(rows[1].r1, rows[2].r1);
    EXPECT_EQ(rows[1].r2, rows[2].r2);

    EXPECT_THROW(spirallike::radius_table(std::vector<Angle<double>>{}), std::invalid_argument);
}

TEST(ReferenceConstants, Values)
{
    EXPECT_EQ(spirallike::kCloseToConvexityRadius, 0.99097524);
    EXPECT_NEAR(spirallike::kConvexityRadius * spirallike::kConvexityRadius, 0.5, 1e-15);
}

} // namespace
