#pragma once

#include "spirallike/core.hpp"
#include "spirallike/subordination.hpp"

#include <numbers>
#include <span>
#include <vector>

namespace spirallike {

enum class RadiusKind { R1, R2 };

struct RadiusReport
{
    double lambda;
    double value;
    double bracket_lo;
    double bracket_hi;
    int iterations;
    double tol;
    RadiusKind kind;
};

struct MinRadius
{
    double lambda_star;
    double value;
};

struct OmegaMargin
{
    double margin;
    double t_at_min;
};

struct RadiusRow
{
    double lambda;
    double r1;
    double r2;
};

inline constexpr double kRadiusTol = 1e-10;

// Reference radii of the whole Robertson family, quoted from the literature and not
// computed here.
inline constexpr double kCloseToConvexityRadius = 0.99097524;
inline constexpr double kConvexityRadius = std::numbers::sqrt2 / 2;

/// Radius of lambda-spirallikeness bound R1(lambda) = sup{r < 1 : psi_lambda(r) < 1}.
///
/// Bisection on psi_lambda(r) - 1 over [0, 1 - tol], relying on psi being increasing.
/// If psi_lambda(1 - tol) < 1 already, the value is 1 with bracket [1 - tol, 1].
/// The inner maximization runs with refine_tol = tol / 100.
RadiusReport radius_r1(const Angle<double>& a, double tol = kRadiusTol, int grid_n = kPsiGrid);

/// R2(lambda) = 2 / sqrt(4 + 2 sqrt(3) |sin 2 lambda|).
RadiusReport radius_r2(const Angle<double>& a);

/// (pi/4, sqrt(3) - 1), the minimum of R2 over the admissible range.
MinRadius min_radius_r2();

/// Minimum of R2 over the midpoints of n equal cells of (-pi/2, pi/2).
MinRadius grid_min_radius_r2(int n);

/// min over t of |P_lambda^{-1}(i t)| - R2(lambda), |t| >= sqrt(3) for every grid value.
/// Throws std::invalid_argument for an empty grid or |t| < sqrt(3).
OmegaMargin omega_avoidance(const Angle<double>& a, std::span<const double> t_grid);

inline double omega_avoidance_margin(const Angle<double>& a, std::span<const double> t_grid)
{
    return omega_avoidance(a, t_grid).margin;
}

/// Rows (lambda, R1, R2) in grid order; rows are computed concurrently.
std::vector<RadiusRow> radius_table(std::span<const Angle<double>> lambda_grid,
                                    double tol = kRadiusTol);

} // namespace spirallike
