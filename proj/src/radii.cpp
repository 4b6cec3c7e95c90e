#include "spirallike/radii.hpp"

#include "spirallike/parallel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace spirallike {

RadiusReport radius_r1(const Angle<double>& a, double tol, int grid_n)
{
    if (!(tol > 0.0 && tol < 0.5)) throw std::invalid_argument("radius_r1: tol must lie in (0, 0.5)");
    const double refine_tol = tol / 100;
    auto below_one = [&](double r) { return psi(a, r, grid_n, refine_tol).value < 1.0; };

    double hi = 1.0 - tol;
    if (below_one(hi)) return {a.radians(), 1.0, hi, 1.0, 0, tol, RadiusKind::R1};

    // psi(0) = 1/2 < 1, so [0, hi] brackets the crossing.
    double lo = 0.0;
    int iterations = 0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (below_one(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
        ++iterations;
    }
    return {a.radians(), 0.5 * (lo + hi), lo, hi, iterations, tol, RadiusKind::R1};
}

RadiusReport radius_r2(const Angle<double>& a)
{
    const double s = std::abs(std::sin(2 * a.radians()));
    const double value = 2.0 / std::sqrt(4.0 + 2.0 * std::numbers::sqrt3 * s);
    return {a.radians(), value, value, value, 0, 0.0, RadiusKind::R2};
}

MinRadius min_radius_r2()
{
    return {std::numbers::pi / 4, std::numbers::sqrt3 - 1.0};
}

MinRadius grid_min_radius_r2(int n)
{
    if (n < 1) throw std::invalid_argument("grid_min_radius_r2: n must be positive");
    MinRadius best{0.0, std::numeric_limits<double>::infinity()};
    for (int k = 0; k < n; ++k) {
        const double lam = -std::numbers::pi / 2 + std::numbers::pi * (k + 0.5) / n;
        const double v = radius_r2(Angle(lam)).value;
        if (v < best.value) best = {lam, v};
    }
    return best;
}

OmegaMargin omega_avoidance(const Angle<double>& a, std::span<const double> t_grid)
{
    if (t_grid.empty()) throw std::invalid_argument("omega_avoidance: empty t grid");
    const double r2 = radius_r2(a).value;
    OmegaMargin best{std::numeric_limits<double>::infinity(), 0.0};
    for (double t : t_grid) {
        if (!(std::abs(t) >= std::numbers::sqrt3 - 1e-12)) {
            throw std::invalid_argument("omega_avoidance: every |t| must be at least sqrt(3)");
        }
        const double m = std::abs(p_lambda_inverse(a, std::complex<double>(0.0, t))) - r2;
        if (m < best.margin) best = {m, t};
    }
    return best;
}

std::vector<RadiusRow> radius_table(std::span<const Angle<double>> lambda_grid, double tol)
{
    if (lambda_grid.empty()) throw std::invalid_argument("radius_table: empty lambda grid");
    std::vector<RadiusRow> rows(lambda_grid.size());
    parallel_for(lambda_grid.size(), [&](std::size_t i) {
        const Angle<double>& a = lambda_grid[i];
        rows[i] = {a.radians(), radius_r1(a, tol).value, radius_r2(a).value};
    });
    return rows;
}

} // namespace spirallike
