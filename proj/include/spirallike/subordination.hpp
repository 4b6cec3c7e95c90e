#pragma once

#include "spirallike/core.hpp"
#include "spirallike/samples.hpp"

#include <Eigen/Core>

#include <complex>

namespace spirallike {

/// Outcome of a numerical subordination test.  `margin` is a signed distance to
/// failure (positive when the test holds); `witness_theta` is the argument of the
/// boundary point that realizes it.
struct SubordinationVerdict
{
    bool holds;
    double witness_theta;
    double margin;
};

/// Closed curve sampled at strictly increasing angles covering [0, 2 pi) once.
struct BoundaryCurve
{
    Eigen::ArrayXd theta;
    Eigen::ArrayXcd values;
    bool closed = true;
};

struct PsiValue
{
    double value;
    double witness_theta;
};

inline constexpr int kPsiGrid = 2048;
inline constexpr double kPsiRefineTol = 1e-12;

/// Default truncation of the disc used to approximate Q_lambda(D): the region is
/// bounded by the image of |z| = 1 - kCurveDelta.
inline constexpr double kCurveDelta = 1e-3;

/// psi_lambda(r) = max over |z| = 1 of |P_lambda^{-1}(Q_lambda(r z))| / r.
///
/// The maximum is located on a uniform grid of grid_n angles and every local maximum
/// of the grid is refined by golden-section search to width refine_tol.  Values within
/// refine_tol of the maximum count as ties; the smallest angle wins.  r = 0 returns the
/// limit 1/2.  Returns +inf if Q_lambda hits the pole of P_lambda^{-1} on the grid.
PsiValue psi(const Angle<double>& a, double r, int grid_n = kPsiGrid,
             double refine_tol = kPsiRefineTol);

/// Half-plane test Re(e^{-i lambda} w) > 0 over values sampled at the equally spaced
/// angles 2 pi j / N of a circle.  Throws std::invalid_argument for an empty list.
SubordinationVerdict is_subordinate_to_halfplane(const Eigen::Ref<const Eigen::ArrayXcd>& values,
                                                 const Angle<double>& a);

/// Uniformly sampled image of the circle |z| = radius under fn.
template <class F>
BoundaryCurve circle_image(F&& fn, double radius, int n)
{
    BoundaryCurve curve;
    curve.theta = Eigen::ArrayXd::LinSpaced(n, 0.0, 2 * std::numbers::pi * (n - 1) / n);
    curve.values.resize(n);
    for (int j = 0; j < n; ++j) curve.values[j] = fn(std::polar(radius, curve.theta[j]));
    return curve;
}

/// Image of |z| = 1 - delta under Q_lambda with n samples clustered around z = 1, where
/// Q_lambda grows like e^{2 i lambda} / (1 - z).  The angles are the boundary values of
/// a disc automorphism fixing +-1, so consecutive samples stay close on the image.
///
/// When Q_lambda has poles in the disc, delta is enlarged to twice the gap between the
/// nearest pole and the unit circle.  By the argument principle the winding number
/// around w then equals the number of preimages of w inside the curve.
BoundaryCurve q_lambda_boundary(const Angle<double>& a, int n, double delta = kCurveDelta);

/// Truncation used for the Q_lambda(D) region when testing |z| = rho:
/// min(kCurveDelta, (1 - rho) / 2), so the curve always lies outside the tested circle.
/// Throws std::domain_error if the pole adjustment of q_lambda_boundary would pull the
/// curve inside |z| = rho.
double region_delta(const Angle<double>& a, double rho);

/// Winding number of the closed curve around point.
int winding_number(std::complex<double> point, const BoundaryCurve& boundary);

/// Euclidean distance from point to the closed polygon through the curve samples.
double distance_to_curve(std::complex<double> point, const BoundaryCurve& boundary);

/// True iff the curve winds around point a nonzero number of times.  Throws
/// IndeterminateError when point is within near_tol of the curve and
/// std::invalid_argument for an open curve or fewer than three samples.
bool region_membership(std::complex<double> point, const BoundaryCurve& boundary,
                       double near_tol = 1e-9);

/// Approximate test of Q_f(rho D) inside Q_lambda(D): every Q_f(rho e^{i theta_j}),
/// j < test_n, must lie inside q_lambda_boundary(a, curve_n).  The margin is the signed
/// distance of the worst point to the curve.  Requires psi_lambda(rho) < 1, i.e.
/// rho < R1(lambda); throws std::domain_error otherwise.
SubordinationVerdict check_q_subordination(const RobertsonSample& f, const Angle<double>& a,
                                           double rho, int curve_n = 4096, int test_n = 256,
                                           double tol = kQuadratureTol);

/// Same test against a prebuilt region boundary; no radius precondition is checked.
SubordinationVerdict check_q_subordination(const RobertsonSample& f, const BoundaryCurve& region,
                                           double rho, int test_n = 256,
                                           double tol = kQuadratureTol);

} // namespace spirallike
