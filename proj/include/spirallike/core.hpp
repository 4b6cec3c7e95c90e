#pragma once

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace spirallike {

template <class Real>
using Complex = std::complex<Real>;

/// Tilt parameter of the class, in radians. Only the open interval
/// (-pi/2, pi/2) is admissible; the endpoints are rejected.
template <class Real = double>
class Angle
{
public:
    explicit Angle(Real radians) : radians_(radians)
    {
        if (!(std::abs(radians) < std::numbers::pi_v<Real> / 2)) {
            throw std::domain_error(
                "angle must lie in the open interval (-pi/2, pi/2), got "
                + std::to_string(static_cast<double>(radians)));
        }
    }

    Real radians() const noexcept { return radians_; }

    /// e^{i lambda}
    Complex<Real> rotation() const noexcept { return std::polar(Real(1), radians_); }

    /// e^{2 i lambda}; never zero, and 1 + e^{2 i lambda} = 2 cos(lambda) e^{i lambda}.
    Complex<Real> double_rotation() const noexcept { return std::polar(Real(1), 2 * radians_); }

    Angle operator-() const { return Angle(-radians_); }

private:
    Real radians_;
};

Angle(double) -> Angle<double>;

/// A point of the open unit disc.
template <class Real = double>
class DiscPoint
{
public:
    explicit DiscPoint(Complex<Real> z) : z_(z)
    {
        if (!(std::abs(z) < Real(1))) {
            throw std::domain_error("point must lie in the open unit disc");
        }
    }
    explicit DiscPoint(Real x) : DiscPoint(Complex<Real>(x, 0)) {}

    Complex<Real> value() const noexcept { return z_; }

private:
    Complex<Real> z_;
};

DiscPoint(std::complex<double>) -> DiscPoint<double>;
DiscPoint(double) -> DiscPoint<double>;

/// Disc {|w - center| <= radius} that contains p(z) for every p of the tilted
/// Caratheodory class and |z| = r.  Boundary attained only by P_lambda(x z), |x| = 1.
template <class Real = double>
struct CaratheodoryDisc
{
    Complex<Real> center;
    Real radius;
};

/// Below this modulus q_lambda switches to its Taylor expansion about 0.
inline constexpr double kSeriesThreshold = 1e-4;

namespace detail {

// log(1 + w) on the principal branch, accurate for small |w|.
template <class Real>
Complex<Real> log1p(const Complex<Real>& w)
{
    const Real x = w.real();
    const Real y = w.imag();
    const Real re = Real(0.5) * std::log1p(x * (Real(2) + x) + y * y);
    return {re, std::atan2(y, Real(1) + x)};
}

// exp(w) - 1, accurate for small |w|.
template <class Real>
Complex<Real> expm1(const Complex<Real>& w)
{
    const Real x = w.real();
    const Real y = w.imag();
    const Real half_sin = std::sin(y / 2);
    const Real re = std::expm1(x) * std::cos(y) - 2 * half_sin * half_sin;
    return {re, std::exp(x) * std::sin(y)};
}

template <class Real>
Complex<Real> q_lambda_series(const Complex<Real>& m, const Complex<Real>& z)
{
    // Q = 1/S with S = 1 + s1 z + s2 z^2 + s3 z^3 + ..., m = 1 + e^{2 i lambda}
    const Complex<Real> s1 = -m / Real(2);
    const Complex<Real> s2 = m * (m - Real(2)) / Real(6);
    const Complex<Real> s3 = -m * (m - Real(2)) * (m - Real(3)) / Real(24);
    const Complex<Real> c1 = -s1;
    const Complex<Real> c2 = s1 * s1 - s2;
    const Complex<Real> c3 = -s1 * s1 * s1 + Real(2) * s1 * s2 - s3;
    return Real(1) + z * (c1 + z * (c2 + z * c3));
}

template <class Real>
Complex<Real> q_lambda(const Angle<Real>& a, const Complex<Real>& z)
{
    const Complex<Real> e2 = a.double_rotation();
    if (std::abs(z) < Real(kSeriesThreshold)) {
        return q_lambda_series(Real(1) + e2, z);
    }
    // 1 - z - (1-z)^{1+e2} = -(1-z) * expm1(e2 * log(1-z))
    const Complex<Real> log_one_minus_z = detail::log1p(-z);
    const Complex<Real> denom = -(Real(1) - z) * detail::expm1(e2 * log_one_minus_z);
    return e2 * z / denom;
}

template <class Real>
Complex<Real> f_lambda(const Angle<Real>& a, const Complex<Real>& z)
{
    // 1 - 2 e^{i lambda} cos(lambda) = -e^{2 i lambda}, and the displayed
    // denominator 2 e^{i lambda} cos(lambda) - 1 equals e^{2 i lambda}.
    const Complex<Real> e2 = a.double_rotation();
    return detail::expm1(-e2 * detail::log1p(-z)) / e2;
}

template <class Real>
Complex<Real> p_lambda(const Angle<Real>& a, const Complex<Real>& z)
{
    return (Real(1) + a.double_rotation() * z) / (Real(1) - z);
}

// Inverse Moebius map; returns an infinite value at the pole w = -e^{2 i lambda}.
template <class Real>
Complex<Real> p_lambda_inverse(const Angle<Real>& a, const Complex<Real>& w)
{
    const Complex<Real> denom = w + a.double_rotation();
    if (denom == Complex<Real>(0)) {
        const Real inf = std::numeric_limits<Real>::infinity();
        return {inf, inf};
    }
    return (w - Real(1)) / denom;
}

} // namespace detail

/// Principal branch power exp(exponent * Log(base)), Im Log in (-pi, pi].
/// Throws std::domain_error for base == 0.
template <class Real>
Complex<Real> principal_power(const Complex<Real>& base, const Complex<Real>& exponent)
{
    if (base == Complex<Real>(0)) {
        throw std::domain_error("principal_power: zero base (z = 1 is outside the open disc)");
    }
    return std::exp(exponent * std::log(base));
}

/// Distinguished member of the Robertson class,
/// f_lambda(z) = ((1-z)^{1 - 2 e^{i lambda} cos lambda} - 1) / (2 e^{i lambda} cos lambda - 1).
///
/// Evaluated as expm1(-e^{2 i lambda} Log(1-z)) / e^{2 i lambda}; the two forms agree
/// because 2 e^{i lambda} cos lambda - 1 = e^{2 i lambda}.  Re(1-z) > 0 on the disc, so
/// the principal branch never meets its cut.
template <class Real>
Complex<Real> f_lambda(const Angle<Real>& a, const DiscPoint<Real>& z)
{
    return detail::f_lambda(a, z.value());
}

/// Q_lambda(z) = z f_lambda'(z) / f_lambda(z) = e^{2 i lambda} z / (1 - z - (1-z)^{1 + e^{2 i lambda}}).
///
/// The removable singularity at 0 is handled with a four-term Taylor expansion for
/// |z| < kSeriesThreshold.  Elsewhere the denominator is formed as
/// -(1-z) expm1(e^{2 i lambda} log1p(-z)) so no digits are lost to cancellation.
template <class Real>
Complex<Real> q_lambda(const Angle<Real>& a, const DiscPoint<Real>& z)
{
    return detail::q_lambda(a, z.value());
}

/// P_lambda(z) = (1 + e^{2 i lambda} z) / (1 - z).
template <class Real>
Complex<Real> p_lambda(const Angle<Real>& a, const DiscPoint<Real>& z)
{
    return detail::p_lambda(a, z.value());
}

/// (w - 1) / (w + e^{2 i lambda}); lands in the disc exactly when Re(e^{-i lambda} w) > 0.
template <class Real>
Complex<Real> p_lambda_inverse(const Angle<Real>& a, const Complex<Real>& w)
{
    if (w + a.double_rotation() == Complex<Real>(0)) {
        throw std::domain_error("p_lambda_inverse: pole at w = -e^{2 i lambda}");
    }
    return detail::p_lambda_inverse(a, w);
}

template <class Real>
CaratheodoryDisc<Real> caratheodory_disc(const Angle<Real>& a, Real r)
{
    if (!(r >= Real(0) && r < Real(1))) {
        throw std::domain_error("caratheodory_disc: radius must lie in [0, 1)");
    }
    const Real one_minus = Real(1) - r * r;
    return {(Real(1) + r * r * a.double_rotation()) / one_minus,
            Real(2) * r * std::cos(a.radians()) / one_minus};
}

/// Smallest modulus of a pole of Q_lambda inside the unit disc, or 1 if there is none.
///
/// Q_lambda is only meromorphic on the disc: its denominator vanishes wherever
/// e^{2 i lambda} Log(1-z) = 2 pi i k with k != 0, i.e. 1 - z = exp(2 pi k (sin 2 lambda
/// + i cos 2 lambda)).  Such points need |2 pi k cos 2 lambda| <= pi and lie in the disc
/// only for |lambda| near pi/4; they accumulate at z = 1 when lambda = +-pi/4.
template <class Real>
Real q_lambda_pole_radius(const Angle<Real>& a)
{
    const Real pi = std::numbers::pi_v<Real>;
    const Real s = std::sin(2 * a.radians());
    const Real c = std::cos(2 * a.radians());
    Real best = 1;
    if (s == Real(0)) return best;
    const Real sign = s > 0 ? Real(-1) : Real(1); // |1 - z| < 1 needs k sin(2 lambda) < 0
    for (int n = 1; n <= 64; ++n) {
        const Real k = sign * n;
        const Real im = 2 * pi * k * c;
        if (im > pi || im <= -pi) break;
        const Complex<Real> one_minus_z = std::exp(Complex<Real>(2 * pi * k * s, im));
        const Real mod = std::abs(Real(1) - one_minus_z);
        if (mod < best) best = mod;
    }
    return best;
}

namespace detail {

template <class Derived>
void require_in_disc(const Eigen::ArrayBase<Derived>& z)
{
    if (!(z.abs() < 1).all()) {
        throw std::domain_error("all points must lie in the open unit disc");
    }
}

} // namespace detail

// Coefficient-wise versions over Eigen arrays of complex disc points.  The returned
// objects are lazy expressions; the argument must outlive them.

template <class Derived>
auto q_lambda(const Angle<typename Derived::Scalar::value_type>& a,
              const Eigen::ArrayBase<Derived>& z)
{
    detail::require_in_disc(z);
    return z.derived().unaryExpr([a](const typename Derived::Scalar& w) { return detail::q_lambda(a, w); });
}

template <class Derived>
auto p_lambda(const Angle<typename Derived::Scalar::value_type>& a,
              const Eigen::ArrayBase<Derived>& z)
{
    detail::require_in_disc(z);
    return z.derived().unaryExpr([a](const typename Derived::Scalar& w) { return detail::p_lambda(a, w); });
}

template <class Derived>
auto f_lambda(const Angle<typename Derived::Scalar::value_type>& a,
              const Eigen::ArrayBase<Derived>& z)
{
    detail::require_in_disc(z);
    return z.derived().unaryExpr([a](const typename Derived::Scalar& w) { return detail::f_lambda(a, w); });
}

} // namespace spirallike
