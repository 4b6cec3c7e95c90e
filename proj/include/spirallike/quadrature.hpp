#pragma once

#include "spirallike/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

namespace spirallike {

/// N-point Gauss-Legendre rule on [-1, 1].
template <std::size_t N>
struct GaussRule
{
    std::array<double, N> nodes;
    std::array<double, N> weights;
};

namespace detail {

template <std::size_t N>
GaussRule<N> make_gauss_rule()
{
    GaussRule<N> rule{};
    constexpr long double pi = std::numbers::pi_v<long double>;
    for (std::size_t i = 0; i < (N + 1) / 2; ++i) {
        long double x = std::cos(pi * (i + 0.75L) / (N + 0.5L));
        long double dp = 0;
        for (int it = 0; it < 100; ++it) {
            long double p0 = 1, p1 = 0;
            for (std::size_t k = 1; k <= N; ++k) {
                const long double p2 = p1;
                p1 = p0;
                p0 = ((2 * k - 1) * x * p1 - (k - 1) * p2) / k;
            }
            dp = N * (x * p0 - p1) / (x * x - 1);
            const long double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-19L) break;
        }
        const long double w = 2 / ((1 - x * x) * dp * dp);
        rule.nodes[i] = static_cast<double>(-x);
        rule.nodes[N - 1 - i] = static_cast<double>(x);
        rule.weights[i] = rule.weights[N - 1 - i] = static_cast<double>(w);
    }
    return rule;
}

struct PanelSum
{
    std::complex<double> value;
    double magnitude; // same rule applied to |f|
};

template <std::size_t N, class F>
PanelSum apply_rule(const GaussRule<N>& rule, F& f, double lo, double hi)
{
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    std::complex<double> sum = 0;
    double magnitude = 0;
    for (std::size_t k = 0; k < N; ++k) {
        const std::complex<double> v = f(mid + half * rule.nodes[k]);
        sum += rule.weights[k] * v;
        magnitude += rule.weights[k] * std::abs(v);
    }
    return {half * sum, half * magnitude};
}

} // namespace detail

template <std::size_t N>
const GaussRule<N>& gauss_legendre()
{
    static const GaussRule<N> rule = detail::make_gauss_rule<N>();
    return rule;
}

struct QuadratureResult
{
    std::complex<double> value;
    double error_estimate;
    int panels;
};

/// Integral of a complex-valued f over [lo, hi] by 16-node Gauss-Legendre panels,
/// each checked against the 32-node rule.  A panel is accepted once the two rules
/// agree to tol * max(panel width / total width, |panel integral|), so the accumulated
/// error stays below tol * (1 + integral of |f|): absolute for integrals of order one,
/// relative for large ones.  Differences below the rounding noise of the panel sum
/// (a few hundred ulps of the integral of |f|) also count as agreement.  Throws AccuracyError (carrying the best estimate) when a
/// panel is still unresolved after max_depth bisections.
template <class F>
QuadratureResult integrate(F&& f, double lo, double hi, double tol, int max_depth = 40)
{
    const auto& g16 = gauss_legendre<16>();
    const auto& g32 = gauss_legendre<32>();
    const double width = hi - lo;

    QuadratureResult out{0.0, 0.0, 0};
    bool failed = false;
    std::vector<std::pair<std::pair<double, double>, int>> stack{{{lo, hi}, 0}};
    while (!stack.empty()) {
        const auto [panel, depth] = stack.back();
        stack.pop_back();
        const auto coarse = detail::apply_rule(g16, f, panel.first, panel.second);
        const auto fine = detail::apply_rule(g32, f, panel.first, panel.second);
        const double err = std::abs(fine.value - coarse.value);
        const double noise = 256 * std::numeric_limits<double>::epsilon() * fine.magnitude;
        const double allowed = std::max(
            tol * std::max((panel.second - panel.first) / width, std::abs(fine.value)), noise);
        if (err <= allowed || depth >= max_depth) {
            failed = failed || err > allowed;
            out.value += fine.value;
            out.error_estimate += err;
            ++out.panels;
            continue;
        }
        const double mid = 0.5 * (panel.first + panel.second);
        stack.push_back({{mid, panel.second}, depth + 1});
        stack.push_back({{panel.first, mid}, depth + 1});
    }
    if (failed) {
        throw AccuracyError("adaptive quadrature did not reach the requested tolerance",
                            out.value, out.error_estimate);
    }
    return out;
}

} // namespace spirallike
