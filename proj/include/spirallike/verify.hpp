#pragma once

#include "spirallike/core.hpp"
#include "spirallike/samples.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace spirallike {

enum class Claim { Lemma1, Theorem1, Corollary1, Theorem2, DifferentialIdentity, NunokawaBound };

std::string_view claim_name(Claim claim) noexcept;
std::optional<Claim> parse_claim(std::string_view name) noexcept;

/// Where the smallest margin of a run was found.
struct Witness
{
    std::string descriptor;
    std::optional<HerglotzMeasure> measure;
    std::complex<double> z{};
};

/// Result of one harness run.  passed == (min_margin > -slack).
struct VerificationReport
{
    Claim claim;
    double lambda;
    int trials;
    std::uint64_t seed;
    double min_margin;
    double slack;
    Witness worst_witness;
    bool passed;
};

/// A margin and the disc point where it is attained.
struct PointMargin
{
    double margin;
    std::complex<double> z;
};

inline constexpr double kHalfPlaneSlack = 1e-9;
inline constexpr double kIdentityThreshold = 1e-6;
inline constexpr double kIdentityStep = 1e-5;
inline constexpr double kNunokawaSlack = 1e-12;
inline constexpr double kDefaultSafety = 0.999;
inline constexpr int kCircleAngles = 256;

/// min of B(r) - |p(z) - A(r)| over r in {0.1, ..., 0.9} x 64 angles for
/// p = tilt(lambda, h_m).  Zero for a single atom, which is the extremal P_lambda(x z).
PointMargin lemma1_margin(const Angle<double>& a, const HerglotzMeasure& m);

/// min of Re(e^{-i lambda} Q_f) over `angles` points of |z| = radius.
PointMargin spirallikeness_margin(const RobertsonSample& s, double radius,
                                  int angles = kCircleAngles, double tol = kQuadratureTol);

/// min of Re Q_f over `angles` points of |z| = radius.
PointMargin starlikeness_margin(const RobertsonSample& s, double radius,
                                int angles = kCircleAngles, double tol = kQuadratureTol);

VerificationReport verify_lemma1(const Angle<double>& a, int trials, std::uint64_t seed);

/// Half-plane check of Re(e^{-i lambda} Q_f) on |z| = safety * R1(lambda).  With
/// with_subordination the winding-number test against Q_lambda(D) runs as well, the
/// claim becomes Corollary1 and each sample's margin is the smaller of the two.
VerificationReport verify_theorem1(const Angle<double>& a, int trials, std::uint64_t seed,
                                   double safety = kDefaultSafety, bool with_subordination = false);

/// Check of Re Q_f on |z| = safety * R2(lambda).
VerificationReport verify_theorem2(const Angle<double>& a, int trials, std::uint64_t seed,
                                   double safety = kDefaultSafety);

/// Max residual of Q + z Q'/Q - P on a grid_n x grid_n polar grid of |z| <= 0.9, Q' by
/// central differences; min_margin = 1e-6 - residual.
VerificationReport verify_differential_identity(const Angle<double>& a, int grid_n);

/// |a + k| >= sqrt(3) at the extreme k = (a + 1/a)/2 (mirrored for a < 0), over the grid.
/// Throws std::invalid_argument if the grid is empty or contains 0.
VerificationReport verify_nunokawa_bound(std::span<const double> a_grid);

struct NunokawaMinimum
{
    double a_star;
    double value;
};

/// Golden-section minimum of (3a + 1/a)/2 over a > 0.
NunokawaMinimum nunokawa_minimum();

/// Best-effort search for a sample whose Q_f leaves the right half-plane on |z| = radius.
struct FalsifyResult
{
    bool found;
    int trials_searched;
    std::uint64_t seed;
    double radius;
    Witness witness;
    double re_q;
};

FalsifyResult falsify_starlikeness(const Angle<double>& a, double radius, int max_trials,
                                   std::uint64_t seed);

} // namespace spirallike
