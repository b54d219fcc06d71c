#pragma once

#include <string>
#include <vector>

#include "starb/caratheodory.hpp"
#include "starb/series.hpp"

namespace starb {

/// Taylor expansion at 0 of the target kernel B(z) = 1/(1 - log(1+z)).
/// B(0) = 1 and B'(0) = 1 > 0.
struct BalloonKernel {
    PowerSeries series;
};

/// One point of the image-domain boundary: w(theta) for z = e^{i theta},
///   w(theta) = [1 - log(2 cos(theta/2)) - i theta/2]^{-1},  theta in (-pi, pi).
/// Every point satisfies |exp(1 - 1/w) - 1| = 1.
struct BoundaryPoint {
    double theta = 0.0;
    cd w{};
};

/// Normalized member f of the class: f(0) = 0, f'(0) = 1, and
/// z f'(z)/f(z) = B(w(z)) for the generating Schwarz series w.
struct ClassMember {
    PowerSeries f;
    std::string provenance;

    cd a(int n) const { return f.c(n); }
};

/// Initial coefficients a2..a5 together with the logarithmic coefficients
/// gamma_n of log(f/z)/2 and the inverse-function logarithmic coefficients
/// Gamma_n of log(F(w)/w)/2, F = f^{-1}.
struct CoefficientSet {
    cd a2{}, a3{}, a4{}, a5{};
    cd gamma1{}, gamma2{}, gamma3{};
    cd inv_gamma1{}, inv_gamma2{}, inv_gamma3{};
};

enum class Membership { Inside, Boundary, Outside };

/// Kernel Taylor series: 1 + z + z^2/2 + z^3/3 + z^4/6 + ...
BalloonKernel kernel_series(int order);

/// Builds the member generated by a Schwarz series w (w(0) = 0) through the
/// integral form f = z exp( int_0^z (B(w(t)) - 1)/t dt ).
/// Checks the Schwarz-prefix chain on (b1, b2, b3) and the residual
/// z f'/f - B(w) on stored coefficients.
ClassMember member_from_schwarz(const PowerSeries& w, int order);

/// The three distinguished extreme members: index 1 -> w = z, 2 -> w = z^2,
/// 3 -> w = i z.
ClassMember extremal_member(int index, int order);

/// Closed-form initial coefficients from a positive-real-part prefix:
///   a2 = p1/2
///   a3 = (p1^2 + 4 p2)/16
///   a4 = (p1^3 + 12 p1 p2 + 48 p3)/288
///   a5 = -(7 p1^4 - 24 p1^2 p2 - 96 p1 p3 - 576 p4)/4608   (needs p4)
struct InitialCoefficients {
    cd a2{}, a3{}, a4{}, a5{};
};
InitialCoefficients coeffs_from_p(const CaratheodoryPrefix& p);

/// Closed-form coefficients from a Schwarz prefix:
///   a2 = b1,  a3 = 3 b1^2/4 + b2/2,  a4 = 19 b1^3/36 + 5 b1 b2/6 + b3/3.
InitialCoefficients coeffs_from_b(const SchwarzPrefix& b);

/// Fourth-order extension of coeffs_from_b:
///   a5 = b4/4 + b2^2/4 + 7 b1 b3/12 + 23 b1^2 b2/24 + 101 b1^4/288.
cd a5_from_b(cd b1, cd b2, cd b3, cd b4);

/// Populates the logarithmic and inverse-logarithmic coefficients:
///   gamma1 = a2/2, gamma2 = (a3 - a2^2/2)/2, gamma3 = (a4 - a2 a3 + a2^3/3)/2
///   Gamma1 = -a2/2, Gamma2 = -(a3 - 3 a2^2/2)/2,
///   Gamma3 = -(a4 - 4 a2 a3 + 10 a2^3/3)/2
CoefficientSet full_coefficient_set(cd a2, cd a3, cd a4, cd a5 = cd{});

/// Coefficient set extracted from a member's stored series.
CoefficientSet coefficient_set(const ClassMember& m);

/// Classifies w against the image domain by |exp(1 - 1/w) - 1| with a
/// tolerance band of 1e-10 around the boundary. Throws OriginExcluded at 0.
Membership membership(cd w);

/// Distance-like boundary indicator |exp(1 - 1/w) - 1| - 1.
double boundary_indicator(cd w);

/// Samples the boundary curve on theta in [-(pi - cusp_gap), pi - cusp_gap],
/// symmetric about 0. samples >= 2.
std::vector<BoundaryPoint> boundary_curve(int samples, double cusp_gap = 1e-2);

/// Rightmost boundary point w(0) = 1/(1 - log 2).
cd boundary_tip();

struct StarlikeReport {
    bool indeterminate = false;   ///< too few samples to judge
    bool starlike = false;        ///< arg(w - 1) monotone over the samples
    double min_increment = 0.0;   ///< smallest winding increment observed
    double total_winding = 0.0;
    /// Worst deviation of near-origin samples (|w| <= 0.25) from the circle
    /// (x - 1/2)^2 + y^2 = 1/4; reported, not asserted.
    double near_origin_circle_deviation = 0.0;
    /// Sampled boundary point with the smallest real part.
    BoundaryPoint leftmost{};
};

/// Discrete monotone-argument probe of starlikeness with respect to w = 1.
StarlikeReport starlikeness_probe(int samples, double cusp_gap = 1e-2);

} // namespace starb
