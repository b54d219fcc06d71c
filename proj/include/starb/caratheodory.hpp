#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starb/series.hpp"

namespace starb {

/// Parameter triple (zeta1, zeta2, zeta3) in the closed unit tridisk; the
/// exact parameterization of the first three coefficients of a function with
/// positive real part and p(0) = 1.
struct SchwarzParams {
    cd zeta1{};
    cd zeta2{};
    cd zeta3{};

    static constexpr double kDiskTolerance = 1e-12;
    bool in_closed_tridisk() const;
};

/// First Taylor coefficients p1..p4 of p(z) = 1 + p1 z + ... with
/// Re p > 0 on the disk. p4 is optional: the three-parameter construction
/// stops at p3; callers that need p4 build a full series from a Schwarz
/// function instead.
struct CaratheodoryPrefix {
    cd p1{};
    cd p2{};
    cd p3{};
    std::optional<cd> p4{};
};

/// First coefficients b1..b3 of a Schwarz function w(z) = b1 z + b2 z^2 + ...
struct SchwarzPrefix {
    cd b1{};
    cd b2{};
    cd b3{};
};

/// (p1, p2, p3) from the tridisk parameters:
///   p1 = 2 z1
///   p2 = 2 z1^2 + 2 (1 - z1^2) z2
///   p3 = 2 z1^3 + 4 (1 - z1^2) z1 z2 - 2 (1 - z1^2) z1 z2^2
///        + 2 (1 - z1^2)(1 - |z2|^2) z3
/// Throws ParamOutOfDisk when a parameter leaves the closed disk.
CaratheodoryPrefix p_from_params(const SchwarzParams& s);

/// Series of (1 + z1 z)/(1 - z1 z) for unimodular z1: the extreme member
/// with p1 = 2 z1 (the half-plane kernel at z1 = 1).
PowerSeries p_series_extremal_first(cd zeta1, int order);

/// Series of the two-parameter extreme member, |z1| < 1 and |z2| = 1:
///   (1 + (conj(z1) z2 + z1) z + z2 z^2) / (1 + (conj(z1) z2 - z1) z - z2 z^2)
PowerSeries p_series_extremal_second(cd zeta1, cd zeta2, int order);

/// w = (p - 1)/(p + 1); requires p(0) = 1.
PowerSeries schwarz_from_p(const PowerSeries& p);

/// p = (1 + w)/(1 - w); requires w(0) = 0. Inverse of schwarz_from_p.
PowerSeries p_series_from_schwarz(const PowerSeries& w);

/// One evaluated coefficient inequality: |lhs| <= rhs.
struct InequalityCheck {
    std::string label;
    double lhs = 0.0;
    double rhs = 0.0;
    bool ok() const { return lhs <= rhs + 1e-12; }
};

struct InequalityBundle {
    std::vector<InequalityCheck> checks;
    bool all_ok() const;
};

/// Evaluates the classical coefficient inequalities for a positive-real-part
/// prefix on every index combination the stored coefficients allow:
///   |p_t| <= 2
///   |p_{t+2k} - rho p_t p_k^2| <= 2 (1 + 2 rho)      (0 <= rho <= 1)
///   |p_2 - p_1^2 / 2|          <= 2 - |p_1|^2 / 2
///   |p_{n+k} - mu p_n p_k|     <= 2 max{1, |2 mu - 1|}
/// The symbol c in the last line of some statements of this bundle is read
/// as p itself.
InequalityBundle check_caratheodory_inequalities(const CaratheodoryPrefix& p,
                                                 double rho, double mu);

/// Margins of the Schwarz-prefix chain
///   |b1| <= 1
///   |b2| <= 1 - |b1|^2
///   |b3| <= 1 - |b1|^2 - |b2|^2 / (1 + |b1|)
/// Each entry is rhs - |lhs| (negative means violated).
struct SchwarzPrefixMargins {
    double m1 = 0.0;
    double m2 = 0.0;
    double m3 = 0.0;
    double worst() const;
};

SchwarzPrefixMargins schwarz_prefix_margins(const SchwarzPrefix& b);
bool schwarz_prefix_ok(const SchwarzPrefix& b, double slack = 1e-10);

} // namespace starb
