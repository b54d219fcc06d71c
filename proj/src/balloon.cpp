#include "starb/balloon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace starb {

namespace {

constexpr double kResidualTolerance = 1e-10;

} // namespace

BalloonKernel kernel_series(int order) {
    if (order < 1) throw DomainError("kernel order must be >= 1");
    std::vector<cd> lin(static_cast<std::size_t>(order) + 1, cd{});
    lin[0] = cd{1.0, 0.0};
    lin[1] = cd{1.0, 0.0};
    const PowerSeries l = log(PowerSeries(std::move(lin)));
    const PowerSeries one = PowerSeries::constant(cd{1.0, 0.0}, order);
    return BalloonKernel{div(one, sub(one, l))};
}

ClassMember member_from_schwarz(const PowerSeries& w, int order) {
    if (std::abs(w.c(0)) > 0.0) {
        throw SchwarzViolation("generating series must vanish at 0");
    }
    if (!schwarz_prefix_ok(SchwarzPrefix{w.c(1), w.c(2), w.c(3)})) {
        throw SchwarzViolation("Schwarz-prefix chain violated");
    }
    const int m = order;
    const PowerSeries win = w.truncated(m);
    const PowerSeries bw = compose(kernel_series(m).series, win);
    // (B(w) - 1)/t, integrated from 0, exponentiated, then shifted by z.
    const PowerSeries g = sub(bw, PowerSeries::constant(cd{1.0, 0.0}, m));
    const PowerSeries s = integrate(shift_down(g)).truncated(m - 1);
    const PowerSeries f_over_z = exp(s);
    PowerSeries f = shift_up(f_over_z);

    const PowerSeries lhs = div(derivative(f), f_over_z);
    if (max_coeff_dist(lhs, bw) > kResidualTolerance) {
        throw SchwarzViolation("z f'/f residual exceeds tolerance");
    }
    return ClassMember{std::move(f), ""};
}

ClassMember extremal_member(int index, int order) {
    PowerSeries w;
    std::string name;
    switch (index) {
        case 1:
            w = PowerSeries::identity(order);
            name = "f1: w(z) = z";
            break;
        case 2:
            w = PowerSeries::monomial(cd{1.0, 0.0}, 2, order);
            name = "f2: w(z) = z^2";
            break;
        case 3:
            w = PowerSeries::monomial(cd{0.0, 1.0}, 1, order);
            name = "f3: w(z) = i z";
            break;
        default:
            throw DomainError("extremal index must be 1, 2 or 3");
    }
    ClassMember m = member_from_schwarz(w, order);
    m.provenance = name;
    return m;
}

InitialCoefficients coeffs_from_p(const CaratheodoryPrefix& p) {
    InitialCoefficients out;
    const cd p1 = p.p1, p2 = p.p2, p3 = p.p3;
    out.a2 = 0.5 * p1;
    out.a3 = (p1 * p1 + 4.0 * p2) / 16.0;
    out.a4 = (p1 * p1 * p1 + 12.0 * p1 * p2 + 48.0 * p3) / 288.0;
    if (p.p4) {
        const cd p4 = *p.p4;
        out.a5 = -(7.0 * p1 * p1 * p1 * p1 - 24.0 * p1 * p1 * p2 - 96.0 * p1 * p3 -
                   576.0 * p4) /
                 4608.0;
    }
    return out;
}

InitialCoefficients coeffs_from_b(const SchwarzPrefix& b) {
    if (!schwarz_prefix_ok(b)) {
        throw SchwarzViolation("Schwarz-prefix chain violated");
    }
    InitialCoefficients out;
    out.a2 = b.b1;
    out.a3 = 0.75 * b.b1 * b.b1 + 0.5 * b.b2;
    out.a4 = (19.0 / 36.0) * b.b1 * b.b1 * b.b1 + (5.0 / 6.0) * b.b1 * b.b2 +
             b.b3 / 3.0;
    return out;
}

cd a5_from_b(cd b1, cd b2, cd b3, cd b4) {
    const cd b1sq = b1 * b1;
    return 0.25 * b4 + 0.25 * b2 * b2 + (7.0 / 12.0) * b1 * b3 +
           (23.0 / 24.0) * b1sq * b2 + (101.0 / 288.0) * b1sq * b1sq;
}

CoefficientSet full_coefficient_set(cd a2, cd a3, cd a4, cd a5) {
    CoefficientSet c;
    c.a2 = a2;
    c.a3 = a3;
    c.a4 = a4;
    c.a5 = a5;
    const cd a2sq = a2 * a2;
    const cd a2cu = a2sq * a2;
    c.gamma1 = 0.5 * a2;
    c.gamma2 = 0.5 * (a3 - 0.5 * a2sq);
    c.gamma3 = 0.5 * (a4 - a2 * a3 + a2cu / 3.0);
    c.inv_gamma1 = -0.5 * a2;
    c.inv_gamma2 = -0.5 * (a3 - 1.5 * a2sq);
    c.inv_gamma3 = -0.5 * (a4 - 4.0 * a2 * a3 + (10.0 / 3.0) * a2cu);
    return c;
}

CoefficientSet coefficient_set(const ClassMember& m) {
    return full_coefficient_set(m.a(2), m.a(3), m.a(4), m.a(5));
}

double boundary_indicator(cd w) {
    return std::abs(std::exp(cd{1.0, 0.0} - cd{1.0, 0.0} / w) - cd{1.0, 0.0}) - 1.0;
}

Membership membership(cd w) {
    if (w == cd{}) throw OriginExcluded("membership undefined at w = 0");
    const double d = boundary_indicator(w);
    if (std::abs(d) <= 1e-10) return Membership::Boundary;
    return d < 0.0 ? Membership::Inside : Membership::Outside;
}

namespace {

cd boundary_w(double theta) {
    const cd denom{1.0 - std::log(2.0 * std::cos(0.5 * theta)), -0.5 * theta};
    return cd{1.0, 0.0} / denom;
}

} // namespace

std::vector<BoundaryPoint> boundary_curve(int samples, double cusp_gap) {
    if (samples < 2) throw DomainError("boundary sampling needs at least 2 points");
    const double half = std::numbers::pi - cusp_gap;
    const double step = half / static_cast<double>(samples - 1);
    std::vector<BoundaryPoint> out(static_cast<std::size_t>(samples));
    // theta_j = (2j - (samples-1)) * half/(samples-1): exactly symmetric pairs.
    for (int j = 0; j < samples; ++j) {
        const double theta = static_cast<double>(2 * j - (samples - 1)) * step;
        out[static_cast<std::size_t>(j)] = BoundaryPoint{theta, boundary_w(theta)};
    }
    return out;
}

cd boundary_tip() { return cd{1.0, 0.0} / cd{1.0 - std::log(2.0), 0.0}; }

StarlikeReport starlikeness_probe(int samples, double cusp_gap) {
    StarlikeReport rep;
    const auto pts = boundary_curve(samples, cusp_gap);
    if (samples < 16) {
        rep.indeterminate = true;
        return rep;
    }
    double min_inc = std::numeric_limits<double>::infinity();
    double total = 0.0;
    double prev = std::arg(pts.front().w - cd{1.0, 0.0});
    for (std::size_t j = 1; j < pts.size(); ++j) {
        const double cur = std::arg(pts[j].w - cd{1.0, 0.0});
        double inc = cur - prev;
        if (inc > std::numbers::pi) inc -= 2.0 * std::numbers::pi;
        if (inc < -std::numbers::pi) inc += 2.0 * std::numbers::pi;
        min_inc = std::min(min_inc, inc);
        total += inc;
        prev = cur;
    }
    rep.min_increment = min_inc;
    rep.total_winding = total;
    rep.starlike = min_inc >= -1e-12;

    double circle_dev = 0.0;
    BoundaryPoint leftmost = pts.front();
    for (const auto& p : pts) {
        if (std::abs(p.w) <= 0.25) {
            const double x = p.w.real();
            const double y = p.w.imag();
            circle_dev = std::max(circle_dev,
                                  std::abs((x - 0.5) * (x - 0.5) + y * y - 0.25));
        }
        if (p.w.real() < leftmost.w.real()) leftmost = p;
    }
    rep.near_origin_circle_deviation = circle_dev;
    rep.leftmost = leftmost;
    return rep;
}

} // namespace starb
