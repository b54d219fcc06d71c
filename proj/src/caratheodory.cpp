#include "starb/caratheodory.hpp"

#include <algorithm>
#include <cmath>

namespace starb {

namespace {

double norm2(cd z) { return z.real() * z.real() + z.imag() * z.imag(); }

} // namespace

bool SchwarzParams::in_closed_tridisk() const {
    const double lim = 1.0 + kDiskTolerance;
    return std::abs(zeta1) <= lim && std::abs(zeta2) <= lim && std::abs(zeta3) <= lim;
}

CaratheodoryPrefix p_from_params(const SchwarzParams& s) {
    if (!s.in_closed_tridisk()) {
        throw ParamOutOfDisk("parameter outside the closed unit disk");
    }
    const cd z1 = s.zeta1;
    const cd z2 = s.zeta2;
    const cd z3 = s.zeta3;
    // 1 - |z1|^2, not 1 - z1^2: the two agree for real z1 (the rotation-reduced
    // sweeps), and only the modulus form keeps |p2|, |p3| <= 2 on the whole
    // tridisk.
    const double r1 = 1.0 - norm2(z1);
    CaratheodoryPrefix p;
    p.p1 = 2.0 * z1;
    p.p2 = 2.0 * z1 * z1 + 2.0 * r1 * z2;
    p.p3 = 2.0 * z1 * z1 * z1 + 4.0 * r1 * z1 * z2 - 2.0 * r1 * std::conj(z1) * z2 * z2 +
           2.0 * r1 * (1.0 - norm2(z2)) * z3;
    return p;
}

PowerSeries p_series_extremal_first(cd zeta1, int order) {
    if (std::abs(std::abs(zeta1) - 1.0) > SchwarzParams::kDiskTolerance) {
        throw ParamOutOfDisk("first extreme member requires |zeta1| = 1");
    }
    std::vector<cd> c(static_cast<std::size_t>(order) + 1);
    c[0] = cd{1.0, 0.0};
    cd pw{1.0, 0.0};
    for (int k = 1; k <= order; ++k) {
        pw *= zeta1;
        c[static_cast<std::size_t>(k)] = 2.0 * pw;
    }
    return PowerSeries(std::move(c));
}

PowerSeries p_series_extremal_second(cd zeta1, cd zeta2, int order) {
    if (std::abs(zeta1) >= 1.0 ||
        std::abs(std::abs(zeta2) - 1.0) > SchwarzParams::kDiskTolerance) {
        throw ParamOutOfDisk("second extreme member requires |zeta1| < 1 and |zeta2| = 1");
    }
    const cd a = std::conj(zeta1) * zeta2 + zeta1;
    const cd b = std::conj(zeta1) * zeta2 - zeta1;
    std::vector<cd> num(static_cast<std::size_t>(order) + 1, cd{});
    std::vector<cd> den(static_cast<std::size_t>(order) + 1, cd{});
    num[0] = cd{1.0, 0.0};
    den[0] = cd{1.0, 0.0};
    if (order >= 1) {
        num[1] = a;
        den[1] = b;
    }
    if (order >= 2) {
        num[2] = zeta2;
        den[2] = -zeta2;
    }
    return div(PowerSeries(std::move(num)), PowerSeries(std::move(den)));
}

PowerSeries schwarz_from_p(const PowerSeries& p) {
    if (p.c(0) != cd{1.0, 0.0}) {
        throw ParamOutOfDisk("schwarz_from_p requires p(0) = 1");
    }
    const PowerSeries one = PowerSeries::constant(cd{1.0, 0.0}, p.order());
    return div(sub(p, one), add(p, one));
}

PowerSeries p_series_from_schwarz(const PowerSeries& w) {
    if (std::abs(w.c(0)) > 0.0) {
        throw ParamOutOfDisk("p_series_from_schwarz requires w(0) = 0");
    }
    const PowerSeries one = PowerSeries::constant(cd{1.0, 0.0}, w.order());
    return div(add(one, w), sub(one, w));
}

bool InequalityBundle::all_ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const InequalityCheck& c) { return c.ok(); });
}

InequalityBundle check_caratheodory_inequalities(const CaratheodoryPrefix& p,
                                                 double rho, double mu) {
    if (rho < 0.0 || rho > 1.0) {
        throw DomainError("rho must lie in [0, 1]");
    }
    std::vector<cd> coeff{p.p1, p.p2, p.p3};
    if (p.p4) coeff.push_back(*p.p4);
    const int n = static_cast<int>(coeff.size());
    auto at = [&](int k) { return coeff[static_cast<std::size_t>(k - 1)]; };

    InequalityBundle out;
    for (int t = 1; t <= n; ++t) {
        out.checks.push_back({"|p" + std::to_string(t) + "| <= 2", std::abs(at(t)), 2.0});
    }
    for (int t = 1; t <= n; ++t) {
        for (int k = 1; t + 2 * k <= n; ++k) {
            const cd lhs = at(t + 2 * k) - rho * at(t) * at(k) * at(k);
            out.checks.push_back({"|p" + std::to_string(t + 2 * k) + " - rho p" +
                                      std::to_string(t) + " p" + std::to_string(k) + "^2|",
                                  std::abs(lhs), 2.0 * (1.0 + 2.0 * rho)});
        }
    }
    out.checks.push_back({"|p2 - p1^2/2| <= 2 - |p1|^2/2",
                          std::abs(at(2) - 0.5 * at(1) * at(1)),
                          2.0 - 0.5 * std::norm(at(1))});
    const double rhs_mu = 2.0 * std::max(1.0, std::abs(2.0 * mu - 1.0));
    for (int a = 1; a <= n; ++a) {
        for (int b = a; a + b <= n; ++b) {
            const cd lhs = at(a + b) - mu * at(a) * at(b);
            out.checks.push_back({"|p" + std::to_string(a + b) + " - mu p" +
                                      std::to_string(a) + " p" + std::to_string(b) + "|",
                                  std::abs(lhs), rhs_mu});
        }
    }
    return out;
}

double SchwarzPrefixMargins::worst() const { return std::min({m1, m2, m3}); }

SchwarzPrefixMargins schwarz_prefix_margins(const SchwarzPrefix& b) {
    const double a1 = std::abs(b.b1);
    const double a2 = std::abs(b.b2);
    const double a3 = std::abs(b.b3);
    SchwarzPrefixMargins m;
    m.m1 = 1.0 - a1;
    m.m2 = (1.0 - a1 * a1) - a2;
    m.m3 = (1.0 - a1 * a1 - a2 * a2 / (1.0 + a1)) - a3;
    return m;
}

bool schwarz_prefix_ok(const SchwarzPrefix& b, double slack) {
    return schwarz_prefix_margins(b).worst() >= -slack;
}

} // namespace starb
