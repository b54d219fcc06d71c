#include "starb/series.hpp"

#include <algorithm>
#include <cmath>

namespace starb {

PowerSeries::PowerSeries(std::vector<cd> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.assign(1, cd{0.0, 0.0});
}

PowerSeries PowerSeries::zero(int order) {
    return PowerSeries(std::vector<cd>(static_cast<std::size_t>(order) + 1, cd{}));
}

PowerSeries PowerSeries::constant(cd value, int order) {
    std::vector<cd> c(static_cast<std::size_t>(order) + 1, cd{});
    c[0] = value;
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::identity(int order) {
    return monomial(cd{1.0, 0.0}, 1, order);
}

PowerSeries PowerSeries::monomial(cd value, int power, int order) {
    std::vector<cd> c(static_cast<std::size_t>(order) + 1, cd{});
    if (power <= order) c[static_cast<std::size_t>(power)] = value;
    return PowerSeries(std::move(c));
}

cd PowerSeries::c(int k) const {
    if (k < 0 || k > order()) return cd{};
    return coeffs_[static_cast<std::size_t>(k)];
}

PowerSeries PowerSeries::truncated(int order) const {
    std::vector<cd> c(static_cast<std::size_t>(order) + 1, cd{});
    const int m = std::min(order, this->order());
    for (int k = 0; k <= m; ++k) c[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)];
    return PowerSeries(std::move(c));
}

double PowerSeries::max_abs() const {
    double m = 0.0;
    for (const cd& v : coeffs_) m = std::max(m, std::abs(v));
    return m;
}

PowerSeries add(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<cd> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = a.c(k) + b.c(k);
    return PowerSeries(std::move(c));
}

PowerSeries sub(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<cd> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = a.c(k) - b.c(k);
    return PowerSeries(std::move(c));
}

PowerSeries neg(const PowerSeries& a) {
    std::vector<cd> c(a.coeffs());
    for (cd& v : c) v = -v;
    return PowerSeries(std::move(c));
}

PowerSeries scale(const PowerSeries& a, cd factor) {
    std::vector<cd> c(a.coeffs());
    for (cd& v : c) v *= factor;
    return PowerSeries(std::move(c));
}

PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<cd> c(static_cast<std::size_t>(n) + 1, cd{});
    for (int i = 0; i <= n; ++i) {
        const cd ai = a.c(i);
        if (ai == cd{}) continue;
        for (int j = 0; i + j <= n; ++j) {
            c[static_cast<std::size_t>(i + j)] += ai * b.c(j);
        }
    }
    return PowerSeries(std::move(c));
}

PowerSeries div(const PowerSeries& a, const PowerSeries& b) {
    if (std::abs(b.c(0)) <= PowerSeries::kUnitThreshold) {
        throw DivisionByNonUnit("series division by non-unit constant term");
    }
    const int n = std::min(a.order(), b.order());
    std::vector<cd> q(static_cast<std::size_t>(n) + 1);
    const cd b0 = b.c(0);
    for (int k = 0; k <= n; ++k) {
        cd s = a.c(k);
        for (int j = 0; j < k; ++j) s -= q[static_cast<std::size_t>(j)] * b.c(k - j);
        q[static_cast<std::size_t>(k)] = s / b0;
    }
    return PowerSeries(std::move(q));
}

PowerSeries exp(const PowerSeries& a) {
    const int n = a.order();
    std::vector<cd> y(static_cast<std::size_t>(n) + 1);
    y[0] = std::exp(a.c(0));
    for (int k = 1; k <= n; ++k) {
        cd s{};
        for (int j = 1; j <= k; ++j) {
            s += static_cast<double>(j) * a.c(j) * y[static_cast<std::size_t>(k - j)];
        }
        y[static_cast<std::size_t>(k)] = s / static_cast<double>(k);
    }
    return PowerSeries(std::move(y));
}

PowerSeries log(const PowerSeries& a) {
    if (!(a.c(0).real() > 0.0)) {
        throw BranchViolation("series log requires Re(a0) > 0");
    }
    const int n = a.order();
    std::vector<cd> y(static_cast<std::size_t>(n) + 1);
    y[0] = std::log(a.c(0));
    const cd a0 = a.c(0);
    for (int k = 1; k <= n; ++k) {
        cd s = a.c(k);
        for (int j = 1; j < k; ++j) {
            s -= (static_cast<double>(k - j) / static_cast<double>(k)) * a.c(j) *
                 y[static_cast<std::size_t>(k - j)];
        }
        y[static_cast<std::size_t>(k)] = s / a0;
    }
    return PowerSeries(std::move(y));
}

PowerSeries derivative(const PowerSeries& a) {
    const int n = std::max(a.order() - 1, 0);
    std::vector<cd> c(static_cast<std::size_t>(n) + 1, cd{});
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = static_cast<double>(k + 1) * a.c(k + 1);
    return PowerSeries(std::move(c));
}

PowerSeries integrate(const PowerSeries& a) {
    const int n = a.order() + 1;
    std::vector<cd> c(static_cast<std::size_t>(n) + 1, cd{});
    for (int k = 1; k <= n; ++k) c[static_cast<std::size_t>(k)] = a.c(k - 1) / static_cast<double>(k);
    return PowerSeries(std::move(c));
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
    if (std::abs(inner.c(0)) > 0.0) {
        throw NonvanishingInner("composition requires inner series with zero constant term");
    }
    const int n = std::min(outer.order(), inner.order());
    const PowerSeries in = inner.truncated(n);
    PowerSeries r = PowerSeries::constant(outer.c(n), n);
    for (int k = n - 1; k >= 0; --k) {
        r = add(mul(r, in), PowerSeries::constant(outer.c(k), n));
    }
    return r;
}

PowerSeries revert(const PowerSeries& f) {
    if (std::abs(f.c(0)) > 0.0) {
        throw NonvanishingInner("reversion requires zero constant term");
    }
    if (std::abs(f.c(1)) <= PowerSeries::kUnitThreshold) {
        throw NonUnitDerivative("reversion requires a unit leading coefficient");
    }
    const int n = f.order();
    const PowerSeries id = PowerSeries::identity(n);
    const PowerSeries fp = derivative(f).truncated(n);
    // Newton iteration on f(g) = id; each pass doubles the valid order.
    PowerSeries g = scale(id, cd{1.0, 0.0} / f.c(1));
    int steps = 2;
    for (int m = 1; m < n + 1; m *= 2) ++steps;
    for (int s = 0; s < steps; ++s) {
        const PowerSeries residual = sub(compose(f, g), id);
        g = sub(g, div(residual, compose(fp, g)));
    }
    return g;
}

PowerSeries shift_up(const PowerSeries& a) {
    std::vector<cd> c(a.coeffs().size() + 1, cd{});
    for (std::size_t k = 0; k < a.coeffs().size(); ++k) c[k + 1] = a.coeffs()[k];
    return PowerSeries(std::move(c));
}

PowerSeries shift_down(const PowerSeries& a) {
    if (a.order() == 0) return PowerSeries::zero(0);
    std::vector<cd> c(a.coeffs().size() - 1);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeffs()[k + 1];
    return PowerSeries(std::move(c));
}

double max_coeff_dist(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    double m = 0.0;
    for (int k = 0; k <= n; ++k) m = std::max(m, std::abs(a.c(k) - b.c(k)));
    return m;
}

} // namespace starb
