#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "starb/errors.hpp"

namespace starb {

using cd = std::complex<double>;

/// Truncated complex power series c0 + c1 z + ... + cN z^N.
///
/// Values are immutable after construction; every operation returns a new
/// series. Binary operations truncate to the smaller operand order.
class PowerSeries {
public:
    /// Threshold below which a constant term / leading derivative does not
    /// count as a unit for division or reversion.
    static constexpr double kUnitThreshold = 1e-9;

    PowerSeries() : coeffs_(1, cd{0.0, 0.0}) {}
    explicit PowerSeries(std::vector<cd> coeffs);

    /// Series with all coefficients zero, of the given order.
    static PowerSeries zero(int order);
    /// Constant series c + 0 z + ... of the given order.
    static PowerSeries constant(cd value, int order);
    /// The identity series z.
    static PowerSeries identity(int order);
    /// c * z^k.
    static PowerSeries monomial(cd value, int power, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of z^k; zero when k exceeds the truncation order.
    cd c(int k) const;
    const std::vector<cd>& coeffs() const { return coeffs_; }

    /// Copy truncated or zero-extended to the given order.
    PowerSeries truncated(int order) const;

    /// Largest coefficient modulus (test helper).
    double max_abs() const;

private:
    std::vector<cd> coeffs_;
};

PowerSeries add(const PowerSeries& a, const PowerSeries& b);
PowerSeries sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries neg(const PowerSeries& a);
PowerSeries scale(const PowerSeries& a, cd factor);
/// Cauchy product truncated to the common order.
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);
/// Series quotient; requires |b0| > kUnitThreshold.
PowerSeries div(const PowerSeries& a, const PowerSeries& b);
/// Formal exponential via the first-order recurrence y' = a' y.
PowerSeries exp(const PowerSeries& a);
/// Formal logarithm via y' = a'/a; requires Re(a0) > 0.
PowerSeries log(const PowerSeries& a);
/// Term-wise derivative, order N-1.
PowerSeries derivative(const PowerSeries& a);
/// Antiderivative with zero constant term, order N+1.
PowerSeries integrate(const PowerSeries& a);
/// Horner composition outer(inner); inner must have exactly zero constant
/// term. Result order is min of the operand orders.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);
/// Compositional inverse g with f(g(w)) = w; requires f0 = 0 and
/// |f1| > kUnitThreshold.
PowerSeries revert(const PowerSeries& f);

/// Multiply by z, raising the order by one.
PowerSeries shift_up(const PowerSeries& a);
/// Divide by z (drops the constant term), lowering the order by one.
PowerSeries shift_down(const PowerSeries& a);

/// max_k |a_k - b_k| over the common order.
double max_coeff_dist(const PowerSeries& a, const PowerSeries& b);

} // namespace starb
