#include "starb/schwarz.hpp"

#include <cmath>

namespace starb {

namespace {

using C4 = std::array<cd, 4>;

// phi = (g + z psi)/(1 + conj(g) z psi) at truncation order 3.
C4 inverse_step(cd g, const C4& psi) {
    const cd gc = std::conj(g);
    const C4 num{g, psi[0], psi[1], psi[2]};
    const C4 den{cd{1.0, 0.0}, gc * psi[0], gc * psi[1], gc * psi[2]};
    C4 q;
    q[0] = num[0];
    q[1] = num[1] - q[0] * den[1];
    q[2] = num[2] - q[0] * den[2] - q[1] * den[1];
    q[3] = num[3] - q[0] * den[3] - q[1] * den[2] - q[2] * den[1];
    return q;
}

// phi' = (phi - g)/(z (1 - conj(g) phi)) with g = phi(0); valid when |g| < 1.
C4 forward_step(const C4& c) {
    const cd g = c[0];
    const cd gc = std::conj(g);
    const double d0 = 1.0 - std::norm(g);
    const C4 num{c[1], c[2], c[3], cd{}};
    const C4 den{cd{d0, 0.0}, -gc * c[1], -gc * c[2], -gc * c[3]};
    C4 q{};
    q[0] = num[0] / den[0];
    q[1] = (num[1] - q[0] * den[1]) / den[0];
    q[2] = (num[2] - q[0] * den[2] - q[1] * den[1]) / den[0];
    q[3] = (num[3] - q[0] * den[3] - q[1] * den[2] - q[2] * den[1]) / den[0];
    return q;
}

} // namespace

std::array<cd, 4> prefix_from_schur(cd g0, cd g1, cd g2, cd g3) {
    const C4 phi3{g3, cd{}, cd{}, cd{}};
    const C4 phi2 = inverse_step(g2, phi3);
    const C4 phi1 = inverse_step(g1, phi2);
    return inverse_step(g0, phi1);
}

std::array<std::optional<cd>, 4> schur_from_prefix(const std::array<cd, 4>& b,
                                                   double tol) {
    std::array<std::optional<cd>, 4> out{};
    C4 phi = b;
    for (int k = 0; k < 4; ++k) {
        out[static_cast<std::size_t>(k)] = phi[0];
        if (std::abs(std::abs(phi[0]) - 1.0) <= tol) break;
        if (std::abs(phi[0]) > 1.0) break;
        if (k < 3) phi = forward_step(phi);
    }
    return out;
}

SchurPrefixSlice schur_prefix_slice(cd g0, cd g1, cd g2) {
    SchurPrefixSlice s;
    // b4 is a cubic in g3; recover its coefficients from four evaluations.
    const std::array<cd, 4> f0 = prefix_from_schur(g0, g1, g2, cd{0.0, 0.0});
    const std::array<cd, 4> fp = prefix_from_schur(g0, g1, g2, cd{1.0, 0.0});
    const std::array<cd, 4> fm = prefix_from_schur(g0, g1, g2, cd{-1.0, 0.0});
    const std::array<cd, 4> fi = prefix_from_schur(g0, g1, g2, cd{0.0, 1.0});
    s.b1 = f0[0];
    s.b2 = f0[1];
    s.b3 = f0[2];
    const cd a0 = f0[3];
    const cd even = 0.5 * (fp[3] + fm[3]) - a0;           // a2
    const cd odd_sum = 0.5 * (fp[3] - fm[3]);             // a1 + a3
    // f(i) = a0 + i a1 - a2 - i a3  =>  a1 - a3 = -i (f(i) - a0 + a2)
    const cd odd_diff = cd{0.0, -1.0} * (fi[3] - a0 + even);
    s.b4_poly[0] = a0;
    s.b4_poly[1] = 0.5 * (odd_sum + odd_diff);
    s.b4_poly[2] = even;
    s.b4_poly[3] = 0.5 * (odd_sum - odd_diff);
    return s;
}

} // namespace starb
