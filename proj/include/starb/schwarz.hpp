#pragma once

#include <array>
#include <optional>

#include "starb/caratheodory.hpp"
#include "starb/series.hpp"

namespace starb {

/// Reconstruction of Schwarz-function coefficient prefixes from Schur
/// parameters. Writing w(z) = z phi(z) with phi an analytic self-map of the
/// disk, every parameter tuple (g0, g1, g2, g3) in the closed polydisk
/// corresponds to a feasible prefix (b1, b2, b3, b4) via
///     phi_k(z) = (g_k + z phi_{k+1}(z)) / (1 + conj(g_k) z phi_{k+1}(z)),
/// and every feasible prefix arises this way. When some |g_k| = 1 the later
/// parameters drop out automatically (the Moebius step collapses to the
/// constant g_k), matching the forced tail of an extreme prefix.
std::array<cd, 4> prefix_from_schur(cd g0, cd g1, cd g2, cd g3);

/// Forward Schur parameters of a prefix. Stops early (nullopt entries) when a
/// step becomes degenerate, i.e. |g_k| is within tol of 1.
std::array<std::optional<cd>, 4> schur_from_prefix(const std::array<cd, 4>& b,
                                                   double tol = 1e-12);

/// b1..b3 together with the cubic polynomial giving the fourth coefficient as
/// a function of the last Schur parameter: b4(g3) = a0 + a1 g3 + a2 g3^2 + a3 g3^3.
struct SchurPrefixSlice {
    cd b1{};
    cd b2{};
    cd b3{};
    std::array<cd, 4> b4_poly{};

    cd b4(cd g3) const {
        return ((b4_poly[3] * g3 + b4_poly[2]) * g3 + b4_poly[1]) * g3 + b4_poly[0];
    }
};

SchurPrefixSlice schur_prefix_slice(cd g0, cd g1, cd g2);

} // namespace starb
