#include "starb/sweep.hpp"

#include <cmath>
#include <numbers>

namespace starb {

cd PolarGrid::point(std::uint64_t i, double scale) const {
    if (i == 0) return cd{};
    const std::uint64_t ring = (i - 1) / static_cast<std::uint64_t>(angular) + 1;
    const std::uint64_t ang = (i - 1) % static_cast<std::uint64_t>(angular);
    const double r = scale * static_cast<double>(ring) / static_cast<double>(radial - 1);
    const double theta =
        2.0 * std::numbers::pi * static_cast<double>(ang) / static_cast<double>(angular);
    return std::polar(r, theta);
}

} // namespace starb
