#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "starb/series.hpp"

namespace starb {

enum class ExecMode { Serial, Parallel };

/// Maximum value together with the linear grid index where it was first
/// attained. Ties resolve to the smallest index, so results do not depend on
/// chunking or thread count.
struct MaxLoc {
    double value = -std::numeric_limits<double>::infinity();
    std::uint64_t index = std::numeric_limits<std::uint64_t>::max();

    void offer(double v, std::uint64_t i) {
        if (v > value || (v == value && i < index)) {
            value = v;
            index = i;
        }
    }
    void merge(const MaxLoc& other) { offer(other.value, other.index); }
};

/// Polar grid over a disk of the given radius: `radial` rings k/(radial-1)
/// (the center counts once) times `angular` angles 2 pi j / angular.
/// Enumeration order: center first, then rings outward, angles increasing.
struct PolarGrid {
    int radial = 2;
    int angular = 8;

    std::uint64_t size() const {
        return 1 + static_cast<std::uint64_t>(radial - 1) *
                       static_cast<std::uint64_t>(angular);
    }
    /// Point of the unit-disk grid at the linear position, scaled by `scale`.
    cd point(std::uint64_t i, double scale = 1.0) const;
};

/// Uniform real grid on [0, 1] including both endpoints.
struct RealGrid {
    int points = 2;
    std::uint64_t size() const { return static_cast<std::uint64_t>(points); }
    double point(std::uint64_t i) const {
        return static_cast<double>(i) / static_cast<double>(points - 1);
    }
};

/// Maximizes K values over a grid of `outer` x `inner` points.
/// `outer_body(o)` may hoist work shared by the inner loop and returns a
/// callable `(i, vals)` that fills vals[0..K-1]; slots may stay at -inf when
/// a functional is only scored at selected inner points. The outer dimension
/// is parallelized; serial mode runs the identical loop without OpenMP and is
/// kept as the reference implementation.
template <std::size_t K, class OuterBody>
std::array<MaxLoc, K> grid_max(std::uint64_t outer, std::uint64_t inner,
                               OuterBody&& outer_body, ExecMode mode);

} // namespace starb

#ifdef _OPENMP
#include <omp.h>
#endif

namespace starb {

template <std::size_t K, class OuterBody>
std::array<MaxLoc, K> grid_max(std::uint64_t outer, std::uint64_t inner,
                               OuterBody&& outer_body, ExecMode mode) {
    std::array<MaxLoc, K> global{};
    if (mode == ExecMode::Parallel) {
#ifdef _OPENMP
#pragma omp parallel
        {
            std::array<MaxLoc, K> local{};
            std::array<double, K> vals{};
#pragma omp for schedule(static) nowait
            for (std::int64_t o = 0; o < static_cast<std::int64_t>(outer); ++o) {
                auto inner_body = outer_body(static_cast<std::uint64_t>(o));
                for (std::uint64_t i = 0; i < inner; ++i) {
                    vals.fill(-std::numeric_limits<double>::infinity());
                    inner_body(i, vals);
                    const std::uint64_t idx = static_cast<std::uint64_t>(o) * inner + i;
                    for (std::size_t k = 0; k < K; ++k) local[k].offer(vals[k], idx);
                }
            }
#pragma omp critical
            {
                for (std::size_t k = 0; k < K; ++k) global[k].merge(local[k]);
            }
        }
        return global;
#endif
    }
    std::array<double, K> vals{};
    for (std::uint64_t o = 0; o < outer; ++o) {
        auto inner_body = outer_body(o);
        for (std::uint64_t i = 0; i < inner; ++i) {
            vals.fill(-std::numeric_limits<double>::infinity());
            inner_body(i, vals);
            for (std::size_t k = 0; k < K; ++k) global[k].offer(vals[k], o * inner + i);
        }
    }
    return global;
}

} // namespace starb
