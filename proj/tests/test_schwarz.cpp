#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "starb/balloon.hpp"
#include "starb/schwarz.hpp"

using namespace starb;

namespace {

cd random_disk_point(std::mt19937_64& rng, double rmax = 1.0) {
    std::uniform_real_distribution<double> r(0.0, 1.0);
    std::uniform_real_distribution<double> a(0.0, 2.0 * 3.14159265358979323846);
    return std::polar(rmax * std::sqrt(r(rng)), a(rng));
}

} // namespace

TEST_CASE("reconstruction: degenerate parameters collapse the tail") {
    // |g0| = 1 forces w(z) = g0 z.
    const auto b = prefix_from_schur(cd{1.0, 0.0}, cd{0.4, 0.1}, cd{-0.3, 0.2}, cd{0.9});
    CHECK(std::abs(b[0] - cd{1.0}) < 1e-15);
    CHECK(std::abs(b[1]) < 1e-15);
    CHECK(std::abs(b[2]) < 1e-15);
    CHECK(std::abs(b[3]) < 1e-15);

    // |g1| = 1 wipes out g2, g3: the prefix depends on (g0, g1) only.
    const auto c1 = prefix_from_schur(cd{0.3}, cd{0.0, 1.0}, cd{0.5}, cd{0.7});
    const auto c2 = prefix_from_schur(cd{0.3}, cd{0.0, 1.0}, cd{-0.8}, cd{0.1, 0.4});
    for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(c1[static_cast<std::size_t>(k)] - c2[static_cast<std::size_t>(k)]) <
              1e-15);
    }

    // g0 = 0, g1 = 1 is the two-fold rotation w = z^2.
    const auto z2 = prefix_from_schur(cd{0.0}, cd{1.0}, cd{0.5}, cd{0.5});
    CHECK(std::abs(z2[0]) < 1e-15);
    CHECK(std::abs(z2[1] - cd{1.0}) < 1e-15);
    CHECK(std::abs(z2[2]) < 1e-15);
    CHECK(std::abs(z2[3]) < 1e-15);
}

TEST_CASE("property: every polydisk point yields a feasible prefix") {
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 5000; ++iter) {
        const auto b = prefix_from_schur(random_disk_point(rng), random_disk_point(rng),
                                         random_disk_point(rng), random_disk_point(rng));
        CHECK(schwarz_prefix_ok(SchwarzPrefix{b[0], b[1], b[2]}, 1e-12));
        // The fourth coefficient of a Schwarz function obeys |b4| <= 1 - |b1|^2.
        CHECK(std::abs(b[3]) <= 1.0 - std::norm(b[0]) + 1e-12);
    }
}

TEST_CASE("property: forward parameters round-trip interior points") {
    std::mt19937_64 rng(4711);
    for (int iter = 0; iter < 2000; ++iter) {
        const cd g0 = random_disk_point(rng, 0.95);
        const cd g1 = random_disk_point(rng, 0.95);
        const cd g2 = random_disk_point(rng, 0.95);
        const cd g3 = random_disk_point(rng, 0.95);
        const auto b = prefix_from_schur(g0, g1, g2, g3);
        const auto back = schur_from_prefix(b);
        REQUIRE(back[0].has_value());
        REQUIRE(back[1].has_value());
        REQUIRE(back[2].has_value());
        REQUIRE(back[3].has_value());
        CHECK(std::abs(*back[0] - g0) < 1e-9);
        CHECK(std::abs(*back[1] - g1) < 1e-9);
        CHECK(std::abs(*back[2] - g2) < 1e-9);
        CHECK(std::abs(*back[3] - g3) < 1e-9);
    }
}

TEST_CASE("slice: cubic in the last parameter matches direct reconstruction") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 500; ++iter) {
        const cd g0 = random_disk_point(rng);
        const cd g1 = random_disk_point(rng);
        const cd g2 = random_disk_point(rng);
        const SchurPrefixSlice s = schur_prefix_slice(g0, g1, g2);
        for (int j = 0; j < 5; ++j) {
            const cd g3 = random_disk_point(rng);
            const auto b = prefix_from_schur(g0, g1, g2, g3);
            CHECK(std::abs(b[0] - s.b1) < 1e-14);
            CHECK(std::abs(b[1] - s.b2) < 1e-14);
            CHECK(std::abs(b[2] - s.b3) < 1e-14);
            CHECK(std::abs(b[3] - s.b4(g3)) < 1e-12);
        }
    }
}

TEST_CASE("property: generated prefixes build class members") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 200; ++iter) {
        const auto b = prefix_from_schur(random_disk_point(rng, 0.9),
                                         random_disk_point(rng, 0.9),
                                         random_disk_point(rng, 0.9),
                                         random_disk_point(rng, 0.9));
        std::vector<cd> w(9, cd{});
        for (std::size_t k = 0; k < 4; ++k) w[k + 1] = b[k];
        const ClassMember m = member_from_schwarz(PowerSeries(std::move(w)), 8);
        // a5 closed form against the series pipeline.
        CHECK(std::abs(a5_from_b(b[0], b[1], b[2], b[3]) - m.a(5)) < 1e-12);
    }
}
