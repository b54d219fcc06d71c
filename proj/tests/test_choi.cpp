#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "starb/choi.hpp"

using namespace starb;

TEST_CASE("worked maxima") {
    const YResult a = y_exact({1.0, 0.0, 0.0});
    CHECK(a.value == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(a.branch == YBranch::Case1Parabola);

    const YResult b = y_exact({0.0, 2.0, 0.0});
    CHECK(b.value == doctest::Approx(2.0).epsilon(1e-14));

    const YResult c = y_exact({1.0, 1.0, -1.0});
    CHECK(c.value == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
    CHECK(c.branch == YBranch::RSqrt);

    CHECK(y_oracle({1.0, 0.0, 0.0}, 500) == doctest::Approx(2.0).epsilon(1e-4));
    CHECK(y_oracle({0.0, 2.0, 0.0}, 500) == doctest::Approx(2.0).epsilon(1e-4));
    CHECK(y_oracle({1.0, 1.0, -1.0}, 1000) ==
          doctest::Approx(std::sqrt(5.0)).epsilon(1e-4));
}

TEST_CASE("oracle kernel matches the serial reference") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int iter = 0; iter < 40; ++iter) {
        const YInput in{u(rng), u(rng), u(rng)};
        const double fast = y_oracle(in, 150);
        const double slow = y_oracle_serial(in, 150);
        CHECK(std::abs(fast - slow) < 1e-10);
    }
    CHECK_THROWS_AS(y_oracle({1, 1, 1}, 1), DomainError);
}

TEST_CASE("property: oracle never exceeds the closed form") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int iter = 0; iter < 60; ++iter) {
        const YInput in{u(rng), u(rng), u(rng)};
        const double exact = y_exact(in).value;
        const double grid = y_oracle(in, 2000);
        CHECK(grid <= exact + 1e-12);
        CHECK(exact - grid <= 1e-3);
        // z = 0 sits on the grid, so both dominate |A| + 1.
        CHECK(exact >= std::abs(in.A) + 1.0 - 1e-12);
    }
}

TEST_CASE("property: branch exhaustiveness over [-5,5]^3") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int iter = 0; iter < 20000; ++iter) {
        const YInput in{u(rng), u(rng), u(rng)};
        const YResult r = y_exact(in);
        CHECK(std::isfinite(r.value));
        CHECK(r.value >= std::abs(in.A));
        CHECK(!to_string(r.branch).empty());
    }
    // Degenerate corners.
    CHECK(std::isfinite(y_exact({0.0, 0.0, 0.0}).value));
    CHECK(std::isfinite(y_exact({2.0, 0.0, -1.0}).value));
    CHECK(std::isfinite(y_exact({-3.0, 0.0, 0.0}).value));
}

TEST_CASE("property: continuity across branch seams") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.05, 3.0);
    std::uniform_real_distribution<double> sgn(0.0, 1.0);
    const double delta = 5e-9;
    auto probe = [&](const YInput& lo, const YInput& hi) {
        const double jump = std::abs(y_exact(lo).value - y_exact(hi).value);
        CHECK(jump < 1e-6);
    };
    for (int iter = 0; iter < 200; ++iter) {
        // seam |B| = 2(1 - |C|) with AC >= 0.
        const double c1 = std::min(u(rng) / 3.0, 0.999);
        const double a1 = u(rng);
        const double b1 = 2.0 * (1.0 - c1);
        probe({a1, b1 - delta, c1}, {a1, b1 + delta, c1});

        // seam B^2 = -4AC(1/C^2 - 1) with AC < 0, |C| < 1.
        const double c2 = std::min(u(rng) / 3.0, 0.95) + 1e-3;
        const double a2 = u(rng);
        const double t = 4.0 * a2 * c2 * (1.0 / (c2 * c2) - 1.0);
        const double b2 = std::sqrt(std::max(t, 0.0));
        probe({a2, b2 - delta, -c2}, {a2, b2 + delta, -c2});

        // seam |C|(|B| + 4|A|) = |AB| (requires |A| > |C|).
        const double c3 = u(rng) / 4.0;
        const double a3 = c3 + u(rng);
        const double b3 = 4.0 * a3 * c3 / (a3 - c3 + 1e-12);
        probe({a3, b3 - delta, -c3}, {a3, b3 + delta, -c3});
    }
}

TEST_CASE("substitution triples") {
    const YInput h22 = abc_h22(0.5);
    CHECK(h22.A == doctest::Approx(-5.0 / 288.0).epsilon(1e-14));
    CHECK(h22.B == doctest::Approx(1.0 / 8.0).epsilon(1e-14));
    CHECK(h22.C == doctest::Approx(-13.0 / 8.0).epsilon(1e-14));
    CHECK(h22.A * h22.C >= 0.0);
    CHECK(std::abs(h22.B) >= 2.0 * (1.0 - std::abs(h22.C)));

    CHECK_THROWS_AS(abc_h22(0.0), DomainError);
    CHECK_THROWS_AS(abc_h22(1.0), DomainError);
    CHECK_THROWS_AS(abc_h21_log(-0.1), DomainError);
    CHECK_THROWS_AS(abc_h21_invlog(1.0), DomainError);

    // A -> 0 as zeta -> 0 for the H22 substitution.
    CHECK(std::abs(abc_h22(1e-6).A) < 1e-15);

    // The log/invlog substitutions have AC < 0 throughout.
    for (double z : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        CHECK(abc_h21_log(z).A * abc_h21_log(z).C < 0.0);
        CHECK(abc_h21_invlog(z).A * abc_h21_invlog(z).C < 0.0);
    }
}

TEST_CASE("case scalars: closed forms match the definitions") {
    for (int k = 1; k <= 999; ++k) {
        const double z = static_cast<double>(k) / 1000.0;
        const CaseScalars ld = case_scalars_from_abc(abc_h21_log(z));
        const CaseScalars lc = case_scalars_log(z);
        CHECK(std::abs(ld.t1 - lc.t1) < 1e-9 * std::max(1.0, std::abs(lc.t1)));
        CHECK(std::abs(ld.t2 - lc.t2) < 1e-9 * std::max(1.0, std::abs(lc.t2)));
        CHECK(std::abs(ld.t3 - lc.t3) < 1e-9 * std::max(1.0, std::abs(lc.t3)));
        CHECK(std::abs(ld.t4 - lc.t4) < 1e-9 * std::max(1.0, std::abs(lc.t4)));
        CHECK(std::abs(ld.t5 - lc.t5) < 1e-9 * std::max(1.0, std::abs(lc.t5)));
        CHECK(std::abs(ld.t6 - lc.t6) < 1e-9 * std::max(1.0, std::abs(lc.t6)));
        const CaseScalars id = case_scalars_from_abc(abc_h21_invlog(z));
        const CaseScalars ic = case_scalars_invlog(z);
        CHECK(std::abs(id.t1 - ic.t1) < 1e-9 * std::max(1.0, std::abs(ic.t1)));
        CHECK(std::abs(id.t2 - ic.t2) < 1e-9 * std::max(1.0, std::abs(ic.t2)));
        CHECK(std::abs(id.t3 - ic.t3) < 1e-9 * std::max(1.0, std::abs(ic.t3)));
        CHECK(std::abs(id.t4 - ic.t4) < 1e-9 * std::max(1.0, std::abs(ic.t4)));
        CHECK(std::abs(id.t5 - ic.t5) < 1e-9 * std::max(1.0, std::abs(ic.t5)));
        CHECK(std::abs(id.t6 - ic.t6) < 1e-9 * std::max(1.0, std::abs(ic.t6)));
    }
}

TEST_CASE("case scalar signs and sign-change points") {
    // T2 at zeta = 1/2 for the log substitution.
    CHECK(case_scalars_log(0.5).t2 ==
          doctest::Approx(-0.25 * (18.0 - 0.25) / (12.0 * 3.25)).epsilon(1e-14));
    CHECK(case_scalars_log(0.5).t2 < 0.0);

    CHECK(zeta_prime_log() == doctest::Approx(0.5434768).epsilon(1e-6));
    CHECK(zeta_prime_invlog() == doctest::Approx(0.491827).epsilon(1e-5));
    CHECK(std::abs(case_scalars_log(zeta_prime_log()).t6) < 1e-13);
    CHECK(std::abs(case_scalars_invlog(zeta_prime_invlog()).t6) < 1e-13);

    // phi2 envelope beyond the sign-change point.
    CHECK(phi2_log(0.9) <= 0.0516512 + 1e-7);
    CHECK(phi2_log(zeta_prime_log()) == doctest::Approx(0.0516512).epsilon(1e-5));
    CHECK(phi2_invlog(1.0) == doctest::Approx(43.0 / 576.0).epsilon(1e-12));
}

TEST_CASE("envelopes match their substitution routes") {
    for (int k = 1; k <= 99; ++k) {
        const double z = static_cast<double>(k) / 100.0;
        {
            const YInput in = abc_h22(z);
            const double route = z * (1.0 - z * z) / 3.0 *
                                 (std::abs(in.A) + std::abs(in.B) + std::abs(in.C));
            CHECK(envelope_h22(z) == doctest::Approx(route).epsilon(1e-11));
            CHECK(envelope_h22(z) <= 0.25 + 1e-12);
        }
        {
            const YInput in = abc_h21_log(z);
            const double route = z * (1.0 - z * z) / 12.0 *
                                 (-std::abs(in.A) + std::abs(in.B) + std::abs(in.C));
            CHECK(envelope_log(z) == doctest::Approx(route).epsilon(1e-11));
            const double sqrt_route =
                z * (1.0 - z * z) / 12.0 * (std::abs(in.C) + std::abs(in.A)) *
                std::sqrt(1.0 - in.B * in.B / (4.0 * in.A * in.C));
            CHECK(phi2_log(z) == doctest::Approx(sqrt_route).epsilon(1e-11));
        }
        {
            const YInput in = abc_h21_invlog(z);
            const double route = z * (1.0 - z * z) / 12.0 *
                                 (-std::abs(in.A) + std::abs(in.B) + std::abs(in.C));
            CHECK(envelope_invlog(z) == doctest::Approx(route).epsilon(1e-11));
            const double sqrt_route =
                z * (1.0 - z * z) / 12.0 * (std::abs(in.C) + std::abs(in.A)) *
                std::sqrt(1.0 - in.B * in.B / (4.0 * in.A * in.C));
            CHECK(phi2_invlog(z) == doctest::Approx(sqrt_route).epsilon(1e-11));
        }
    }
}
