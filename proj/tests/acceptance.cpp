// Acceptance suite: one numbered criterion per run (--criterion N), or all.
// Each criterion prints [PASS]/[FAIL] lines for its sub-checks and a summary;
// the process exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "starb/balloon.hpp"
#include "starb/choi.hpp"
#include "starb/functionals.hpp"
#include "starb/schwarz.hpp"
#include "starb/series.hpp"
#include "starb/verifier.hpp"

using namespace starb;

namespace {

int g_subfails = 0;

void sub(bool ok, const std::string& what) {
    std::printf("  [%s] %s\n", ok ? "PASS" : "FAIL", what.c_str());
    if (!ok) ++g_subfails;
}

void sub_value(bool ok, const std::string& what, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    sub(ok, what + " (= " + buf + ")");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string run_and_capture(const std::string& cmd, int& exit_code) {
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return {};
    }
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

// Parses the csv "n,re,im" coefficient listing emitted by the CLI.
std::vector<cd> parse_coeff_csv(const std::string& text) {
    std::vector<cd> out;
    std::size_t pos = text.find('\n');
    while (pos != std::string::npos && pos + 1 < text.size()) {
        const std::size_t end = text.find('\n', pos + 1);
        const std::string line = text.substr(pos + 1, end - pos - 1);
        pos = end;
        if (line.empty()) continue;
        const std::size_t c1 = line.find(',');
        const std::size_t c2 = line.find(',', c1 + 1);
        out.emplace_back(std::stod(line.substr(c1 + 1, c2 - c1 - 1)),
                         std::stod(line.substr(c2 + 1)));
    }
    return out;
}

cd random_disk_point(std::mt19937_64& rng, double rmax = 1.0) {
    std::uniform_real_distribution<double> r(0.0, 1.0);
    std::uniform_real_distribution<double> a(0.0, 2.0 * 3.14159265358979323846);
    return std::polar(rmax * std::sqrt(r(rng)), a(rng));
}

// --------------------------------------------------------------------------
// 1. Extremal series reproduction through the CLI.
// --------------------------------------------------------------------------
bool criterion1() {
    const char* cli = std::getenv("STARB_CLI");
    if (!cli) {
        sub(false, "STARB_CLI environment variable must point at the CLI binary");
        return false;
    }
    const auto t0 = std::chrono::steady_clock::now();
    int rc = 0;

    const std::vector<cd> f1 =
        parse_coeff_csv(run_and_capture(std::string(cli) + " extremal f1 --order 8 --format csv", rc));
    sub(rc == 0 && f1.size() == 8, "f1 listing produced 8 coefficients");
    const std::vector<cd> f1_want = {cd{1}, cd{1}, cd{0.75}, cd{19.0 / 36.0},
                                     cd{101.0 / 288.0}};
    bool ok1 = true;
    for (std::size_t k = 0; k < f1_want.size() && k < f1.size(); ++k) {
        ok1 = ok1 && std::abs(f1[k] - f1_want[k]) <= 1e-12;
    }
    sub(ok1, "f1 coefficients match 1, 1, 3/4, 19/36, 101/288 to 1e-12");

    const std::vector<cd> f2 =
        parse_coeff_csv(run_and_capture(std::string(cli) + " extremal f2 --order 8 --format csv", rc));
    const std::vector<cd> f2_want = {cd{1}, cd{0}, cd{0.5}, cd{0}, cd{0.25},
                                     cd{0}, cd{5.0 / 36.0}, cd{0}};
    bool ok2 = rc == 0 && f2.size() == 8;
    for (std::size_t k = 0; k < f2_want.size() && k < f2.size(); ++k) {
        ok2 = ok2 && std::abs(f2[k] - f2_want[k]) <= 1e-12;
    }
    sub(ok2, "f2 coefficients match the alternating-zero set 1/2, 1/4, 5/36 to 1e-12");

    const std::vector<cd> f3 =
        parse_coeff_csv(run_and_capture(std::string(cli) + " extremal f3 --order 8 --format csv", rc));
    const std::vector<cd> f3_want = {cd{1}, cd{0, 1}, cd{-0.75, 0},
                                     cd{0, -19.0 / 36.0}, cd{101.0 / 288.0, 0}};
    bool ok3 = rc == 0 && f3.size() == 8;
    for (std::size_t k = 0; k < f3_want.size() && k < f3.size(); ++k) {
        ok3 = ok3 && std::abs(f3[k] - f3_want[k]) <= 1e-12;
    }
    sub(ok3, "f3 coefficients match the i-rotated set to 1e-12");

    const double dt = seconds_since(t0);
    sub_value(dt < 1.0, "runtime < 1 s", dt);
    return g_subfails == 0;
}

// --------------------------------------------------------------------------
// 2. Coefficient-bound certification at the default grid.
// --------------------------------------------------------------------------
bool criterion2() {
    const auto t0 = std::chrono::steady_clock::now();
    const SweepConfig cfg;
    const auto checks = audit_initial_coefficients(cfg);
    for (const auto& c : checks) {
        const double b = c.bound.decimal;
        sub(c.observed_sup <= b + 1e-8,
            "|" + c.name + "| sweep never exceeds " + std::to_string(b));
        if (c.name != "a5") {
            sub_value(c.observed_sup >= b - 1e-3,
                      "|" + c.name + "| observed sup within 1e-3 of the bound",
                      c.observed_sup);
        }
        sub(std::abs(c.attained_value - b) <= 1e-10,
            "|" + c.name + "| attained at " + c.extremal + " to 1e-10");
        sub(c.verdict == Verdict::Certified, c.name + " verdict: certified");
    }
    const double dt = seconds_since(t0);
    sub_value(dt < 30.0, "runtime < 30 s", dt);
    return g_subfails == 0;
}

// --------------------------------------------------------------------------
// 3. Determinant bounds: ten sharp values plus the log-coefficient triple.
// --------------------------------------------------------------------------
bool criterion3() {
    const auto t0 = std::chrono::steady_clock::now();
    const SweepConfig cfg;
    std::vector<BoundCheck> checks = audit_determinants(cfg);
    for (auto& c : audit_log_coefficients(cfg)) checks.push_back(std::move(c));
    for (const auto& c : checks) {
        const double b = c.bound.decimal;
        const bool sound = c.observed_sup <= b + 1e-8;
        const bool attained = std::abs(c.attained_value - b) <= 1e-10;
        sub_value(sound, c.name + ": sup <= " + std::to_string(b) + " + 1e-8",
                  c.observed_sup);
        sub_value(attained, c.name + ": attained at " + c.extremal + " to 1e-10",
                  c.attained_value);
    }
    const double dt = seconds_since(t0);
    sub_value(dt < 120.0, "runtime < 2 min", dt);
    return g_subfails == 0;
}

// --------------------------------------------------------------------------
// 4. Disk-maximum lemma: closed form vs grid oracle, plus seam continuity.
// --------------------------------------------------------------------------
bool criterion4() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20260809);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    double worst_overshoot = 0.0; // oracle above exact (should stay ~0)
    double worst_gap = 0.0;       // exact above oracle
    for (int k = 0; k < 1000; ++k) {
        const YInput in{u(rng), u(rng), u(rng)};
        const double exact = y_exact(in).value;
        const double oracle = y_oracle(in, 2000);
        worst_overshoot = std::max(worst_overshoot, oracle - exact);
        worst_gap = std::max(worst_gap, exact - oracle);
    }
    sub_value(worst_overshoot <= 1e-12, "y_exact >= y_oracle(2000) on 1e3 random triples",
              worst_overshoot);
    sub_value(worst_gap <= 1e-3, "max gap <= 1e-3", worst_gap);

    std::uniform_real_distribution<double> v(0.05, 3.0);
    double worst_jump = 0.0;
    const double delta = 5e-9;
    for (int k = 0; k < 200; ++k) {
        const double c1 = std::min(v(rng) / 3.0, 0.999);
        const double a1 = v(rng);
        const double b1 = 2.0 * (1.0 - c1);
        worst_jump = std::max(worst_jump, std::abs(y_exact({a1, b1 - delta, c1}).value -
                                                   y_exact({a1, b1 + delta, c1}).value));
        const double c2 = std::min(v(rng) / 3.0, 0.95) + 1e-3;
        const double a2 = v(rng);
        const double b2 = std::sqrt(std::max(4.0 * a2 * c2 * (1.0 / (c2 * c2) - 1.0), 0.0));
        worst_jump = std::max(worst_jump, std::abs(y_exact({a2, b2 - delta, -c2}).value -
                                                   y_exact({a2, b2 + delta, -c2}).value));
        const double c3 = v(rng) / 4.0;
        const double a3 = c3 + v(rng);
        const double b3 = 4.0 * a3 * c3 / (a3 - c3 + 1e-12);
        worst_jump = std::max(worst_jump, std::abs(y_exact({a3, b3 - delta, -c3}).value -
                                                   y_exact({a3, b3 + delta, -c3}).value));
    }
    sub_value(worst_jump < 1e-6, "seam continuity: jumps < 1e-6 over 600 straddling pairs",
              worst_jump);

    const double dt = seconds_since(t0);
    sub_value(dt < 60.0, "runtime < 1 min", dt);
    return g_subfails == 0;
}

// --------------------------------------------------------------------------
// 5. Proof-scalar audits and envelope maxima.
// --------------------------------------------------------------------------
bool criterion5() {
    const ScalarAuditReport rep = audit_case_scalars(10000);
    sub(rep.log.t1_positive && rep.log.t3_positive, "log case: T1 > 0 and T3 > 0 on the grid");
    sub(rep.log.t2_nonpositive, "log case: T2 <= 0");
    sub(rep.log.t4_negative && rep.log.t5_negative, "log case: T4 < 0 and T5 < 0");
    sub(rep.invlog.t1_positive && rep.invlog.t3_positive,
        "invlog case: T1 > 0 and T3 > 0");
    sub(rep.invlog.t2_nonpositive, "invlog case: T2 <= 0");
    sub(rep.invlog.t4_negative && rep.invlog.t5_negative,
        "invlog case: T4 < 0 and T5 < 0");
    sub(rep.log.t6_sign_change_matches && rep.invlog.t6_sign_change_matches,
        "T6 <= 0 exactly on (0, zeta'] for both cases");
    sub(rep.h22_case_ok, "H22 case: AC >= 0 and |B| >= 2(1 - |C|)");
    sub_value(std::abs(rep.log.t6_root - rep.log.zeta_prime) <= 1e-6,
              "log T6 zero within 1e-6 of the printed zeta' (residual " +
                  std::to_string(rep.log.t6_residual_at_prime) + ")",
              rep.log.t6_root);
    sub_value(std::abs(rep.invlog.t6_root - rep.invlog.zeta_prime) <= 1e-6,
              "invlog T6 zero within 1e-6 of the printed zeta' (residual " +
                  std::to_string(rep.invlog.t6_residual_at_prime) + ")",
              rep.invlog.t6_root);

    const EnvelopeReport env = audit_envelopes();
    sub_value(std::abs(env.log_max - 1.0 / 16.0) <= 1e-6, "log envelope max = 1/16",
              env.log_max);
    sub_value(std::abs(env.invlog_max - 31.0 / 460.0) <= 1e-6,
              "invlog envelope max = 31/460", env.invlog_max);
    sub_value(std::abs(env.phi2_log_max - 0.0516512) <= 1e-6,
              "sqrt-branch (log) max = 0.0516512", env.phi2_log_max);
    sub_value(std::abs(env.phi2_invlog_max - 43.0 / 576.0) <= 1e-6,
              "sqrt-branch (invlog) max = 43/576", env.phi2_invlog_max);
    return g_subfails == 0;
}

// --------------------------------------------------------------------------
// 6. M surface.
// --------------------------------------------------------------------------
bool criterion6() {
    const MSurfaceReport rep = audit_m_surface(2000);
    sub_value(std::abs(rep.max_value - 1090.0) <= 1e-6,
              "max over the region equals 1090 within 1e-6", rep.max_value);
    sub(rep.argmax_x == 1.0 && rep.argmax_y == 0.0,
        "maximum attained at (x, y) = (1, 0); located (" + std::to_string(rep.argmax_x) +
            ", " + std::to_string(rep.argmax_y) + ")");
    sub_value(std::abs(rep.edge_x_printed_max - 1090.0) <= 1e-6,
              "printed x-axis restriction max = 1090", rep.edge_x_printed_max);
    sub_value(std::abs(rep.edge_y_printed_max - 342.0) <= 1e-6,
              "printed y-axis restriction max = 342", rep.edge_y_printed_max);
    for (const auto& n : rep.notes) std::printf("  note: %s\n", n.c_str());
    return g_subfails == 0;
}

// --------------------------------------------------------------------------
// 7. Series-engine property suite.
// --------------------------------------------------------------------------
bool criterion7() {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    auto random_series = [&](int order, double radius, bool unit) {
        std::vector<cd> c(static_cast<std::size_t>(order) + 1);
        for (auto& v : c) v = cd{u(rng) * radius / 2.0, u(rng) * radius / 2.0};
        if (unit) c[0] = cd{1.0} + 0.2 * c[0];
        return PowerSeries(std::move(c));
    };

    double ring_err = 0.0;
    for (int k = 0; k < 300; ++k) {
        const PowerSeries a = random_series(10, 2.0, false);
        const PowerSeries b = random_series(10, 2.0, false);
        const PowerSeries c = random_series(10, 2.0, false);
        ring_err = std::max(ring_err, max_coeff_dist(mul(a, b), mul(b, a)));
        ring_err = std::max(ring_err, max_coeff_dist(mul(mul(a, b), c), mul(a, mul(b, c))));
        ring_err = std::max(ring_err,
                            max_coeff_dist(mul(a, add(b, c)), add(mul(a, b), mul(a, c))));
    }
    sub_value(ring_err < 1e-10, "ring axioms on random inputs", ring_err);

    double explog_err = 0.0;
    for (int k = 0; k < 300; ++k) {
        const PowerSeries a = random_series(12, 0.5, true);
        explog_err = std::max(explog_err, max_coeff_dist(exp(log(a)), a));
    }
    sub_value(explog_err < 1e-10, "exp/log inverse pair", explog_err);

    // Moderate coefficients keep the reversion well conditioned at order 16.
    double revert_err = 0.0;
    for (int k = 0; k < 100; ++k) {
        std::vector<cd> c(17, cd{});
        c[1] = cd{1.0};
        for (int j = 2; j <= 16; ++j) {
            c[static_cast<std::size_t>(j)] = 0.125 * cd{u(rng), u(rng)};
        }
        const PowerSeries f(std::move(c));
        revert_err =
            std::max(revert_err, max_coeff_dist(compose(f, revert(f)), PowerSeries::identity(16)));
    }
    sub_value(revert_err < 1e-10, "revert round-trip at order 16", revert_err);

    double gamma_err = 0.0;
    double member_revert_err = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const auto b = prefix_from_schur(random_disk_point(rng, 0.9), random_disk_point(rng, 0.9),
                                         random_disk_point(rng, 0.9), random_disk_point(rng, 0.9));
        std::vector<cd> w(11, cd{});
        for (std::size_t j = 0; j < 4; ++j) w[j + 1] = b[j];
        const ClassMember m = member_from_schwarz(PowerSeries(std::move(w)), 10);
        const CoefficientSet c = coefficient_set(m);
        const PowerSeries lg = log(shift_down(m.f));
        gamma_err = std::max(gamma_err, std::abs(0.5 * lg.c(1) - c.gamma1));
        gamma_err = std::max(gamma_err, std::abs(0.5 * lg.c(2) - c.gamma2));
        gamma_err = std::max(gamma_err, std::abs(0.5 * lg.c(3) - c.gamma3));
        const PowerSeries inv = revert(m.f);
        member_revert_err = std::max(
            member_revert_err,
            max_coeff_dist(compose(m.f, inv), PowerSeries::identity(m.f.order())));
        const PowerSeries ilg = log(shift_down(inv));
        gamma_err = std::max(gamma_err, std::abs(0.5 * ilg.c(1) - c.inv_gamma1));
        gamma_err = std::max(gamma_err, std::abs(0.5 * ilg.c(2) - c.inv_gamma2));
        gamma_err = std::max(gamma_err, std::abs(0.5 * ilg.c(3) - c.inv_gamma3));
    }
    sub_value(member_revert_err < 1e-10, "revert round-trip on 1e3 class members",
              member_revert_err);
    sub_value(gamma_err < 1e-10,
              "log-coefficient closed forms vs series definitions on 1e3 members",
              gamma_err);
    return g_subfails == 0;
}

// --------------------------------------------------------------------------
// 8. Geometry.
// --------------------------------------------------------------------------
bool criterion8() {
    const GeometryReport rep = audit_geometry(4096);
    sub_value(rep.max_boundary_defect <= 1e-10,
              "boundary samples satisfy |exp(1-1/w)-1| = 1 within 1e-10",
              rep.max_boundary_defect);
    sub_value(rep.tip_error_vs_printed <= 1e-4, "tip matches 3.2589 within 1e-4",
              rep.tip_error_vs_printed);
    sub(rep.conj_symmetry_error == 0.0, "conjugate symmetry exact");
    sub_value(rep.starlike.starlike, "starlikeness probe passes at 4096 samples",
              rep.starlike.min_increment);
    sub_value(rep.leftmost_deviation_vs_quoted < 1e-2,
              "located leftmost point within 1e-2 of the quoted (-0.181, +-0.678)",
              rep.leftmost_deviation_vs_quoted);
    std::printf("  located leftmost sample: (%.7g, %.7g)\n", rep.leftmost_re,
                rep.leftmost_im);
    for (const auto& n : rep.notes) std::printf("  note: %s\n", n.c_str());
    return g_subfails == 0;
}

} // namespace

int main(int argc, char** argv) {
    int which = 0;
    for (int i = 1; i + 1 < argc + 1; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            which = std::atoi(argv[i + 1]);
        }
    }
    using Fn = bool (*)();
    const Fn criteria[] = {criterion1, criterion2, criterion3, criterion4,
                           criterion5, criterion6, criterion7, criterion8};
    int failed = 0;
    for (int n = 1; n <= 8; ++n) {
        if (which != 0 && which != n) continue;
        g_subfails = 0;
        std::printf("criterion %d:\n", n);
        const auto t0 = std::chrono::steady_clock::now();
        const bool ok = criteria[n - 1]();
        std::printf("[%s] criterion %d (%.2f s)\n", ok ? "PASS" : "FAIL", n,
                    seconds_since(t0));
        if (!ok) ++failed;
    }
    return failed;
}
