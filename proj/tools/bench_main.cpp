#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "starb/choi.hpp"
#include "starb/verifier.hpp"

using namespace starb;

namespace {

template <class F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int oracle_grid = 1200;
    if (argc > 1) oracle_grid = std::stoi(argv[1]);

    std::printf("disk-maximum oracle, grid %d (%d x %d points)\n", oracle_grid,
                oracle_grid, 4 * oracle_grid);
    const YInput in{1.3, -0.7, 2.1};
    double v_kernel = 0.0, v_serial = 0.0;
    const double t_kernel = time_ms([&] { v_kernel = y_oracle(in, oracle_grid); });
    const double t_serial = time_ms([&] { v_serial = y_oracle_serial(in, oracle_grid); });
    std::printf("  kernel  %10.2f ms  value %.15g\n", t_kernel, v_kernel);
    std::printf("  serial  %10.2f ms  value %.15g\n", t_serial, v_serial);
    std::printf("  speedup %10.2fx  |diff| %.3g\n\n", t_serial / t_kernel,
                std::fabs(v_kernel - v_serial));

    SweepConfig cfg;
    cfg.zeta1_points = 17;
    cfg.radial_points = 12;
    cfg.angular_points = 32;
    std::printf("determinant sweeps, zeta1 %d x polar %dx%d (minor %dx%d)\n",
                cfg.zeta1_points, cfg.radial_points, cfg.angular_points,
                cfg.minor_radial, cfg.minor_angular);
    cfg.mode = ExecMode::Parallel;
    double sup_par = 0.0, sup_ser = 0.0;
    const double t_par = time_ms([&] {
        for (const auto& c : audit_determinants(cfg)) sup_par += c.observed_sup;
    });
    cfg.mode = ExecMode::Serial;
    const double t_ser = time_ms([&] {
        for (const auto& c : audit_determinants(cfg)) sup_ser += c.observed_sup;
    });
    std::printf("  parallel %9.2f ms\n", t_par);
    std::printf("  serial   %9.2f ms\n", t_ser);
    std::printf("  speedup  %9.2fx  |diff| %.3g\n\n", t_ser / t_par,
                std::fabs(sup_par - sup_ser));

    std::printf("M-surface audit, grid 1500\n");
    double m_par = 0.0, m_ser = 0.0;
    const double tm_par =
        time_ms([&] { m_par = audit_m_surface(1500, ExecMode::Parallel).max_value; });
    const double tm_ser =
        time_ms([&] { m_ser = audit_m_surface(1500, ExecMode::Serial).max_value; });
    std::printf("  parallel %9.2f ms  max %.10g\n", tm_par, m_par);
    std::printf("  serial   %9.2f ms  max %.10g\n", tm_ser, m_ser);
    std::printf("  speedup  %9.2fx  |diff| %.3g\n", tm_ser / tm_par,
                std::fabs(m_par - m_ser));
    return 0;
}
