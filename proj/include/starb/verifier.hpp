#pragma once

#include <string>
#include <vector>

#include "starb/balloon.hpp"
#include "starb/choi.hpp"
#include "starb/functionals.hpp"
#include "starb/sweep.hpp"

namespace starb {

/// Exact rational bound plus its decimal value. `exact` is false for bounds
/// that are not ratios of small integers (e.g. Fekete-Szego at irrational mu).
struct Rational {
    long long num = 0;
    long long den = 1;
    bool exact = true;
    double decimal = 0.0;

    static Rational of(long long n, long long d) {
        return Rational{n, d, true, static_cast<double>(n) / static_cast<double>(d)};
    }
    static Rational approx(double v) { return Rational{0, 1, false, v}; }
};

struct SweepConfig {
    int zeta1_points = 33;   ///< real-axis grid on [0, 1]
    int radial_points = 24;  ///< primary polar axis (zeta2 / b1 / g0)
    int angular_points = 64;
    int minor_radial = 6;    ///< secondary polar axes (zeta3, b2, b3)
    int minor_angular = 16;
    int schur_radial = 3;    ///< per-axis grids of the fourth-coefficient sweep
    int schur_angular = 8;
    double tol_upper = 1e-8;
    double tol_sharp = 1e-3;
    int order = 12;          ///< series truncation for extreme-member evaluation
    ExecMode mode = ExecMode::Parallel;
};

enum class Verdict { Certified, Violated, NotAttained };
std::string to_string(Verdict v);

/// One functional's certification record.
struct BoundCheck {
    std::string name;
    Rational bound;
    double observed_sup = 0.0;
    std::string argmax;
    std::string extremal;          ///< designated extreme member
    double attained_value = 0.0;   ///< |functional| at that member
    Verdict verdict = Verdict::NotAttained;

    bool certified() const { return verdict == Verdict::Certified; }
};

/// Sweeps for the initial coefficients |a2|, |a3|, |a4| (parameter route)
/// and |a5| (feasible fourth-coefficient route).
std::vector<BoundCheck> audit_initial_coefficients(const SweepConfig& cfg);

/// |gamma1| <= 1/2, |gamma2| <= 1/4, |gamma3| <= 1/8.
std::vector<BoundCheck> audit_log_coefficients(const SweepConfig& cfg);

/// Fekete-Szego |a3 - mu a2^2| against (1/2) max{1, |mu - 3/4|} per mu.
std::vector<BoundCheck> audit_fekete_szego(const std::vector<cd>& mu_grid,
                                           const SweepConfig& cfg);

/// The nine determinant bounds: H21, H22, H21_log, H21_invlog over the
/// parameter route; T21, T22, T23, T21_log, T21_invlog over the
/// Schwarz-prefix route.
std::vector<BoundCheck> audit_determinants(const SweepConfig& cfg);

/// Runs the owning family sweep and returns the single named check.
/// Known names: a2 a3 a4 a5 gamma1 gamma2 gamma3 H21 H22 H21_log H21_invlog
/// T21 T22 T23 T21_log T21_invlog.
BoundCheck sweep_bound(const std::string& name, const SweepConfig& cfg);

struct EnvelopeReport {
    double h22_max = 0.0, h22_argmax = 0.0;          // sup 1/4 as zeta -> 0
    double log_max = 0.0, log_argmax = 0.0;          // 1/16 at 0
    double invlog_max = 0.0, invlog_argmax = 0.0;    // 31/460 interior
    double phi2_log_max = 0.0, phi2_log_argmax = 0.0;       // 0.0516512 at zeta'
    double phi2_invlog_max = 0.0, phi2_invlog_argmax = 0.0; // 43/576 at 1
    std::vector<std::string> notes;
};
EnvelopeReport audit_envelopes(int grid = 20001);

struct ScalarAudit {
    bool t1_positive = true;
    bool t2_nonpositive = true;
    bool t3_positive = true;
    bool t4_negative = true;
    bool t5_negative = true;
    bool t6_sign_change_matches = true; ///< t6 <= 0 exactly on (0, zeta']
    double zeta_prime = 0.0;            ///< closed form
    double t6_root = 0.0;               ///< located by bisection
    double t6_residual_at_prime = 0.0;  ///< |t6(zeta')|
    bool ok() const {
        return t1_positive && t2_nonpositive && t3_positive && t4_negative &&
               t5_negative && t6_sign_change_matches;
    }
};

struct ScalarAuditReport {
    ScalarAudit log;
    ScalarAudit invlog;
    bool h22_case_ok = true; ///< AC >= 0 and |B| >= 2(1 - |C|) on the grid
    bool ok() const { return log.ok() && invlog.ok() && h22_case_ok; }
};
ScalarAuditReport audit_case_scalars(int grid = 10000);

struct MSurfaceReport {
    double max_value = 0.0;  ///< full surface over the region; 1090 at (1,0)
    double argmax_x = 0.0;
    double argmax_y = 0.0;
    double corner_value = 0.0;       ///< M(1, 0)
    double edge_x_printed_max = 0.0; ///< printed x-axis restriction; 1090
    double edge_y_printed_max = 0.0; ///< printed y-axis restriction; 342
    double edge_y_full_max = 0.0;    ///< x = 0 restriction of the full surface
    std::vector<std::string> notes;
};
/// Evaluates M(x, y) over {0 <= x <= 1, 0 <= y <= 1 - x^2}.
MSurfaceReport audit_m_surface(int grid = 1000, ExecMode mode = ExecMode::Parallel);

/// The full surface M(x,y) of the T23 estimate and its printed boundary
/// restrictions.
double m_surface(double x, double y);
double m_surface_edge_x_printed(double x); // 361x^6+729x^4-456x^5+456x^3+144(1-x^2)^2
double m_surface_edge_y_printed(double y); // 144y^4+54y^2+144

struct GeometryReport {
    int samples = 0;
    double max_boundary_defect = 0.0;  ///< max | |exp(1-1/w)-1| - 1 |
    double tip_error_vs_printed = 0.0; ///< |Re w(0) - 3.2589|
    double conj_symmetry_error = 0.0;  ///< max |w(-t) - conj(w(t))|
    StarlikeReport starlike;
    double leftmost_re = 0.0;
    double leftmost_im = 0.0;
    /// Distance from the located leftmost point to the quoted (-0.181, +-0.678).
    double leftmost_deviation_vs_quoted = 0.0;
    std::vector<std::string> notes;
};
GeometryReport audit_geometry(int samples = 4096);

struct RotationCheck {
    std::string name;
    double real_axis_sup = 0.0;
    double complex_sup = 0.0;
    bool ok = true; ///< complex grid never beats the real-axis sweep
};
/// Coarse complex-zeta1 sweep against the rotation-reduced sweep for the
/// rotation-invariant functionals H22, H21_log, H21_invlog.
std::vector<RotationCheck> rotation_spot_check(const SweepConfig& cfg);

struct Report {
    SweepConfig config;
    std::vector<cd> mu_grid;
    std::vector<BoundCheck> checks;
    EnvelopeReport envelopes;
    ScalarAuditReport scalars;
    MSurfaceReport msurface;
    GeometryReport geometry;
    std::vector<RotationCheck> rotation;
    std::vector<std::string> notes;

    bool all_certified() const;
};

/// Default mu grid for the Fekete-Szego section: values where the printed
/// bound 1/2 is sharp (attained by the two-fold symmetric member).
std::vector<cd> default_mu_grid();

/// Runs every audit. An empty mu grid omits the Fekete-Szego section.
Report full_report(const SweepConfig& cfg,
                   const std::vector<cd>& mu_grid = default_mu_grid());

} // namespace starb
