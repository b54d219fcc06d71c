#include "starb/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "starb/format.hpp"
#include "starb/schwarz.hpp"

namespace starb {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "certified";
        case Verdict::Violated: return "violated";
        case Verdict::NotAttained: return "not-attained";
    }
    return "?";
}

namespace {

constexpr double kAttainTolerance = 1e-10;

double real_axis_point(const SweepConfig& cfg, std::uint64_t i) {
    return static_cast<double>(i) / static_cast<double>(cfg.zeta1_points - 1);
}

// ---------------------------------------------------------------------------
// Parameter-route pass: zeta1 in [0,1] x zeta2 polar x zeta3 polar.
// Tracked squared moduli:
//   0 |a2|  1 |a3|  2 |a4|  3 |g1|  4 |g2|  5 |g3|
//   6 |H21| 7 |H22| 8 |H21_log| 9 |H21_invlog|
// ---------------------------------------------------------------------------

struct PRoutePass {
    std::array<MaxLoc, 10> best{};
    PolarGrid g2;
    PolarGrid g3;
    std::uint64_t inner = 0;
};

PRoutePass run_p_route(const SweepConfig& cfg) {
    PRoutePass pass;
    pass.g2 = PolarGrid{cfg.radial_points, cfg.angular_points};
    pass.g3 = PolarGrid{cfg.minor_radial, cfg.minor_angular};
    const std::uint64_t p2 = pass.g2.size();
    const std::uint64_t p3 = pass.g3.size();
    pass.inner = p3;
    const std::uint64_t outer = static_cast<std::uint64_t>(cfg.zeta1_points) * p2;

    const PolarGrid g2 = pass.g2;
    const PolarGrid g3 = pass.g3;
    pass.best = grid_max<10>(
        outer, p3,
        [&, g2, g3](std::uint64_t o) {
            const std::uint64_t i1 = o / g2.size();
            const std::uint64_t i2 = o % g2.size();
            const double z1 = real_axis_point(cfg, i1);
            const cd zeta2 = g2.point(i2);
            const double p1 = 2.0 * z1;
            const double r1 = 1.0 - z1 * z1;
            const cd p2c = cd{2.0 * z1 * z1, 0.0} + 2.0 * r1 * zeta2;
            const cd p3base = cd{2.0 * z1 * z1 * z1, 0.0} +
                              4.0 * r1 * z1 * zeta2 - 2.0 * r1 * z1 * zeta2 * zeta2;
            const double p3coef = 2.0 * r1 * (1.0 - std::norm(zeta2));
            const double a2 = 0.5 * p1;
            const cd a3 = (cd{p1 * p1, 0.0} + 4.0 * p2c) / 16.0;
            const cd a4base = (cd{p1 * p1 * p1, 0.0} + 12.0 * p1 * p2c) / 288.0;
            const cd g3base = (cd{p1 * p1 * p1, 0.0} - 6.0 * p1 * p2c) / 144.0;
            const double gamma1 = 0.5 * a2;
            const cd gamma2 = 0.5 * (a3 - cd{0.5 * a2 * a2, 0.0});
            const cd a3sq = a3 * a3;
            const double a2sq = a2 * a2;
            const double a2p4 = a2sq * a2sq;
            const cd h21 = a3 - cd{a2sq, 0.0};
            const cd invbase = (cd{13.0 * a2p4, 0.0} - 12.0 * a2sq * a3 - 12.0 * a3sq) / 48.0;
            return [=](std::uint64_t i, std::array<double, 10>& vals) {
                const cd zeta3 = g3.point(i);
                const cd p3v = p3base + p3coef * zeta3;
                const cd a4 = a4base + p3v / 6.0;
                const cd gamma3 = g3base + p3v / 12.0;
                const cd a2a4 = a2 * a4;
                const cd h22 = a2a4 - a3sq;
                vals[2] = std::norm(a4);
                vals[5] = std::norm(gamma3);
                vals[7] = std::norm(h22);
                vals[8] = std::norm(0.25 * (h22 + cd{a2p4 / 12.0, 0.0}));
                vals[9] = std::norm(invbase + 0.25 * a2a4);
                if (i == 0) {
                    vals[0] = a2sq;
                    vals[1] = std::norm(a3);
                    vals[3] = gamma1 * gamma1;
                    vals[4] = std::norm(gamma2);
                    vals[6] = std::norm(h21);
                }
            };
        },
        cfg.mode);
    return pass;
}

std::string p_route_argmax(const SweepConfig& cfg, const PRoutePass& pass,
                           std::uint64_t idx) {
    const std::uint64_t i3 = idx % pass.inner;
    const std::uint64_t o = idx / pass.inner;
    const std::uint64_t i1 = o / pass.g2.size();
    const std::uint64_t i2 = o % pass.g2.size();
    return "zeta1=" + fmt17(real_axis_point(cfg, i1)) +
           ";zeta2=" + fmt_complex(pass.g2.point(i2)) +
           ";zeta3=" + fmt_complex(pass.g3.point(i3));
}

// ---------------------------------------------------------------------------
// Fekete-Szego pass for one mu: zeta3 plays no role.
// ---------------------------------------------------------------------------

struct FsPass {
    MaxLoc best{};
    PolarGrid g2;
};

FsPass run_fs(const SweepConfig& cfg, cd mu) {
    FsPass pass;
    pass.g2 = PolarGrid{cfg.radial_points, cfg.angular_points};
    const PolarGrid g2 = pass.g2;
    const std::uint64_t outer = static_cast<std::uint64_t>(cfg.zeta1_points) * g2.size();
    const auto best = grid_max<1>(
        outer, 1,
        [&, g2, mu](std::uint64_t o) {
            const std::uint64_t i1 = o / g2.size();
            const std::uint64_t i2 = o % g2.size();
            const double z1 = real_axis_point(cfg, i1);
            const cd zeta2 = g2.point(i2);
            const double p1 = 2.0 * z1;
            const cd p2c = cd{2.0 * z1 * z1, 0.0} + 2.0 * (1.0 - z1 * z1) * zeta2;
            const double a2 = 0.5 * p1;
            const cd a3 = (cd{p1 * p1, 0.0} + 4.0 * p2c) / 16.0;
            const cd value = a3 - mu * (a2 * a2);
            return [=](std::uint64_t, std::array<double, 1>& vals) {
                vals[0] = std::norm(value);
            };
        },
        cfg.mode);
    pass.best = best[0];
    return pass;
}

std::string fs_argmax(const SweepConfig& cfg, const FsPass& pass, std::uint64_t idx) {
    const std::uint64_t i1 = idx / pass.g2.size();
    const std::uint64_t i2 = idx % pass.g2.size();
    return "zeta1=" + fmt17(real_axis_point(cfg, i1)) +
           ";zeta2=" + fmt_complex(pass.g2.point(i2));
}

// ---------------------------------------------------------------------------
// Schwarz-prefix route for the functionals of (b1, b2) only. The feasible
// set of b2 given b1 is the full disk |b2| <= 1 - |b1|^2, so this grid is
// exact. Tracked squared moduli: 0 T21  1 T22  2 T21_log  3 T21_invlog
// ---------------------------------------------------------------------------

struct BRoutePass {
    std::array<MaxLoc, 4> best{};
    PolarGrid g1;
    PolarGrid g2;
    std::uint64_t inner = 0;
};

BRoutePass run_b_route(const SweepConfig& cfg) {
    BRoutePass pass;
    pass.g1 = PolarGrid{cfg.radial_points, cfg.angular_points};
    pass.g2 = PolarGrid{cfg.minor_radial, cfg.minor_angular};
    const PolarGrid g1 = pass.g1;
    const PolarGrid g2 = pass.g2;
    pass.inner = g2.size();
    pass.best = grid_max<4>(
        g1.size(), g2.size(),
        [=](std::uint64_t i1) {
            const cd b1 = g1.point(i1);
            const double scale2 = std::max(0.0, 1.0 - std::norm(b1));
            const cd b1sq = b1 * b1;
            return [=](std::uint64_t i, std::array<double, 4>& vals) {
                const cd b2 = g2.point(i, scale2);
                const cd a3 = 0.75 * b1sq + 0.5 * b2;
                vals[0] = std::norm(cd{1.0, 0.0} - b1sq);
                vals[1] = std::norm(b1sq - a3 * a3);
                const cd g1v = 0.5 * b1;
                const cd g2v = 0.5 * (a3 - 0.5 * b1sq);
                vals[2] = std::norm(g1v * g1v - g2v * g2v);
                const cd ig2v = -0.5 * (a3 - 1.5 * b1sq);
                vals[3] = std::norm(0.25 * b1sq - ig2v * ig2v);
            };
        },
        cfg.mode);
    return pass;
}

std::string b_route_argmax(const BRoutePass& pass, std::uint64_t idx) {
    const std::uint64_t i2 = idx % pass.inner;
    const std::uint64_t i1 = idx / pass.inner;
    const cd b1 = pass.g1.point(i1);
    const double scale2 = std::max(0.0, 1.0 - std::norm(b1));
    return "b1=" + fmt_complex(b1) + ";b2=" + fmt_complex(pass.g2.point(i2, scale2));
}

// ---------------------------------------------------------------------------
// T23 needs b3 as well; the centered modulus bound on b3 admits infeasible
// phase combinations that overshoot the sharp bound, so this sweep runs over
// the exact prefix region parameterized by Schur parameters (g0, g1, g2).
// ---------------------------------------------------------------------------

struct T23Pass {
    MaxLoc best{};
    PolarGrid g0;
    PolarGrid gm;
    std::uint64_t inner = 0;
};

T23Pass run_t23(const SweepConfig& cfg) {
    T23Pass pass;
    pass.g0 = PolarGrid{cfg.radial_points, cfg.angular_points};
    pass.gm = PolarGrid{cfg.minor_radial, cfg.minor_angular};
    const PolarGrid g0 = pass.g0;
    const PolarGrid gm = pass.gm;
    pass.inner = gm.size();
    const auto best = grid_max<1>(
        g0.size() * gm.size(), gm.size(),
        [=](std::uint64_t o) {
            const cd p0 = g0.point(o / gm.size());
            const cd p1 = gm.point(o % gm.size());
            return [=](std::uint64_t i, std::array<double, 1>& vals) {
                const std::array<cd, 4> b = prefix_from_schur(p0, p1, gm.point(i), cd{});
                const cd a3 = 0.75 * b[0] * b[0] + 0.5 * b[1];
                const cd a4 = (19.0 / 36.0) * b[0] * b[0] * b[0] +
                              (5.0 / 6.0) * b[0] * b[1] + b[2] / 3.0;
                vals[0] = std::norm(a3 * a3 - a4 * a4);
            };
        },
        cfg.mode);
    pass.best = best[0];
    return pass;
}

std::string t23_argmax(const T23Pass& pass, std::uint64_t idx) {
    const std::uint64_t i2 = idx % pass.inner;
    const std::uint64_t o = idx / pass.inner;
    const std::uint64_t i1 = o % pass.gm.size();
    const std::uint64_t i0 = o / pass.gm.size();
    const std::array<cd, 4> b = prefix_from_schur(pass.g0.point(i0), pass.gm.point(i1),
                                                  pass.gm.point(i2), cd{});
    return "g0=" + fmt_complex(pass.g0.point(i0)) + ";g1=" + fmt_complex(pass.gm.point(i1)) +
           ";g2=" + fmt_complex(pass.gm.point(i2)) + ";b1=" + fmt_complex(b[0]) +
           ";b2=" + fmt_complex(b[1]) + ";b3=" + fmt_complex(b[2]);
}

// ---------------------------------------------------------------------------
// Fifth-coefficient sweep over the exact feasible prefix region, parameterized
// by Schur parameters (g0, g1, g2, g3) in the closed polydisk.
// ---------------------------------------------------------------------------

struct SchurPass {
    MaxLoc best{};
    PolarGrid g0;
    PolarGrid gm;
    std::uint64_t inner = 0;
};

SchurPass run_a5(const SweepConfig& cfg) {
    SchurPass pass;
    pass.g0 = PolarGrid{cfg.radial_points, cfg.angular_points};
    pass.gm = PolarGrid{cfg.schur_radial, cfg.schur_angular};
    const PolarGrid g0 = pass.g0;
    const PolarGrid gm = pass.gm;
    pass.inner = gm.size();
    const std::uint64_t outer = g0.size() * gm.size() * gm.size();
    const auto best = grid_max<1>(
        outer, gm.size(),
        [=](std::uint64_t o) {
            const std::uint64_t i0 = o / (gm.size() * gm.size());
            const std::uint64_t rem = o % (gm.size() * gm.size());
            const std::uint64_t i1 = rem / gm.size();
            const std::uint64_t i2 = rem % gm.size();
            const SchurPrefixSlice slice =
                schur_prefix_slice(g0.point(i0), gm.point(i1), gm.point(i2));
            const cd base = a5_from_b(slice.b1, slice.b2, slice.b3, cd{});
            return [=](std::uint64_t i, std::array<double, 1>& vals) {
                const cd a5 = base + 0.25 * slice.b4(gm.point(i));
                vals[0] = std::norm(a5);
            };
        },
        cfg.mode);
    pass.best = best[0];
    return pass;
}

std::string schur_argmax(const SchurPass& pass, std::uint64_t idx) {
    const std::uint64_t i3 = idx % pass.inner;
    std::uint64_t o = idx / pass.inner;
    const std::uint64_t i2 = o % pass.gm.size();
    o /= pass.gm.size();
    const std::uint64_t i1 = o % pass.gm.size();
    const std::uint64_t i0 = o / pass.gm.size();
    return "g0=" + fmt_complex(pass.g0.point(i0)) + ";g1=" + fmt_complex(pass.gm.point(i1)) +
           ";g2=" + fmt_complex(pass.gm.point(i2)) + ";g3=" + fmt_complex(pass.gm.point(i3));
}

// ---------------------------------------------------------------------------
// Check assembly.
// ---------------------------------------------------------------------------

struct ExtremalSets {
    CoefficientSet f1;
    CoefficientSet f2;
    CoefficientSet f3;

    const CoefficientSet& by_label(const std::string& label) const {
        if (label == "f1") return f1;
        if (label == "f2") return f2;
        return f3;
    }
};

ExtremalSets extremal_sets(const SweepConfig& cfg) {
    const int order = std::max(cfg.order, 8);
    return ExtremalSets{coefficient_set(extremal_member(1, order)),
                        coefficient_set(extremal_member(2, order)),
                        coefficient_set(extremal_member(3, order))};
}

double eval_named(const std::string& name, const CoefficientSet& c) {
    if (name == "a2") return std::abs(c.a2);
    if (name == "a3") return std::abs(c.a3);
    if (name == "a4") return std::abs(c.a4);
    if (name == "a5") return std::abs(c.a5);
    if (name == "gamma1") return std::abs(c.gamma1);
    if (name == "gamma2") return std::abs(c.gamma2);
    if (name == "gamma3") return std::abs(c.gamma3);
    if (name == "H21") return std::abs(fekete_szego(c, cd{1.0, 0.0}));
    if (name == "H22") return std::abs(hankel22(c));
    if (name == "H21_log") return std::abs(hankel21_log(c));
    if (name == "H21_invlog") return std::abs(hankel21_invlog(c));
    if (name == "T21") return std::abs(toeplitz_initial(c, 1));
    if (name == "T22") return std::abs(toeplitz_initial(c, 2));
    if (name == "T23") return std::abs(toeplitz_initial(c, 3));
    if (name == "T21_log") return std::abs(toeplitz_log(c));
    if (name == "T21_invlog") return std::abs(toeplitz_invlog(c));
    throw DomainError("unknown functional name: " + name);
}

BoundCheck make_check(const SweepConfig& cfg, const ExtremalSets& ext,
                      const std::string& name, Rational bound,
                      const std::string& extremal_label, double grid_sup_sq,
                      const std::string& argmax) {
    BoundCheck ch;
    ch.name = name;
    ch.bound = bound;
    ch.extremal = extremal_label;
    ch.attained_value = eval_named(name, ext.by_label(extremal_label));
    ch.observed_sup = std::sqrt(std::max(grid_sup_sq, 0.0));
    ch.argmax = argmax;
    const double b = bound.decimal;
    if (std::max(ch.observed_sup, ch.attained_value) > b + cfg.tol_upper) {
        ch.verdict = Verdict::Violated;
    } else if (ch.observed_sup < b - cfg.tol_sharp ||
               std::abs(ch.attained_value - b) > kAttainTolerance) {
        ch.verdict = Verdict::NotAttained;
    } else {
        ch.verdict = Verdict::Certified;
    }
    return ch;
}

} // namespace

std::vector<BoundCheck> audit_initial_coefficients(const SweepConfig& cfg) {
    const ExtremalSets ext = extremal_sets(cfg);
    const PRoutePass p = run_p_route(cfg);
    const SchurPass s = run_a5(cfg);
    std::vector<BoundCheck> out;
    out.push_back(make_check(cfg, ext, "a2", Rational::of(1, 1), "f1", p.best[0].value,
                             p_route_argmax(cfg, p, p.best[0].index)));
    out.push_back(make_check(cfg, ext, "a3", Rational::of(3, 4), "f1", p.best[1].value,
                             p_route_argmax(cfg, p, p.best[1].index)));
    out.push_back(make_check(cfg, ext, "a4", Rational::of(19, 36), "f1", p.best[2].value,
                             p_route_argmax(cfg, p, p.best[2].index)));
    out.push_back(make_check(cfg, ext, "a5", Rational::of(101, 288), "f1", s.best.value,
                             schur_argmax(s, s.best.index)));
    return out;
}

std::vector<BoundCheck> audit_log_coefficients(const SweepConfig& cfg) {
    const ExtremalSets ext = extremal_sets(cfg);
    const PRoutePass p = run_p_route(cfg);
    std::vector<BoundCheck> out;
    out.push_back(make_check(cfg, ext, "gamma1", Rational::of(1, 2), "f1",
                             p.best[3].value, p_route_argmax(cfg, p, p.best[3].index)));
    out.push_back(make_check(cfg, ext, "gamma2", Rational::of(1, 4), "f2",
                             p.best[4].value, p_route_argmax(cfg, p, p.best[4].index)));
    out.push_back(make_check(cfg, ext, "gamma3", Rational::of(1, 8), "f2",
                             p.best[5].value, p_route_argmax(cfg, p, p.best[5].index)));
    return out;
}

std::vector<BoundCheck> audit_fekete_szego(const std::vector<cd>& mu_grid,
                                           const SweepConfig& cfg) {
    const ExtremalSets ext = extremal_sets(cfg);
    std::vector<BoundCheck> out;
    for (const cd mu : mu_grid) {
        const FsPass pass = run_fs(cfg, mu);
        const double bound_value = fekete_szego_bound(mu);
        Rational bound = (bound_value == 0.5) ? Rational::of(1, 2)
                                              : Rational::approx(bound_value);
        BoundCheck ch;
        ch.name = "FS(mu=" + fmt_complex(mu, 7) + ")";
        ch.bound = bound;
        ch.extremal = "f2";
        ch.attained_value = std::abs(fekete_szego(ext.f2, mu));
        ch.observed_sup = std::sqrt(std::max(pass.best.value, 0.0));
        ch.argmax = fs_argmax(cfg, pass, pass.best.index);
        if (std::max(ch.observed_sup, ch.attained_value) > bound.decimal + cfg.tol_upper) {
            ch.verdict = Verdict::Violated;
        } else if (ch.observed_sup < bound.decimal - cfg.tol_sharp ||
                   std::abs(ch.attained_value - bound.decimal) > kAttainTolerance) {
            ch.verdict = Verdict::NotAttained;
        } else {
            ch.verdict = Verdict::Certified;
        }
        out.push_back(std::move(ch));
    }
    return out;
}

std::vector<BoundCheck> audit_determinants(const SweepConfig& cfg) {
    const ExtremalSets ext = extremal_sets(cfg);
    const PRoutePass p = run_p_route(cfg);
    const BRoutePass b = run_b_route(cfg);
    const T23Pass t = run_t23(cfg);
    std::vector<BoundCheck> out;
    out.push_back(make_check(cfg, ext, "H21", Rational::of(1, 2), "f2", p.best[6].value,
                             p_route_argmax(cfg, p, p.best[6].index)));
    out.push_back(make_check(cfg, ext, "H22", Rational::of(1, 4), "f2", p.best[7].value,
                             p_route_argmax(cfg, p, p.best[7].index)));
    out.push_back(make_check(cfg, ext, "H21_log", Rational::of(1, 16), "f2",
                             p.best[8].value, p_route_argmax(cfg, p, p.best[8].index)));
    out.push_back(make_check(cfg, ext, "H21_invlog", Rational::of(43, 576), "f1",
                             p.best[9].value, p_route_argmax(cfg, p, p.best[9].index)));
    out.push_back(make_check(cfg, ext, "T21", Rational::of(2, 1), "f3", b.best[0].value,
                             b_route_argmax(b, b.best[0].index)));
    out.push_back(make_check(cfg, ext, "T22", Rational::of(25, 16), "f3", b.best[1].value,
                             b_route_argmax(b, b.best[1].index)));
    out.push_back(make_check(cfg, ext, "T21_log", Rational::of(17, 64), "f3",
                             b.best[2].value, b_route_argmax(b, b.best[2].index)));
    out.push_back(make_check(cfg, ext, "T21_invlog", Rational::of(25, 64), "f3",
                             b.best[3].value, b_route_argmax(b, b.best[3].index)));
    out.push_back(make_check(cfg, ext, "T23", Rational::of(545, 648), "f3",
                             t.best.value, t23_argmax(t, t.best.index)));
    return out;
}

BoundCheck sweep_bound(const std::string& name, const SweepConfig& cfg) {
    auto find_in = [&](const std::vector<BoundCheck>& v) -> const BoundCheck* {
        for (const auto& c : v) {
            if (c.name == name) return &c;
        }
        return nullptr;
    };
    static const std::vector<std::string> coeff = {"a2", "a3", "a4", "a5"};
    static const std::vector<std::string> logs = {"gamma1", "gamma2", "gamma3"};
    if (std::find(coeff.begin(), coeff.end(), name) != coeff.end()) {
        const auto v = audit_initial_coefficients(cfg);
        return *find_in(v);
    }
    if (std::find(logs.begin(), logs.end(), name) != logs.end()) {
        const auto v = audit_log_coefficients(cfg);
        return *find_in(v);
    }
    const auto v = audit_determinants(cfg);
    if (const BoundCheck* c = find_in(v)) return *c;
    throw DomainError("unknown functional name: " + name);
}

// ---------------------------------------------------------------------------
// Envelope and scalar audits.
// ---------------------------------------------------------------------------

namespace {

struct Max1D {
    double value = -std::numeric_limits<double>::infinity();
    double arg = 0.0;
};

template <class F>
Max1D max_on(double lo, double hi, int grid, F&& f) {
    Max1D m;
    for (int k = 0; k <= grid; ++k) {
        const double x = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(grid);
        const double v = f(x);
        if (v > m.value) m = Max1D{v, x};
    }
    return m;
}

} // namespace

EnvelopeReport audit_envelopes(int grid) {
    EnvelopeReport rep;
    const Max1D h22 = max_on(0.0, 1.0, grid, envelope_h22);
    const Max1D lg = max_on(0.0, 1.0, grid, envelope_log);
    const Max1D il = max_on(0.0, 1.0, grid, envelope_invlog);
    const double zpl = zeta_prime_log();
    const double zpi = zeta_prime_invlog();
    const Max1D p2l = max_on(zpl, 1.0, grid, phi2_log);
    const Max1D p2i = max_on(zpi, 1.0, grid, phi2_invlog);
    rep.h22_max = h22.value;
    rep.h22_argmax = h22.arg;
    rep.log_max = lg.value;
    rep.log_argmax = lg.arg;
    rep.invlog_max = il.value;
    rep.invlog_argmax = il.arg;
    rep.phi2_log_max = p2l.value;
    rep.phi2_log_argmax = p2l.arg;
    rep.phi2_invlog_max = p2i.value;
    rep.phi2_invlog_argmax = p2i.arg;
    rep.notes.push_back(
        "log-route display carries prefactor 1/7, but its own final envelope "
        "(36-12t^2-31t^4)/576 corresponds to prefactor 1/12 with the branch "
        "-|A|+|B|+|C|; the displayed envelope is what is audited");
    const double printed_phi2_at_prime = (288.0 / 168.0) * phi2_log(zpl);
    rep.notes.push_back(
        "sqrt-branch display carries prefactor 1/168, inconsistent with its own "
        "claimed maximum 0.0516512 (1/168 would give " +
        fmt7(printed_phi2_at_prime) +
        " at the sign-change point); the consistent prefactor 1/288 is used");
    return rep;
}

namespace {

ScalarAudit scalar_audit_for(bool invlog, int grid) {
    ScalarAudit a;
    a.zeta_prime = invlog ? zeta_prime_invlog() : zeta_prime_log();
    auto scalars = [&](double z) {
        return invlog ? case_scalars_invlog(z) : case_scalars_log(z);
    };
    for (int k = 1; k <= grid; ++k) {
        const double z = static_cast<double>(k) / static_cast<double>(grid + 1);
        const CaseScalars s = scalars(z);
        if (!(s.t1 > 0.0)) a.t1_positive = false;
        if (!(s.t2 <= 0.0)) a.t2_nonpositive = false;
        if (!(s.t3 > 0.0)) a.t3_positive = false;
        if (!(s.t4 < 0.0)) a.t4_negative = false;
        if (!(s.t5 < 0.0)) a.t5_negative = false;
        const bool want_nonpositive = z <= a.zeta_prime;
        const bool is_nonpositive = s.t6 <= 1e-12;
        if (want_nonpositive != is_nonpositive && std::abs(s.t6) > 1e-12) {
            a.t6_sign_change_matches = false;
        }
    }
    double lo = 0.05, hi = 0.95;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (scalars(mid).t6 <= 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    a.t6_root = 0.5 * (lo + hi);
    a.t6_residual_at_prime = std::abs(scalars(a.zeta_prime).t6);
    return a;
}

} // namespace

ScalarAuditReport audit_case_scalars(int grid) {
    ScalarAuditReport rep;
    rep.log = scalar_audit_for(false, grid);
    rep.invlog = scalar_audit_for(true, grid);
    for (int k = 1; k <= grid; ++k) {
        const double z = static_cast<double>(k) / static_cast<double>(grid + 1);
        const YInput in = abc_h22(z);
        const CaseScalars s = case_scalars_from_abc(in);
        if (!(in.A * in.C >= 0.0) || !(s.t1 >= 0.0)) {
            rep.h22_case_ok = false;
            break;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// M surface.
// ---------------------------------------------------------------------------

double m_surface(double x, double y) {
    const double x2 = x * x;
    const double e = 1.0 - x2 - y * y / (1.0 + x);
    const double omx2 = 1.0 - x2;
    return 361.0 * x2 * x2 * x2 + 729.0 * x2 * x2 + 1140.0 * x2 * x2 * omx2 +
           972.0 * x2 * omx2 + 342.0 * omx2 * omx2 + 900.0 * x2 * y * y +
           456.0 * x2 * x * e + 720.0 * x * y * e + 144.0 * e * e;
}

double m_surface_edge_x_printed(double x) {
    const double x2 = x * x;
    const double omx2 = 1.0 - x2;
    return 361.0 * x2 * x2 * x2 + 729.0 * x2 * x2 - 456.0 * x2 * x2 * x +
           456.0 * x2 * x + 144.0 * omx2 * omx2;
}

double m_surface_edge_y_printed(double y) {
    const double y2 = y * y;
    return 144.0 * y2 * y2 + 54.0 * y2 + 144.0;
}

MSurfaceReport audit_m_surface(int grid, ExecMode mode) {
    MSurfaceReport rep;
    const std::uint64_t n = static_cast<std::uint64_t>(grid) + 1;
    const auto best = grid_max<1>(
        n, n,
        [grid](std::uint64_t o) {
            const double x = static_cast<double>(o) / static_cast<double>(grid);
            const double ymax = 1.0 - x * x;
            return [x, ymax, grid](std::uint64_t i, std::array<double, 1>& vals) {
                const double y = ymax * static_cast<double>(i) / static_cast<double>(grid);
                vals[0] = m_surface(x, y);
            };
        },
        mode);
    rep.max_value = best[0].value;
    const std::uint64_t io = best[0].index / n;
    const std::uint64_t ii = best[0].index % n;
    rep.argmax_x = static_cast<double>(io) / static_cast<double>(grid);
    rep.argmax_y = (1.0 - rep.argmax_x * rep.argmax_x) * static_cast<double>(ii) /
                   static_cast<double>(grid);
    rep.corner_value = m_surface(1.0, 0.0);
    rep.edge_x_printed_max = max_on(0.0, 1.0, grid, m_surface_edge_x_printed).value;
    rep.edge_y_printed_max = max_on(0.0, 1.0, grid, m_surface_edge_y_printed).value;
    rep.edge_y_full_max =
        max_on(0.0, 1.0, grid, [](double y) { return m_surface(0.0, y); }).value;
    rep.notes.push_back(
        "printed x=0 restriction (144y^4+54y^2+144, max 342) disagrees with the "
        "full surface at x=0 (max " +
        fmt7(rep.edge_y_full_max) + " at y=0)");
    if (rep.max_value > 1090.0 + 1e-9) {
        rep.notes.push_back(
            "the stated surface maximum 1090 at (1,0) is exceeded: max " +
            fmt7(rep.max_value) + " at (" + fmt7(rep.argmax_x) + ", " +
            fmt7(rep.argmax_y) +
            "); along y = 1-x^2 the surface reduces to 529u^3-1833u^2+2052u+342 "
            "(u = x^2), which peaks above 1090 near u = 0.9524");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Geometry.
// ---------------------------------------------------------------------------

GeometryReport audit_geometry(int samples) {
    GeometryReport rep;
    rep.samples = samples;
    const auto pts = boundary_curve(samples);
    double defect = 0.0;
    for (const auto& p : pts) defect = std::max(defect, std::abs(boundary_indicator(p.w)));
    rep.max_boundary_defect = defect;
    rep.tip_error_vs_printed = std::abs(boundary_tip().real() - 3.2589);
    double sym = 0.0;
    for (std::size_t j = 0; j < pts.size() / 2; ++j) {
        const auto& a = pts[j];
        const auto& b = pts[pts.size() - 1 - j];
        sym = std::max(sym, std::abs(a.w - std::conj(b.w)));
    }
    rep.conj_symmetry_error = sym;
    rep.starlike = starlikeness_probe(samples);
    rep.leftmost_re = rep.starlike.leftmost.w.real();
    rep.leftmost_im = rep.starlike.leftmost.w.imag();
    const cd quoted_up{-0.181, 0.678};
    const cd quoted_dn{-0.181, -0.678};
    rep.leftmost_deviation_vs_quoted =
        std::min(std::abs(rep.starlike.leftmost.w - quoted_up),
                 std::abs(rep.starlike.leftmost.w - quoted_dn));
    rep.notes.push_back(
        "the curve lies in Re w > 0 (Re(1/w) = 1 - log(2 cos(theta/2)) >= 1 - log 2), "
        "so the quoted left extent (-0.181, +-0.678) cannot lie on it; located "
        "leftmost sample (" +
        fmt7(rep.leftmost_re) + ", " + fmt7(rep.leftmost_im) + "), deviation " +
        fmt7(rep.leftmost_deviation_vs_quoted));
    return rep;
}

// ---------------------------------------------------------------------------
// Rotation spot check.
// ---------------------------------------------------------------------------

std::vector<RotationCheck> rotation_spot_check(const SweepConfig& cfg) {
    const PRoutePass p = run_p_route(cfg);
    const PolarGrid g1{cfg.minor_radial, cfg.minor_angular};
    const PolarGrid g2{cfg.minor_radial, cfg.minor_angular};
    const PolarGrid g3{cfg.minor_radial, cfg.minor_angular};
    const auto best = grid_max<3>(
        g1.size() * g2.size(), g3.size(),
        [=](std::uint64_t o) {
            const cd zeta1 = g1.point(o / g2.size());
            const cd zeta2 = g2.point(o % g2.size());
            return [=](std::uint64_t i, std::array<double, 3>& vals) {
                const CaratheodoryPrefix pr =
                    p_from_params(SchwarzParams{zeta1, zeta2, g3.point(i)});
                const InitialCoefficients ic = coeffs_from_p(pr);
                const CoefficientSet c = full_coefficient_set(ic.a2, ic.a3, ic.a4);
                vals[0] = std::norm(hankel22(c));
                vals[1] = std::norm(hankel21_log(c));
                vals[2] = std::norm(hankel21_invlog(c));
            };
        },
        cfg.mode);
    const std::array<std::pair<std::string, int>, 3> items{
        {{"H22", 7}, {"H21_log", 8}, {"H21_invlog", 9}}};
    std::vector<RotationCheck> out;
    for (std::size_t k = 0; k < items.size(); ++k) {
        RotationCheck rc;
        rc.name = items[k].first;
        rc.real_axis_sup = std::sqrt(std::max(
            p.best[static_cast<std::size_t>(items[k].second)].value, 0.0));
        rc.complex_sup = std::sqrt(std::max(best[k].value, 0.0));
        rc.ok = rc.complex_sup <= rc.real_axis_sup + 1e-9;
        out.push_back(std::move(rc));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Full report.
// ---------------------------------------------------------------------------

bool Report::all_certified() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const BoundCheck& c) { return c.certified(); });
}

std::vector<cd> default_mu_grid() {
    return {cd{0.25, 0.0}, cd{0.5, 0.0}, cd{0.75, 0.0}, cd{1.0, 0.0}, cd{1.25, 0.0}};
}

Report full_report(const SweepConfig& cfg, const std::vector<cd>& mu_grid) {
    Report rep;
    rep.config = cfg;
    rep.mu_grid = mu_grid;

    const ExtremalSets ext = extremal_sets(cfg);
    const PRoutePass p = run_p_route(cfg);
    const BRoutePass b = run_b_route(cfg);
    const T23Pass t = run_t23(cfg);
    const SchurPass s = run_a5(cfg);

    struct Item {
        const char* name;
        Rational bound;
        const char* extremal;
        int slot; // p-route slot, -1 fifth coefficient, -2 T23, or 10+k b-route
    };
    const std::vector<Item> items = {
        {"a2", Rational::of(1, 1), "f1", 0},
        {"a3", Rational::of(3, 4), "f1", 1},
        {"a4", Rational::of(19, 36), "f1", 2},
        {"a5", Rational::of(101, 288), "f1", -1},
        {"gamma1", Rational::of(1, 2), "f1", 3},
        {"gamma2", Rational::of(1, 4), "f2", 4},
        {"gamma3", Rational::of(1, 8), "f2", 5},
        {"H21", Rational::of(1, 2), "f2", 6},
        {"H22", Rational::of(1, 4), "f2", 7},
        {"H21_log", Rational::of(1, 16), "f2", 8},
        {"H21_invlog", Rational::of(43, 576), "f1", 9},
        {"T21", Rational::of(2, 1), "f3", 10},
        {"T22", Rational::of(25, 16), "f3", 11},
        {"T21_log", Rational::of(17, 64), "f3", 12},
        {"T21_invlog", Rational::of(25, 64), "f3", 13},
        {"T23", Rational::of(545, 648), "f3", -2},
    };
    for (const Item& it : items) {
        double sq;
        std::string argmax;
        if (it.slot == -1) {
            sq = s.best.value;
            argmax = schur_argmax(s, s.best.index);
        } else if (it.slot == -2) {
            sq = t.best.value;
            argmax = t23_argmax(t, t.best.index);
        } else if (it.slot < 10) {
            sq = p.best[static_cast<std::size_t>(it.slot)].value;
            argmax = p_route_argmax(cfg, p, p.best[static_cast<std::size_t>(it.slot)].index);
        } else {
            const auto& loc = b.best[static_cast<std::size_t>(it.slot - 10)];
            sq = loc.value;
            argmax = b_route_argmax(b, loc.index);
        }
        rep.checks.push_back(make_check(cfg, ext, it.name, it.bound, it.extremal, sq, argmax));
    }
    for (BoundCheck& fs : audit_fekete_szego(mu_grid, cfg)) {
        rep.checks.push_back(std::move(fs));
    }

    rep.envelopes = audit_envelopes();
    rep.scalars = audit_case_scalars();
    rep.msurface = audit_m_surface();
    rep.geometry = audit_geometry();
    rep.rotation = rotation_spot_check(cfg);

    for (const BoundCheck& c : rep.checks) {
        if (c.name == "gamma3" && c.verdict == Verdict::Violated) {
            rep.notes.push_back(
                "|gamma3| exceeds the stated bound 1/8: the member generated by "
                "w(z) = z^3 has gamma3 = a4/2 = 1/6; observed sweep maximum " +
                fmt7(c.observed_sup) + " at " + c.argmax);
        }
    }
    for (const auto& n : rep.envelopes.notes) rep.notes.push_back(n);
    for (const auto& n : rep.msurface.notes) rep.notes.push_back(n);
    for (const auto& n : rep.geometry.notes) rep.notes.push_back(n);
    return rep;
}

} // namespace starb
