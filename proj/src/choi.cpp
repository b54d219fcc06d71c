#include "starb/choi.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace starb {

std::string to_string(YBranch b) {
    switch (b) {
        case YBranch::Case1Triangle: return "case1:|A|+|B|+|C|";
        case YBranch::Case1Parabola: return "case1:1+|A|+B^2/(4(1-|C|))";
        case YBranch::Case2InnerMinus: return "case2:1-|A|+B^2/(4(1-|C|))";
        case YBranch::Case2InnerPlus: return "case2:1+|A|+B^2/(4(1+|C|))";
        case YBranch::RTrianglePlus: return "R:|A|+|B|-|C|";
        case YBranch::RTriangleMinus: return "R:-|A|+|B|+|C|";
        case YBranch::RSqrt: return "R:(|C|+|A|)sqrt(1-B^2/(4AC))";
    }
    return "?";
}

namespace {

struct Candidate {
    double value;
    YBranch branch;
};

YResult best_of(const std::vector<Candidate>& cands) {
    YResult r{-std::numeric_limits<double>::infinity(), YBranch::Case1Triangle};
    for (const Candidate& c : cands) {
        if (c.value > r.value) r = YResult{c.value, c.branch};
    }
    return r;
}

YResult r_branch(double A, double B, double C) {
    const double aA = std::abs(A), aB = std::abs(B), aC = std::abs(C);
    const double s1 = aC * (aB + 4.0 * aA) - aA * aB; // R1 iff s1 <= 0
    const double s2 = aA * aB - aC * (aB - 4.0 * aA); // R2 iff s2 <= 0
    std::vector<Candidate> cands;
    if (s1 <= 0.0) cands.push_back({aA + aB - aC, YBranch::RTrianglePlus});
    if (s2 <= 0.0) cands.push_back({-aA + aB + aC, YBranch::RTriangleMinus});
    if (cands.empty() || s1 == 0.0 || s2 == 0.0) {
        cands.push_back({(aC + aA) * std::sqrt(1.0 - B * B / (4.0 * A * C)),
                         YBranch::RSqrt});
    }
    return best_of(cands);
}

} // namespace

YResult y_exact(const YInput& in) {
    const double A = in.A, B = in.B, C = in.C;
    const double aA = std::abs(A), aB = std::abs(B), aC = std::abs(C);
    if (A * C >= 0.0) {
        const double gap = aB - 2.0 * (1.0 - aC);
        std::vector<Candidate> cands;
        if (gap >= 0.0) cands.push_back({aA + aB + aC, YBranch::Case1Triangle});
        if (gap <= 0.0) {
            cands.push_back({1.0 + aA + B * B / (4.0 * (1.0 - aC)),
                             YBranch::Case1Parabola});
        }
        return best_of(cands);
    }
    const double t = -4.0 * A * C * (1.0 / (C * C) - 1.0);
    const double b2 = B * B;
    const double ga = b2 - t;                 // branch a needs t <= B^2, i.e. ga >= 0
    const double gb = 2.0 * (1.0 - aC) - aB;  // branch a needs |B| < 2(1-|C|)
    const double tb = std::min(4.0 * (1.0 + aC) * (1.0 + aC), t) - b2; // b needs > 0
    std::vector<Candidate> cands;
    if (ga >= 0.0 && gb >= 0.0) {
        cands.push_back({1.0 - aA + b2 / (4.0 * (1.0 - aC)), YBranch::Case2InnerMinus});
    }
    if (tb >= 0.0) {
        cands.push_back({1.0 + aA + b2 / (4.0 * (1.0 + aC)), YBranch::Case2InnerPlus});
    }
    const bool a_strict = ga > 0.0 && gb > 0.0;
    const bool b_strict = tb > 0.0;
    if (!a_strict && !b_strict) {
        const YResult r = r_branch(A, B, C);
        cands.push_back({r.value, r.branch});
    }
    return best_of(cands);
}

double y_oracle(const YInput& in, int grid) {
    if (grid < 2) throw DomainError("oracle grid must be >= 2");
    const int angles = 4 * grid;
    const int half = angles / 2; // cos values repeat beyond theta = pi
    const double step = 2.0 * std::numbers::pi / static_cast<double>(angles);
    std::vector<double> cost(static_cast<std::size_t>(half) + 1);
    for (int j = 0; j <= half; ++j) {
        cost[static_cast<std::size_t>(j)] = std::cos(step * static_cast<double>(j));
    }
    const double A = in.A, B = in.B, C = in.C;
    double best = -std::numeric_limits<double>::infinity();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(max : best)
#endif
    for (int ir = 0; ir < grid; ++ir) {
        const double r = static_cast<double>(ir) / static_cast<double>(grid - 1);
        const double r2 = r * r;
        // |A + B z + C z^2|^2 on |z| = r is a quadratic in c = cos(theta).
        const double a0 = (A - C * r2) * (A - C * r2) + B * B * r2;
        const double a1 = 2.0 * B * r * (A + C * r2);
        const double a2 = 4.0 * A * C * r2;
        auto eval = [&](int j) {
            const double c = cost[static_cast<std::size_t>(j)];
            return a0 + c * (a1 + c * a2);
        };
        double p = std::max(eval(0), eval(half));
        if (a2 < 0.0) {
            const double cv = std::clamp(-a1 / (2.0 * a2), -1.0, 1.0);
            const int jv = static_cast<int>(std::acos(cv) / step);
            for (int j = std::max(0, jv - 4); j <= std::min(half, jv + 4); ++j) {
                p = std::max(p, eval(j));
            }
        }
        const double v = std::sqrt(p) + (1.0 - r2);
        best = std::max(best, v);
    }
    return best;
}

double y_oracle_serial(const YInput& in, int grid) {
    if (grid < 2) throw DomainError("oracle grid must be >= 2");
    const int angles = 4 * grid;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(angles);
    const std::complex<double> A{in.A, 0.0}, B{in.B, 0.0}, C{in.C, 0.0};
    double best = -std::numeric_limits<double>::infinity();
    for (int ir = 0; ir < grid; ++ir) {
        const double r = static_cast<double>(ir) / static_cast<double>(grid - 1);
        for (int j = 0; j < angles; ++j) {
            const std::complex<double> z = std::polar(r, step * static_cast<double>(j));
            const double v = std::abs(A + B * z + C * z * z) + 1.0 - r * r;
            best = std::max(best, v);
        }
    }
    return best;
}

namespace {

void require_open_unit(double zeta) {
    if (!(zeta > 0.0 && zeta < 1.0)) {
        throw DomainError("substitution requires zeta in (0,1)");
    }
}

double c_of(double zeta) { return -(3.0 + zeta * zeta) / (4.0 * zeta); }

} // namespace

YInput abc_h22(double zeta) {
    require_open_unit(zeta);
    const double z2 = zeta * zeta;
    return {-5.0 * z2 * zeta / (48.0 * (1.0 - z2)), 0.25 * zeta, c_of(zeta)};
}

YInput abc_h21_log(double zeta) {
    require_open_unit(zeta);
    const double z2 = zeta * zeta;
    return {7.0 * z2 * zeta / (48.0 * (1.0 - z2)), 0.25 * zeta, c_of(zeta)};
}

YInput abc_h21_invlog(double zeta) {
    require_open_unit(zeta);
    const double z2 = zeta * zeta;
    return {43.0 * z2 * zeta / (48.0 * (1.0 - z2)), -1.25 * zeta, c_of(zeta)};
}

CaseScalars case_scalars_from_abc(const YInput& in) {
    const double aA = std::abs(in.A), aB = std::abs(in.B), aC = std::abs(in.C);
    CaseScalars s;
    s.t1 = aB - 2.0 * (1.0 - aC);
    s.t4 = -4.0 * in.A * in.C * (1.0 / (in.C * in.C) - 1.0);
    s.t2 = s.t4 - in.B * in.B;
    s.t3 = 4.0 * (1.0 + aC) * (1.0 + aC);
    s.t5 = aA * aB - aC * (aB + 4.0 * aA);
    s.t6 = aA * aB - aC * (aB - 4.0 * aA);
    return s;
}

CaseScalars case_scalars_log(double zeta) {
    require_open_unit(zeta);
    const double z2 = zeta * zeta;
    CaseScalars s;
    s.t1 = 1.5 / zeta + 0.75 * zeta - 2.0;
    s.t2 = -z2 * (18.0 - z2) / (12.0 * (3.0 + z2));
    s.t3 = std::pow(3.0 + 4.0 * zeta + z2, 2) / (4.0 * z2);
    s.t4 = -7.0 * z2 * (9.0 - z2) / (48.0 * (3.0 + z2));
    s.t5 = -(36.0 + 60.0 * z2 + 9.0 * z2 * z2) / (192.0 * (1.0 - z2));
    s.t6 = -(36.0 - 108.0 * z2 - 47.0 * z2 * z2) / (192.0 * (1.0 - z2));
    return s;
}

CaseScalars case_scalars_invlog(double zeta) {
    require_open_unit(zeta);
    const double z2 = zeta * zeta;
    CaseScalars s;
    s.t1 = 1.5 / zeta + 1.75 * zeta - 2.0;
    s.t2 = -z2 * (153.0 + 8.0 * z2) / (12.0 * (3.0 + z2));
    s.t3 = std::pow(3.0 + 4.0 * zeta + z2, 2) / (4.0 * z2);
    s.t4 = -43.0 * z2 * (9.0 - z2) / (48.0 * (3.0 + z2));
    s.t5 = -(180.0 + 396.0 * z2 - 103.0 * z2 * z2) / (192.0 * (1.0 - z2));
    s.t6 = -(60.0 - 212.0 * z2 - 149.0 * z2 * z2) / (64.0 * (1.0 - z2));
    return s;
}

double zeta_prime_log() {
    return std::sqrt((6.0 / 47.0) * (8.0 * std::sqrt(2.0) - 9.0));
}

double zeta_prime_invlog() {
    return std::sqrt((2.0 / 149.0) * (2.0 * std::sqrt(1261.0) - 53.0));
}

double envelope_h22(double zeta) {
    const double z2 = zeta * zeta;
    return (5.0 * z2 * z2 / 48.0 + (1.0 - z2) * (3.0 + 2.0 * z2) / 4.0) / 3.0;
}

double envelope_log(double zeta) {
    const double z2 = zeta * zeta;
    return (36.0 - 12.0 * z2 - 31.0 * z2 * z2) / 576.0;
}

double envelope_invlog(double zeta) {
    const double z2 = zeta * zeta;
    return (36.0 + 36.0 * z2 - 115.0 * z2 * z2) / 576.0;
}

double phi2_log(double zeta) {
    const double z2 = zeta * zeta;
    return (36.0 - 24.0 * z2 - 5.0 * z2 * z2) / 288.0 *
           std::sqrt((6.0 + z2) / (21.0 + 7.0 * z2));
}

double phi2_invlog(double zeta) {
    const double z2 = zeta * zeta;
    return (36.0 - 24.0 * z2 + 31.0 * z2 * z2) / (288.0 * std::sqrt(43.0)) *
           std::sqrt((51.0 - 8.0 * z2) / (3.0 + z2));
}

} // namespace starb
