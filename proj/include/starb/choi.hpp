#pragma once

#include <string>

#include "starb/errors.hpp"

namespace starb {

/// Real coefficient triple for the disk maximum
///   Y(A,B,C) = max_{|z| <= 1} |A + B z + C z^2| + 1 - |z|^2.
struct YInput {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
};

enum class YBranch {
    Case1Triangle,   // |A| + |B| + |C|
    Case1Parabola,   // 1 + |A| + B^2 / (4 (1 - |C|))
    Case2InnerMinus, // 1 - |A| + B^2 / (4 (1 - |C|))
    Case2InnerPlus,  // 1 + |A| + B^2 / (4 (1 + |C|))
    RTrianglePlus,   // |A| + |B| - |C|
    RTriangleMinus,  // -|A| + |B| + |C|
    RSqrt            // (|C| + |A|) sqrt(1 - B^2 / (4 A C))
};

std::string to_string(YBranch b);

struct YResult {
    double value = 0.0;
    YBranch branch = YBranch::Case1Triangle;
};

/// Closed-form evaluation of Y. At branch-condition ties the adjacent branch
/// formulas are both evaluated and the maximum taken (they agree at true
/// seams), so no input falls through.
YResult y_exact(const YInput& in);

/// Grid maximum of |A + B z + C z^2| + 1 - |z|^2 over `grid` radii
/// (k/(grid-1), k = 0..grid-1) times 4*grid angles (2 pi j / (4 grid)).
/// A lower bound for y_exact converging from below as the grid refines.
double y_oracle(const YInput& in, int grid);

/// Straightforward reference evaluation of the same grid maximum (complex
/// arithmetic per point); kept for testing and benchmarking y_oracle.
double y_oracle_serial(const YInput& in, int grid);

/// Proof substitutions mapping the scalar zeta in (0, 1) to a Y input.
/// They all share C = -(3 + zeta^2)/(4 zeta).
YInput abc_h22(double zeta);        // A = -5 zeta^3/(48 (1-zeta^2)), B = zeta/4
YInput abc_h21_log(double zeta);    // A = +7 zeta^3/(48 (1-zeta^2)), B = zeta/4
YInput abc_h21_invlog(double zeta); // A = 43 zeta^3/(48 (1-zeta^2)), B = -5 zeta/4

/// Case discriminants of the Y evaluation for a substitution input.
struct CaseScalars {
    double t1 = 0.0; // |B| - 2 (1 - |C|)
    double t2 = 0.0; // -4AC (1/C^2 - 1) - B^2
    double t3 = 0.0; // 4 (1 + |C|)^2
    double t4 = 0.0; // -4AC (1/C^2 - 1)
    double t5 = 0.0; // |AB| - |C| (|B| + 4 |A|)
    double t6 = 0.0; // |AB| - |C| (|B| - 4 |A|)
};

/// Discriminants computed directly from (A, B, C).
CaseScalars case_scalars_from_abc(const YInput& in);
/// Closed forms in zeta for the two substitutions with A > 0.
CaseScalars case_scalars_log(double zeta);
CaseScalars case_scalars_invlog(double zeta);

/// Sign-change point of t6: zeta' = sqrt((6/47)(8 sqrt(2) - 9)) ~= 0.543477.
double zeta_prime_log();
/// zeta' = sqrt((2/149)(2 sqrt(1261) - 53)) ~= 0.491827.
double zeta_prime_invlog();

/// Envelope of the H22 sweep prefactor: (1/3) zeta (1-zeta^2)(|A|+|B|+|C|)
/// = (5 zeta^4/48 + (1-zeta^2)(3+2 zeta^2)/4)/3; max 1/4 as zeta -> 0.
double envelope_h22(double zeta);
/// (36 - 12 zeta^2 - 31 zeta^4)/576; max 1/16 at zeta = 0.
double envelope_log(double zeta);
/// (36 + 36 zeta^2 - 115 zeta^4)/576; max 31/460 at zeta^2 = 18/115.
double envelope_invlog(double zeta);
/// Square-root branch envelope (1/12) zeta (1-zeta^2)(|C|+|A|) sqrt(1-B^2/(4AC))
/// for the log substitution:
///   (36 - 24 zeta^2 - 5 zeta^4)/288 * sqrt((6+zeta^2)/(21+7 zeta^2)).
double phi2_log(double zeta);
/// Same for the inverse-log substitution:
///   (36 - 24 zeta^2 + 31 zeta^4)/(288 sqrt(43)) * sqrt((51-8 zeta^2)/(3+zeta^2)).
double phi2_invlog(double zeta);

} // namespace starb
