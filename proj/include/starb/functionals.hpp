#pragma once

#include <span>
#include <string>

#include "starb/balloon.hpp"

namespace starb {

/// a3 - mu a2^2.
cd fekete_szego(const CoefficientSet& c, cd mu);

/// Stated sharp bound of the Fekete-Szego functional as printed for this
/// class: (1/2) max{1, |mu - 3/4|}. Valid (and attained) for mu in a
/// neighbourhood of 3/4; see the verifier's default grid.
double fekete_szego_bound(cd mu);

/// a2 a4 - a3^2.
cd hankel22(const CoefficientSet& c);

/// gamma1 gamma3 - gamma2^2 = (a2 a4 - a3^2 + a2^4/12)/4.
cd hankel21_log(const CoefficientSet& c);

/// Gamma1 Gamma3 - Gamma2^2 = (13 a2^4 - 12 a2^2 a3 - 12 a3^2 + 12 a2 a4)/48.
cd hankel21_invlog(const CoefficientSet& c);

/// n = 1: 1 - a2^2;  n = 2: a2^2 - a3^2;  n = 3: a3^2 - a4^2.
cd toeplitz_initial(const CoefficientSet& c, int n);

/// gamma1^2 - gamma2^2 = (4 a2^2 - a2^4 - 4 a3^2 + 4 a2^2 a3)/16.
cd toeplitz_log(const CoefficientSet& c);

/// Gamma1^2 - Gamma2^2 = -(9 a2^4 - 4 a2^2 + 4 a3^2 - 12 a2^2 a3)/16.
cd toeplitz_invlog(const CoefficientSet& c);

/// Determinant of the q x q matrix with constant anti-diagonals
/// H[i][j] = seq[n+i+j]. seq[k] is the stream coefficient of index k,
/// starting at index 1 (seq.front() is index 1). Requires indices
/// n .. n + 2(q-1).
cd generic_hankel(std::span<const cd> seq, int q, int n);

/// Determinant of the q x q matrix symmetric about the main diagonal,
/// T[i][j] = seq[n + |i-j|]; same stream convention as generic_hankel.
cd generic_toeplitz(std::span<const cd> seq, int q, int n);

/// Streams for the generic determinants, index origin 1.
std::vector<cd> a_stream(const CoefficientSet& c);        // 1, a2, a3, a4, a5
std::vector<cd> gamma_stream(const CoefficientSet& c);    // gamma1..gamma3
std::vector<cd> inv_gamma_stream(const CoefficientSet& c); // Gamma1..Gamma3

} // namespace starb
