#include "starb/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace starb {

cd fekete_szego(const CoefficientSet& c, cd mu) { return c.a3 - mu * c.a2 * c.a2; }

double fekete_szego_bound(cd mu) {
    return 0.5 * std::max(1.0, std::abs(mu - cd{0.75, 0.0}));
}

cd hankel22(const CoefficientSet& c) { return c.a2 * c.a4 - c.a3 * c.a3; }

cd hankel21_log(const CoefficientSet& c) {
    return c.gamma1 * c.gamma3 - c.gamma2 * c.gamma2;
}

cd hankel21_invlog(const CoefficientSet& c) {
    return c.inv_gamma1 * c.inv_gamma3 - c.inv_gamma2 * c.inv_gamma2;
}

cd toeplitz_initial(const CoefficientSet& c, int n) {
    switch (n) {
        case 1: return cd{1.0, 0.0} - c.a2 * c.a2;
        case 2: return c.a2 * c.a2 - c.a3 * c.a3;
        case 3: return c.a3 * c.a3 - c.a4 * c.a4;
        default: throw DomainError("toeplitz_initial expects n in {1, 2, 3}");
    }
}

cd toeplitz_log(const CoefficientSet& c) {
    return c.gamma1 * c.gamma1 - c.gamma2 * c.gamma2;
}

cd toeplitz_invlog(const CoefficientSet& c) {
    return c.inv_gamma1 * c.inv_gamma1 - c.inv_gamma2 * c.inv_gamma2;
}

namespace {

cd det_small(std::vector<cd>& m, int q) {
    if (q == 1) return m[0];
    if (q == 2) return m[0] * m[3] - m[1] * m[2];
    if (q == 3) {
        return m[0] * (m[4] * m[8] - m[5] * m[7]) -
               m[1] * (m[3] * m[8] - m[5] * m[6]) +
               m[2] * (m[3] * m[7] - m[4] * m[6]);
    }
    // LU with partial pivoting for larger determinants.
    cd det{1.0, 0.0};
    for (int col = 0; col < q; ++col) {
        int pivot = col;
        double best = std::abs(m[static_cast<std::size_t>(col * q + col)]);
        for (int r = col + 1; r < q; ++r) {
            const double v = std::abs(m[static_cast<std::size_t>(r * q + col)]);
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best == 0.0) return cd{};
        if (pivot != col) {
            for (int k = 0; k < q; ++k) {
                std::swap(m[static_cast<std::size_t>(col * q + k)],
                          m[static_cast<std::size_t>(pivot * q + k)]);
            }
            det = -det;
        }
        const cd d = m[static_cast<std::size_t>(col * q + col)];
        det *= d;
        for (int r = col + 1; r < q; ++r) {
            const cd factor = m[static_cast<std::size_t>(r * q + col)] / d;
            for (int k = col; k < q; ++k) {
                m[static_cast<std::size_t>(r * q + k)] -=
                    factor * m[static_cast<std::size_t>(col * q + k)];
            }
        }
    }
    return det;
}

cd stream_at(std::span<const cd> seq, int index) {
    if (index < 1 || index > static_cast<int>(seq.size())) {
        throw InsufficientCoefficients("coefficient stream too short");
    }
    return seq[static_cast<std::size_t>(index - 1)];
}

} // namespace

cd generic_hankel(std::span<const cd> seq, int q, int n) {
    if (q < 1 || n < 1) throw DomainError("determinant indices must be >= 1");
    std::vector<cd> m(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
            m[static_cast<std::size_t>(i * q + j)] = stream_at(seq, n + i + j);
        }
    }
    return det_small(m, q);
}

cd generic_toeplitz(std::span<const cd> seq, int q, int n) {
    if (q < 1 || n < 1) throw DomainError("determinant indices must be >= 1");
    std::vector<cd> m(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
            m[static_cast<std::size_t>(i * q + j)] = stream_at(seq, n + std::abs(i - j));
        }
    }
    return det_small(m, q);
}

std::vector<cd> a_stream(const CoefficientSet& c) {
    return {cd{1.0, 0.0}, c.a2, c.a3, c.a4, c.a5};
}

std::vector<cd> gamma_stream(const CoefficientSet& c) {
    return {c.gamma1, c.gamma2, c.gamma3};
}

std::vector<cd> inv_gamma_stream(const CoefficientSet& c) {
    return {c.inv_gamma1, c.inv_gamma2, c.inv_gamma3};
}

} // namespace starb
