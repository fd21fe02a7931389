#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "cqg/elements.hpp"
#include "cqg/fusion_data.hpp"

namespace cqg_test {

using cqg::cplx;

/// q-integer [k]_q = (q^k - q^{-k}) / (q - q^{-1}); independent route to the
/// SU_q(2) quantum dimensions.
inline double q_integer(double q, int k) {
    if (q == 1.0) return static_cast<double>(k);
    return (std::pow(q, k) - std::pow(q, -k)) / (q - 1.0 / q);
}

/// Hand-frozen character table of S3 on the classes {e}, {3-cycles},
/// {transpositions} with sizes 1, 2, 3, in the order t, s, v.
struct S3CharacterTable {
    // rows: irreps t, s, v; columns: classes e, cyc, transp
    static constexpr double table[3][3] = {
        {1.0, 1.0, 1.0},
        {1.0, 1.0, -1.0},
        {2.0, -1.0, 0.0},
    };
    static constexpr int class_size[3] = {1, 2, 3};

    /// N^c_{ab} = (1/6) sum over classes of |cl| chi_a chi_b chi_c.
    static int fusion(int a, int b, int c) {
        double acc = 0.0;
        for (int k = 0; k < 3; ++k)
            acc += class_size[k] * table[a][k] * table[b][k] * table[c][k];
        acc /= 6.0;
        double rounded = std::round(acc);
        if (std::abs(acc - rounded) > 1e-12) return -1;
        return static_cast<int>(rounded);
    }
};

/// Clebsch-Gordan multiplicity for spins a, b, c (integer labels), the rule
/// used to cross-check the suq2/onplus fusion tables.
inline int clebsch_gordan_mult(int a, int b, int c) {
    return (std::abs(a - b) <= c && c <= a + b && (a + b + c) % 2 == 0) ? 1 : 0;
}

inline double coeff_dist(const cqg::CoeffMap& x, const cqg::CoeffMap& y) {
    return cqg::sup_distance(x, y);
}

inline cplx coeff_at(const cqg::CoeffMap& m, const cqg::IrrepLabel& a, int i, int j) {
    auto it = m.find({a, i, j});
    return it == m.end() ? cplx(0.0) : it->second;
}

}  // namespace cqg_test
