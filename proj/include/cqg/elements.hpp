#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <string>

#include "cqg/fusion_data.hpp"

namespace cqg {

/// Index of one matrix-coefficient basis slot (alpha, i, j), 0-based.
struct CoeffKey {
    IrrepLabel irrep;
    int row = 0;
    int col = 0;

    friend bool operator<(const CoeffKey& a, const CoeffKey& b) {
        if (a.irrep != b.irrep) return a.irrep < b.irrep;
        if (a.row != b.row) return a.row < b.row;
        return a.col < b.col;
    }
    friend bool operator==(const CoeffKey& a, const CoeffKey& b) {
        return a.irrep == b.irrep && a.row == b.row && a.col == b.col;
    }
};

using CoeffMap = std::map<CoeffKey, cplx>;

/// Finite combination of the L1 basis functionals phi^a_{ij} = u^a_{ij} . phi.
struct L1Element {
    CoeffMap coeffs;
};

/// Finite combination of the L2 vectors Lambda(u^a_{ij}).
struct L2Vector {
    CoeffMap coeffs;
};

/// Finite combination of the coefficients u^a_{ij} themselves (the dense
/// Hopf *-algebra side; input type of the restriction map).
struct CoefficientElement {
    CoeffMap coeffs;
};

inline void add_scaled(CoeffMap& acc, const CoeffKey& k, cplx v) {
    if (v == cplx{0.0, 0.0}) return;
    auto [it, inserted] = acc.emplace(k, v);
    if (!inserted) {
        it->second += v;
        if (it->second == cplx{0.0, 0.0}) acc.erase(it);
    }
}

inline void add_scaled(CoeffMap& acc, const CoeffMap& other, cplx scale = 1.0) {
    for (const auto& [k, v] : other) add_scaled(acc, k, scale * v);
}

/// max_k |x_k - y_k| over the union of supports.
inline double sup_distance(const CoeffMap& x, const CoeffMap& y) {
    double worst = 0.0;
    auto ix = x.begin();
    auto iy = y.begin();
    while (ix != x.end() || iy != y.end()) {
        if (iy == y.end() || (ix != x.end() && ix->first < iy->first)) {
            worst = std::max(worst, std::abs(ix->second));
            ++ix;
        } else if (ix == x.end() || iy->first < ix->first) {
            worst = std::max(worst, std::abs(iy->second));
            ++iy;
        } else {
            worst = std::max(worst, std::abs(ix->second - iy->second));
            ++ix;
            ++iy;
        }
    }
    return worst;
}

inline double sup_norm(const CoeffMap& x) {
    double worst = 0.0;
    for (const auto& [k, v] : x) worst = std::max(worst, std::abs(v));
    return worst;
}

/// Throws when some key references an unknown irrep or an index outside its
/// dimension.
void check_support(const QuantumGroupData& g, const CoeffMap& x);

std::string key_to_string(const CoeffKey& k);

/// Instance-supplied norm capability. Present only where an instance can
/// honestly realize its elements (finite group function algebras, duals of
/// finite groups); no generic norm is fabricated.
struct NormOracle {
    std::function<double(const L1Element&)> l1_norm;
    std::function<double(const CoefficientElement&)> linf_norm;
};

/// Instance-supplied brute-force oracle computing convolution, the central
/// projection and Haar pairings directly on the realized object (honest
/// functions on a finite group), independent of structure constants.
struct BruteForceOracle {
    std::function<L1Element(const L1Element&, const L1Element&)> convolve;
    std::function<L1Element(const L1Element&)> beta1;
    /// phi((u^b_{kl})^* u^a_{ij}) computed from the realized coefficients.
    std::function<cplx(const CoeffKey&, const CoeffKey&)> haar_pairing;
};

}  // namespace cqg
