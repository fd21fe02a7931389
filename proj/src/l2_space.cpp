#include "cqg/l2_space.hpp"

#include <cmath>

namespace cqg {

L2Vector basis_vector(const QuantumGroupData& g, const IrrepLabel& a, int i, int j) {
    const IrrepInfo& info = g.info(a);
    if (i < 0 || i >= info.dim || j < 0 || j >= info.dim)
        throw Error("basis index out of range for irrep " + a);
    L2Vector xi;
    xi.coeffs[{a, i, j}] = 1.0;
    return xi;
}

L2Vector character_l2(const QuantumGroupData& g, const IrrepLabel& a) {
    L2Vector xi;
    for (int i = 0; i < g.dim(a); ++i) xi.coeffs[{a, i, i}] = 1.0;
    return xi;
}

L2Vector quantum_character_l2(const QuantumGroupData& g, const IrrepLabel& a) {
    const IrrepInfo& info = g.info(a);
    L2Vector xi;
    for (int i = 0; i < info.dim; ++i) xi.coeffs[{a, i, i}] = info.f_eigenvalues[i];
    return xi;
}

cplx inner(const QuantumGroupData& g, const L2Vector& xi, const L2Vector& eta) {
    // <Lambda(u^a_{ij}), Lambda(u^a_{ij})> = 1 / (lambda_i d_a); supports are
    // sorted, so a merge picks out the shared keys.
    cplx acc = 0.0;
    auto ix = xi.coeffs.begin();
    auto iy = eta.coeffs.begin();
    IrrepLabel cached_label;
    double cached_d = 0.0;
    const IrrepInfo* cached_info = nullptr;
    while (ix != xi.coeffs.end() && iy != eta.coeffs.end()) {
        if (ix->first < iy->first) {
            ++ix;
        } else if (iy->first < ix->first) {
            ++iy;
        } else {
            const CoeffKey& k = ix->first;
            if (!cached_info || cached_label != k.irrep) {
                cached_label = k.irrep;
                cached_info = &g.info(k.irrep);
                cached_d = quantum_dimension(g, k.irrep);
            }
            acc += ix->second * std::conj(iy->second) /
                   (cached_info->f_eigenvalues[k.row] * cached_d);
            ++ix;
            ++iy;
        }
    }
    return acc;
}

double l2_norm(const QuantumGroupData& g, const L2Vector& xi) {
    return std::sqrt(std::max(0.0, inner(g, xi, xi).real()));
}

L2Vector a_map(const QuantumGroupData& g, const L1Element& f) {
    (void)g;
    return L2Vector{f.coeffs};
}

L1Element b_map(const QuantumGroupData& g, const L2Vector& xi) {
    (void)g;
    return L1Element{xi.coeffs};
}

L2Vector convolve_l2(const QuantumGroupData& g, const L2Vector& xi, const L2Vector& eta) {
    return a_map(g, convolve(g, b_map(g, xi), b_map(g, eta)));
}

L2Vector beta2_haar(const QuantumGroupData& g, const L2Vector& xi) {
    // Per block, the diagonal terms land on Lambda(chi^a) with weight
    // 1 / (lambda_k d_a); off-diagonal terms are annihilated.
    std::map<IrrepLabel, cplx> char_coeff;
    for (const auto& [k, v] : xi.coeffs) {
        if (k.row != k.col) continue;
        const IrrepInfo& info = g.info(k.irrep);
        char_coeff[k.irrep] +=
            v / (info.f_eigenvalues[k.row] * quantum_dimension(g, k.irrep));
    }
    L2Vector out;
    for (const auto& [a, c] : char_coeff) {
        if (c == cplx{0.0, 0.0}) continue;
        for (int i = 0; i < g.dim(a); ++i) add_scaled(out.coeffs, {a, i, i}, c);
    }
    return out;
}

L2Vector beta2_haar_via_coproduct(const QuantumGroupData& g, const L2Vector& xi) {
    // Lambda(u_{ij}) -> sum_k lambda(phi_{kj}) Lambda(u_{ik}) with
    // lambda(f) Lambda(x) = a(f * (x . phi)), evaluated through the actual
    // convolution rather than the closed form.
    L2Vector out;
    for (const auto& [key, v] : xi.coeffs) {
        const int n = g.dim(key.irrep);
        for (int k = 0; k < n; ++k) {
            L1Element left = basis_functional(g, key.irrep, k, key.col);
            L1Element right = basis_functional(g, key.irrep, key.row, k);
            L2Vector term = a_map(g, convolve(g, left, right));
            add_scaled(out.coeffs, term.coeffs, v);
        }
    }
    return out;
}

L2Vector pq_projection(const QuantumGroupData& g, const L2Vector& xi) {
    std::map<IrrepLabel, cplx> qchar_coeff;
    for (const auto& [k, v] : xi.coeffs) {
        if (k.row != k.col) continue;
        qchar_coeff[k.irrep] += v / quantum_dimension(g, k.irrep);
    }
    L2Vector out;
    for (const auto& [a, c] : qchar_coeff) {
        if (c == cplx{0.0, 0.0}) continue;
        const IrrepInfo& info = g.info(a);
        for (int i = 0; i < info.dim; ++i)
            add_scaled(out.coeffs, {a, i, i}, c * info.f_eigenvalues[i]);
    }
    return out;
}

L2Vector star(const QuantumGroupData& g, const L2Vector& xi) {
    L2Vector out;
    for (const auto& [k, v] : xi.coeffs) {
        const IrrepInfo& info = g.info(k.irrep);
        const double factor =
            std::sqrt(info.f_eigenvalues[k.col] / info.f_eigenvalues[k.row]);
        const int si = info.conj_index_map.at(k.row);
        const int sj = info.conj_index_map.at(k.col);
        add_scaled(out.coeffs, {info.conjugate, si, sj}, std::conj(v) * factor);
    }
    return out;
}

L2Vector expand_quantum_characters(const QuantumGroupData& g, const L2Vector& xi) {
    L2Vector out;
    for (const auto& [a, info] : g.irreps) {
        (void)info;
        L2Vector term = convolve_l2(g, quantum_character_l2(g, a), xi);
        add_scaled(out.coeffs, term.coeffs, quantum_dimension(g, a));
    }
    return out;
}

CharacterRingElement restrict_r(const QuantumGroupData& g, const CoefficientElement& x) {
    CharacterRingElement out;
    for (const auto& [k, v] : x.coeffs) {
        if (k.row != k.col) continue;
        const IrrepInfo& info = g.info(k.irrep);
        cplx c = out.coeffs[k.irrep] +=
            v * info.f_eigenvalues[k.row] / quantum_dimension(g, k.irrep);
        if (c == cplx{0.0, 0.0}) out.coeffs.erase(k.irrep);
    }
    return out;
}

CoefficientElement characters_as_coefficients(const QuantumGroupData& g,
                                              const CharacterRingElement& x) {
    CoefficientElement out;
    for (const auto& [a, c] : x.coeffs)
        for (int i = 0; i < g.dim(a); ++i) add_scaled(out.coeffs, {a, i, i}, c);
    return out;
}

}  // namespace cqg
