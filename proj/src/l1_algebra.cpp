#include "cqg/l1_algebra.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace cqg {

namespace {

struct BlockTerms {
    IrrepLabel irrep;
    std::vector<std::tuple<int, int, cplx>> terms;
};

std::vector<BlockTerms> split_blocks(const CoeffMap& m) {
    std::vector<BlockTerms> out;
    for (const auto& [k, v] : m) {
        if (out.empty() || out.back().irrep != k.irrep) out.push_back({k.irrep, {}});
        out.back().terms.emplace_back(k.row, k.col, v);
    }
    return out;
}

}  // namespace

void check_support(const QuantumGroupData& g, const CoeffMap& x) {
    for (const auto& [k, v] : x) {
        (void)v;
        const IrrepInfo& info = g.info(k.irrep);
        if (k.row < 0 || k.row >= info.dim || k.col < 0 || k.col >= info.dim)
            throw Error("coefficient index (" + std::to_string(k.row) + ", " +
                        std::to_string(k.col) + ") outside irrep " + k.irrep + " of dim " +
                        std::to_string(info.dim));
    }
}

std::string key_to_string(const CoeffKey& k) {
    std::ostringstream os;
    os << k.irrep << "[" << k.row << "," << k.col << "]";
    return os.str();
}

L1Element basis_functional(const QuantumGroupData& g, const IrrepLabel& a, int i, int j) {
    const IrrepInfo& info = g.info(a);
    if (i < 0 || i >= info.dim || j < 0 || j >= info.dim)
        throw Error("basis index out of range for irrep " + a);
    L1Element f;
    f.coeffs[{a, i, j}] = 1.0;
    return f;
}

L1Element convolve(const QuantumGroupData& g, const L1Element& f, const L1Element& h) {
    L1Element out;
    auto fb = split_blocks(f.coeffs);
    auto hb = split_blocks(h.coeffs);
    auto fi = fb.begin();
    auto hi = hb.begin();
    while (fi != fb.end() && hi != hb.end()) {
        if (fi->irrep < hi->irrep) {
            ++fi;
            continue;
        }
        if (hi->irrep < fi->irrep) {
            ++hi;
            continue;
        }
        const IrrepLabel& a = fi->irrep;
        const IrrepInfo& info = g.info(a);
        const int n = info.dim;
        const double d = quantum_dimension(g, a);
        const std::size_t nf = fi->terms.size(), nh = hi->terms.size();
        if (nf * nh <= static_cast<std::size_t>(n) * n * n) {
            // Sparse pairwise accumulation of
            // phi_{ij} * phi_{kl} = delta_{jk} / (lambda_j d) phi_{il}.
            for (const auto& [i, j, v] : fi->terms) {
                const double w = 1.0 / (info.f_eigenvalues[j] * d);
                for (const auto& [k, l, u] : hi->terms) {
                    if (j != k) continue;
                    add_scaled(out.coeffs, {a, i, l}, v * u * w);
                }
            }
        } else {
            // Dense route: the block product is A * diag(1/(lambda d)) * B.
            Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n), B = Eigen::MatrixXcd::Zero(n, n);
            for (const auto& [i, j, v] : fi->terms) A(i, j) = v;
            for (const auto& [k, l, u] : hi->terms) B(k, l) = u;
            Eigen::VectorXcd D(n);
            for (int j = 0; j < n; ++j) D(j) = 1.0 / (info.f_eigenvalues[j] * d);
            Eigen::MatrixXcd C = A * D.asDiagonal() * B;
            for (int i = 0; i < n; ++i)
                for (int l = 0; l < n; ++l)
                    if (C(i, l) != cplx{0.0, 0.0}) out.coeffs[{a, i, l}] = C(i, l);
        }
        ++fi;
        ++hi;
    }
    return out;
}

L1Element involute(const QuantumGroupData& g, const L1Element& f) {
    (void)g;
    L1Element out;
    for (const auto& [k, v] : f.coeffs) out.coeffs[{k.irrep, k.col, k.row}] = std::conj(v);
    return out;
}

L1Element character_l1(const QuantumGroupData& g, const IrrepLabel& a) {
    const IrrepInfo& info = g.info(a);
    L1Element out;
    for (int i = 0; i < info.dim; ++i) out.coeffs[{a, i, i}] = 1.0;
    return out;
}

L1Element quantum_character_l1(const QuantumGroupData& g, const IrrepLabel& a) {
    const IrrepInfo& info = g.info(a);
    L1Element out;
    for (int i = 0; i < info.dim; ++i) out.coeffs[{a, i, i}] = info.f_eigenvalues[i];
    return out;
}

BlockMatrixFamily lambda_hat(const QuantumGroupData& g, const L1Element& f) {
    BlockMatrixFamily out;
    for (const auto& [k, v] : f.coeffs) {
        const IrrepInfo& info = g.info(k.irrep);
        auto [it, inserted] = out.blocks.emplace(k.irrep, Eigen::MatrixXcd());
        if (inserted) it->second = Eigen::MatrixXcd::Zero(info.dim, info.dim);
        const double d = quantum_dimension(g, k.irrep);
        it->second(k.row, k.col) +=
            v / (d * std::sqrt(info.f_eigenvalues[k.row] * info.f_eigenvalues[k.col]));
    }
    return out;
}

CentralityResult is_central(const QuantumGroupData& g, const L1Element& f, CentralityMode mode) {
    CentralityResult res;
    const double tol = g.tolerance;
    if (mode == CentralityMode::commutator) {
        // Exhaustive commutators against every basis functional of the irreps
        // in f's support; blocks outside the support commute automatically.
        std::vector<IrrepLabel> support;
        for (const auto& [k, v] : f.coeffs) {
            (void)v;
            if (support.empty() || support.back() != k.irrep) support.push_back(k.irrep);
        }
        for (const IrrepLabel& a : support) {
            const int n = g.dim(a);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    L1Element e = basis_functional(g, a, i, j);
                    double res_ij = sup_distance(convolve(g, f, e).coeffs,
                                                 convolve(g, e, f).coeffs);
                    if (res_ij > res.worst_residual) res.worst_residual = res_ij;
                    if (res_ij > tol && res.central) {
                        res.central = false;
                        res.witness = "commutator with phi " + key_to_string({a, i, j});
                    }
                }
            }
        }
        return res;
    }
    // Scalar-blocks mode: every lambda_hat block must be a scalar matrix.
    BlockMatrixFamily bm = lambda_hat(g, f);
    for (const auto& [a, M] : bm.blocks) {
        const int n = static_cast<int>(M.rows());
        cplx s = M.trace() / double(n);
        Eigen::MatrixXcd dev = M - s * Eigen::MatrixXcd::Identity(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                double r = std::abs(dev(i, j));
                if (r > res.worst_residual) res.worst_residual = r;
                if (r > tol && res.central) {
                    res.central = false;
                    res.witness = "non-scalar block entry " + key_to_string({a, i, j});
                }
            }
        }
    }
    return res;
}

L1Element beta1(const QuantumGroupData& g, const L1Element& f) {
    if (!is_kac(g))
        throw NonKacInstance("beta1 requires a Kac instance (tracial Haar state)");
    L1Element out;
    for (const auto& [k, v] : f.coeffs) {
        if (k.row != k.col) continue;
        const int n = g.dim(k.irrep);
        const cplx scale = v / double(n);
        for (int i = 0; i < n; ++i) add_scaled(out.coeffs, {k.irrep, i, i}, scale);
    }
    return out;
}

double l1_norm(const QuantumGroupData& g, const L1Element& f, const NormOracle& oracle) {
    (void)g;
    if (!oracle.l1_norm) throw NoNormOracle("instance provides no L1 norm oracle");
    return oracle.l1_norm(f);
}

}  // namespace cqg
