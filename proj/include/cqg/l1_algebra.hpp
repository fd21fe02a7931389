#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>

#include "cqg/elements.hpp"
#include "cqg/fusion_data.hpp"

namespace cqg {

/// One n_a x n_a complex block per irrep: the image of an L1 element under
/// the left regular representation, L-infinity of the dual being the direct
/// sum of the matrix algebras M_{n_a}.
struct BlockMatrixFamily {
    std::map<IrrepLabel, Eigen::MatrixXcd> blocks;

    /// Block at `a`, materializing a zero block of the right size on demand.
    Eigen::MatrixXcd block_or_zero(const QuantumGroupData& g, const IrrepLabel& a) const {
        auto it = blocks.find(a);
        if (it != blocks.end()) return it->second;
        int n = g.dim(a);
        return Eigen::MatrixXcd::Zero(n, n);
    }
};

/// phi^a_{ij} as an element.
L1Element basis_functional(const QuantumGroupData& g, const IrrepLabel& a, int i, int j);

/// Convolution on the coefficient basis. The product is block-diagonal with
/// structure constants
///   phi^a_{ij} * phi^b_{kl} = delta_{ab} delta_{jk} (1 / (lambda_j d_a)) phi^a_{il},
/// extended bilinearly; the support never leaves the participating irreps,
/// so convolution cannot trigger truncation.
L1Element convolve(const QuantumGroupData& g, const L1Element& f, const L1Element& h);

/// The involution f -> f^o, conjugate-linear with
/// (c phi^a_{ij})^o = conj(c) phi^a_{ji}.
L1Element involute(const QuantumGroupData& g, const L1Element& f);

/// phi^a = sum_i phi^a_{ii}, the character of `a` as an L1 element.
L1Element character_l1(const QuantumGroupData& g, const IrrepLabel& a);

/// phi_q^a = sum_i lambda_i phi^a_{ii}, the quantum character of `a`.
L1Element quantum_character_l1(const QuantumGroupData& g, const IrrepLabel& a);

/// Left regular representation on the dual block picture: phi^a_{ij} maps to
/// E_{ij} / (d_a sqrt(lambda_i lambda_j)) in block a. Linear, multiplicative
/// under convolution, and a *-map for the involution.
BlockMatrixFamily lambda_hat(const QuantumGroupData& g, const L1Element& f);

enum class CentralityMode { commutator, scalar_blocks };

struct CentralityResult {
    bool central = true;
    double worst_residual = 0.0;
    std::string witness;  // first violated pair / block entry
};

/// Decides whether f lies in the center of the convolution algebra.
/// Commutator mode checks f * phi^a_{ij} == phi^a_{ij} * f exhaustively over
/// every basis functional of the irreps in f's support (blocks outside the
/// support commute automatically); scalar-blocks mode checks that every
/// lambda_hat(f) block is a scalar multiple of the identity. The two modes
/// agree on all inputs and are cross-validated by the verification suite.
CentralityResult is_central(const QuantumGroupData& g, const L1Element& f, CentralityMode mode);

/// The central projection on Kac instances,
///   beta1(phi^a_{ij}) = (delta_{ij} / n_a) phi^a.
/// Idempotent with range span{phi^a}, and a module map over the center:
/// beta1(f * h) = f * beta1(h) for central f. Throws NonKacInstance when
/// some F-eigenvalue differs from 1.
L1Element beta1(const QuantumGroupData& g, const L1Element& f);

/// L1 norm through the instance oracle. Throws NoNormOracle when the oracle
/// has no l1_norm capability.
double l1_norm(const QuantumGroupData& g, const L1Element& f, const NormOracle& oracle);

}  // namespace cqg
