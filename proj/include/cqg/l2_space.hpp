#pragma once

#include "cqg/elements.hpp"
#include "cqg/fusion_data.hpp"
#include "cqg/l1_algebra.hpp"

namespace cqg {

/// Lambda(u^a_{ij}) as a vector.
L2Vector basis_vector(const QuantumGroupData& g, const IrrepLabel& a, int i, int j);

/// Lambda(chi^a) = sum_i Lambda(u^a_{ii}).
L2Vector character_l2(const QuantumGroupData& g, const IrrepLabel& a);

/// Lambda(chi_q^a) = sum_i lambda_i Lambda(u^a_{ii}); a unit vector.
L2Vector quantum_character_l2(const QuantumGroupData& g, const IrrepLabel& a);

/// Peter-Weyl inner product,
///   <Lambda(u^a_{ij}), Lambda(u^b_{kl})> = delta_ab delta_ik delta_jl / (lambda_i d_a).
/// Linear in the FIRST argument, conjugate-linear in the second.
cplx inner(const QuantumGroupData& g, const L2Vector& xi, const L2Vector& eta);

double l2_norm(const QuantumGroupData& g, const L2Vector& xi);

/// The transport maps between L1 and L2: a reads phi^a_{ij}-coefficients as
/// Lambda(u^a_{ij})-coefficients (a(x.phi) = Lambda(x)); b is its inverse on
/// the finite span, b(a(f)) = f.
L2Vector a_map(const QuantumGroupData& g, const L1Element& f);
L1Element b_map(const QuantumGroupData& g, const L2Vector& xi);

/// Banach algebra product on L2, xi * eta = a(b(xi) * b(eta)).
L2Vector convolve_l2(const QuantumGroupData& g, const L2Vector& xi, const L2Vector& eta);

/// The conjugation projection at the Haar state, in closed form:
///   Lambda(u^a_{kl}) -> (delta_kl / (lambda_k d_a)) Lambda(chi^a).
/// Orthogonal projection onto span{Lambda(chi^a)}, the central vectors.
L2Vector beta2_haar(const QuantumGroupData& g, const L2Vector& xi);

/// Independent route to the same projection through the coproduct:
///   Lambda(u^a_{ij}) -> sum_k lambda-hat(phi^a_{kj}) Lambda(u^a_{ik})
///                     = sum_k a(phi^a_{kj} * phi^a_{ik}),
/// evaluated term by term with the convolution machinery rather than the
/// closed form. Kept as a cross-check; must agree with beta2_haar.
L2Vector beta2_haar_via_coproduct(const QuantumGroupData& g, const L2Vector& xi);

/// Orthogonal projection onto span{Lambda(chi_q^a)} — the center of the
/// Banach algebra L2 at this truncation:
///   Lambda(u^a_{kl}) -> (delta_kl / d_a) Lambda(chi_q^a).
/// Fixed-point projection of the second conjugation representation; on Kac
/// instances it coincides with beta2_haar.
L2Vector pq_projection(const QuantumGroupData& g, const L2Vector& xi);

/// The star map Lambda(x) -> Lambda(x^*) on the coefficient span:
///   Lambda(u^a_{ij})^* = sqrt(lambda_j / lambda_i) Lambda(u^conj(a)_{sigma(i) sigma(j)}),
/// conjugate-linear, an involution, sends Lambda(chi^a) to Lambda(chi^conj(a)),
/// and is isometric on the character span.
L2Vector star(const QuantumGroupData& g, const L2Vector& xi);

/// The block expansion xi = sum_a d_a Lambda(chi_q^a) * xi, summed over the
/// whole window with convolve_l2. Reproduces xi exactly on finite support;
/// exposed as a verification operation.
L2Vector expand_quantum_characters(const QuantumGroupData& g, const L2Vector& xi);

/// Restriction onto the character subalgebra,
///   r(u^a_{ij}) = delta_ij (lambda_i / d_a) chi^a,
/// landing in the character ring so that r . r = r is a typed identity.
CharacterRingElement restrict_r(const QuantumGroupData& g, const CoefficientElement& x);

/// chi^a (or a combination) as a coefficient element, sum_i u^a_{ii}; used to
/// feed character-ring output back through r.
CoefficientElement characters_as_coefficients(const QuantumGroupData& g,
                                              const CharacterRingElement& x);

}  // namespace cqg
