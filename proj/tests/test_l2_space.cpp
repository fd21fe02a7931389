#include <doctest.h>

#include <random>

#include "cqg/instances.hpp"
#include "cqg/l2_space.hpp"
#include "test_helpers.hpp"

using namespace cqg;
using namespace cqg_test;

namespace {

L2Vector random_vector(const QuantumGroupData& g, std::mt19937_64& rng) {
    L2Vector xi;
    for (const auto& [a, info] : g.irreps)
        for (int i = 0; i < info.dim; ++i)
            for (int j = 0; j < info.dim; ++j) {
                double re = double(rng() >> 11) * 0x1.0p-53;
                double im = double(rng() >> 11) * 0x1.0p-53;
                xi.coeffs[{a, i, j}] = {re, im};
            }
    return xi;
}

}  // namespace

TEST_CASE("inner product") {
    QuantumGroupData g = suq2_truncated(0.5, 2);
    SUBCASE("diagonal values follow the orthogonality relations") {
        // <Lambda(u^1_00), Lambda(u^1_00)> = 1/(lambda_0 d) = 1/(2 * 2.5)
        L2Vector u = basis_vector(g, "1", 0, 0);
        CHECK(inner(g, u, u).real() == doctest::Approx(0.2));
        CHECK(inner(g, u, basis_vector(g, "1", 0, 1)) == cplx(0.0));
        CHECK(inner(g, u, basis_vector(g, "2", 0, 0)) == cplx(0.0));
    }
    SUBCASE("Haar vector is normalized") {
        L2Vector one = basis_vector(g, "0", 0, 0);
        CHECK(inner(g, one, one).real() == doctest::Approx(1.0));
    }
    SUBCASE("characters and quantum characters are orthonormal") {
        for (const auto& a : g.labels())
            for (const auto& b : g.labels()) {
                cplx expected = a == b ? 1.0 : 0.0;
                CHECK(std::abs(inner(g, character_l2(g, a), character_l2(g, b)) - expected) <
                      1e-12);
                CHECK(std::abs(inner(g, quantum_character_l2(g, a),
                                     quantum_character_l2(g, b)) -
                               expected) < 1e-12);
            }
    }
    SUBCASE("linear in the first slot, conjugate-linear in the second") {
        L2Vector u = basis_vector(g, "1", 0, 0);
        L2Vector cu = u;
        cplx c{2.0, -3.0};
        for (auto& [k, v] : cu.coeffs) v *= c;
        CHECK(std::abs(inner(g, cu, u) - c * inner(g, u, u)) < 1e-12);
        CHECK(std::abs(inner(g, u, cu) - std::conj(c) * inner(g, u, u)) < 1e-12);
    }
}

TEST_CASE("a/b transport") {
    QuantumGroupData g = suq2_truncated(0.5, 2);
    SUBCASE("b(a(f)) = f on random elements") {
        std::mt19937_64 rng(2);
        for (int t = 0; t < 50; ++t) {
            L2Vector xi = random_vector(g, rng);
            L1Element f = b_map(g, xi);
            CHECK(coeff_dist(a_map(g, f).coeffs, xi.coeffs) == 0.0);
        }
    }
    SUBCASE("a(phi^triv) is the Haar vector") {
        L1Element haar = basis_functional(g, "0", 0, 0);
        CHECK(coeff_dist(a_map(g, haar).coeffs, basis_vector(g, "0", 0, 0).coeffs) == 0.0);
    }
    SUBCASE("a(phi_q^a) = Lambda(chi_q^a)") {
        for (const auto& a : g.labels())
            CHECK(coeff_dist(a_map(g, quantum_character_l1(g, a)).coeffs,
                             quantum_character_l2(g, a).coeffs) == 0.0);
    }
}

TEST_CASE("L2 convolution") {
    QuantumGroupData g = suq2_truncated(0.5, 3);
    SUBCASE("d Lambda(chi_q) * Lambda(u_kl) = Lambda(u_kl)") {
        for (const auto& a : g.labels()) {
            const int n = g.dim(a);
            const double d = quantum_dimension(g, a);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    L2Vector e = basis_vector(g, a, k, l);
                    L2Vector prod = convolve_l2(g, quantum_character_l2(g, a), e);
                    for (auto& [kk, v] : prod.coeffs) v *= d;
                    CHECK(coeff_dist(prod.coeffs, e.coeffs) < 1e-12);
                }
        }
    }
    SUBCASE("Lambda(chi_q) * Lambda(chi_q) = (1/d) Lambda(chi_q)") {
        for (const auto& a : g.labels()) {
            L2Vector q = quantum_character_l2(g, a);
            L2Vector lhs = convolve_l2(g, q, q);
            L2Vector rhs = q;
            for (auto& [k, v] : rhs.coeffs) v /= quantum_dimension(g, a);
            CHECK(coeff_dist(lhs.coeffs, rhs.coeffs) < 1e-12);
        }
    }
    SUBCASE("Haar vector cuts out the trivial block") {
        L2Vector xi;
        xi.coeffs[{"0", 0, 0}] = {3.0, -1.0};
        xi.coeffs[{"2", 1, 0}] = {1.0, 1.0};
        L2Vector cut = convolve_l2(g, basis_vector(g, "0", 0, 0), xi);
        CHECK(cut.coeffs.size() == 1);
        CHECK(cut.coeffs.at({"0", 0, 0}) == cplx(3.0, -1.0));
    }
}

TEST_CASE("beta2 closed form") {
    QuantumGroupData g = suq2_truncated(0.5, 2);
    SUBCASE("Lambda(u^1_00) projects to 0.2 Lambda(chi^1)") {
        L2Vector out = beta2_haar(g, basis_vector(g, "1", 0, 0));
        L2Vector expected = character_l2(g, "1");
        for (auto& [k, v] : expected.coeffs) v *= 0.2;  // 1/(lambda_0 d) = 1/(2*2.5)
        CHECK(coeff_dist(out.coeffs, expected.coeffs) < 1e-12);
    }
    SUBCASE("off-diagonal basis vectors are annihilated") {
        CHECK(beta2_haar(g, basis_vector(g, "1", 0, 1)).coeffs.empty());
        CHECK(beta2_haar(g, basis_vector(g, "2", 2, 0)).coeffs.empty());
    }
    SUBCASE("characters are fixed") {
        for (const auto& a : g.labels()) {
            L2Vector chi = character_l2(g, a);
            CHECK(coeff_dist(beta2_haar(g, chi).coeffs, chi.coeffs) < 1e-12);
        }
    }
    SUBCASE("agrees with the coproduct route everywhere") {
        std::mt19937_64 rng(13);
        for (const auto& a : g.labels()) {
            const int n = g.dim(a);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    L2Vector e = basis_vector(g, a, i, j);
                    CHECK(coeff_dist(beta2_haar(g, e).coeffs,
                                     beta2_haar_via_coproduct(g, e).coeffs) < 1e-12);
                }
        }
        for (int t = 0; t < 100; ++t) {
            L2Vector xi = random_vector(g, rng);
            CHECK(coeff_dist(beta2_haar(g, xi).coeffs,
                             beta2_haar_via_coproduct(g, xi).coeffs) < 1e-12);
        }
    }
    SUBCASE("idempotent and self-adjoint") {
        std::mt19937_64 rng(19);
        for (int t = 0; t < 50; ++t) {
            L2Vector xi = random_vector(g, rng), eta = random_vector(g, rng);
            L2Vector once = beta2_haar(g, xi);
            CHECK(coeff_dist(beta2_haar(g, once).coeffs, once.coeffs) < 1e-12);
            CHECK(std::abs(inner(g, once, eta) - inner(g, xi, beta2_haar(g, eta))) < 1e-12);
        }
    }
}

TEST_CASE("pq projection") {
    QuantumGroupData g = suq2_truncated(0.5, 2);
    SUBCASE("Lambda(u^1_00) projects to 0.4 Lambda(chi_q^1)") {
        L2Vector out = pq_projection(g, basis_vector(g, "1", 0, 0));
        L2Vector expected = quantum_character_l2(g, "1");
        for (auto& [k, v] : expected.coeffs) v *= 0.4;  // 1/d = 1/2.5
        CHECK(coeff_dist(out.coeffs, expected.coeffs) < 1e-12);
    }
    SUBCASE("quantum characters are fixed points") {
        for (const auto& a : g.labels()) {
            L2Vector q = quantum_character_l2(g, a);
            CHECK(coeff_dist(pq_projection(g, q).coeffs, q.coeffs) < 1e-12);
        }
    }
    SUBCASE("coincides with beta2 on Kac instances") {
        Instance s3 = s3_function_algebra();
        for (const auto& [a, info] : s3.data.irreps)
            for (int i = 0; i < info.dim; ++i)
                for (int j = 0; j < info.dim; ++j) {
                    L2Vector e = basis_vector(s3.data, a, i, j);
                    CHECK(coeff_dist(pq_projection(s3.data, e).coeffs,
                                     beta2_haar(s3.data, e).coeffs) < 1e-12);
                }
    }
    SUBCASE("differs from beta2 off the Kac case") {
        L2Vector e = basis_vector(g, "1", 0, 0);
        CHECK(coeff_dist(pq_projection(g, e).coeffs, beta2_haar(g, e).coeffs) > 1e-3);
    }
    SUBCASE("range is central for L2 convolution, plain characters are not") {
        // At q = 1/2 the quantum characters are central but the plain ones
        // are not: the two projections have genuinely different ranges.
        for (const auto& a : g.labels()) {
            L2Vector q = quantum_character_l2(g, a);
            for (const auto& [b, info] : g.irreps)
                for (int i = 0; i < info.dim; ++i)
                    for (int j = 0; j < info.dim; ++j) {
                        L2Vector e = basis_vector(g, b, i, j);
                        CHECK(coeff_dist(convolve_l2(g, q, e).coeffs,
                                         convolve_l2(g, e, q).coeffs) < 1e-12);
                    }
        }
        L2Vector chi1 = character_l2(g, "1");
        L2Vector witness = basis_vector(g, "1", 0, 1);
        L2Vector comm = convolve_l2(g, chi1, witness);
        add_scaled(comm.coeffs, convolve_l2(g, witness, chi1).coeffs, -1.0);
        CHECK(l2_norm(g, comm) > 10 * 1e-9);
    }
}

TEST_CASE("star map") {
    QuantumGroupData g = suq2_truncated(0.5, 2);
    SUBCASE("characters go to conjugate characters") {
        for (const auto& a : g.labels()) {
            L2Vector lhs = star(g, character_l2(g, a));
            L2Vector rhs = character_l2(g, g.info(a).conjugate);
            CHECK(coeff_dist(lhs.coeffs, rhs.coeffs) < 1e-12);
        }
    }
    SUBCASE("star(Lambda(u^1_01)) = 0.5 Lambda(u^1_10)") {
        // factor sqrt(lambda_1/lambda_0) = 0.5, index reversal swaps 0 and 1
        L2Vector out = star(g, basis_vector(g, "1", 0, 1));
        CHECK(out.coeffs.size() == 1);
        CHECK(coeff_at(out.coeffs, "1", 1, 0).real() == doctest::Approx(0.5));
        // norm consistency: both sides have squared norm 0.2
        CHECK(inner(g, out, out).real() == doctest::Approx(0.2));
        L2Vector in = basis_vector(g, "1", 0, 1);
        CHECK(inner(g, in, in).real() == doctest::Approx(0.2));
    }
    SUBCASE("involution on random vectors") {
        std::mt19937_64 rng(37);
        for (int t = 0; t < 50; ++t) {
            L2Vector xi = random_vector(g, rng);
            CHECK(coeff_dist(star(g, star(g, xi)).coeffs, xi.coeffs) < 1e-12);
        }
    }
    SUBCASE("isometric and tracial on the character span") {
        std::mt19937_64 rng(41);
        for (int t = 0; t < 50; ++t) {
            L2Vector x, y;
            for (const auto& a : g.labels()) {
                double re = double(rng() >> 11) * 0x1.0p-53;
                double im = double(rng() >> 11) * 0x1.0p-53;
                add_scaled(x.coeffs, character_l2(g, a).coeffs, cplx(re, im));
                re = double(rng() >> 11) * 0x1.0p-53;
                im = double(rng() >> 11) * 0x1.0p-53;
                add_scaled(y.coeffs, character_l2(g, a).coeffs, cplx(re, im));
            }
            CHECK(std::abs(l2_norm(g, star(g, x)) - l2_norm(g, x)) < 1e-12);
            CHECK(std::abs(inner(g, y, x) - inner(g, star(g, x), star(g, y))) < 1e-12);
        }
    }
    SUBCASE("not isometric off the character span when q != 1") {
        L2Vector u = basis_vector(g, "1", 0, 0);
        CHECK(std::abs(l2_norm(g, star(g, u)) - l2_norm(g, u)) > 1e-3);
    }
    SUBCASE("dual of Z3: star respects group inversion") {
        QuantumGroupData dz3 = finite_group_dual(cyclic_group(3));
        L2Vector out = star(dz3, basis_vector(dz3, "g1", 0, 0));
        CHECK(coeff_at(out.coeffs, "g2", 0, 0) == cplx(1.0));
    }
}

TEST_CASE("quantum character expansion reproduces vectors") {
    for (const QuantumGroupData& g :
         {suq2_truncated(0.5, 3), s3_function_algebra().data, on_plus_truncated(3, 2)}) {
        std::mt19937_64 rng(43);
        CHECK(expand_quantum_characters(g, L2Vector{}).coeffs.empty());
        for (const auto& [a, info] : g.irreps)
            for (int i = 0; i < info.dim; ++i)
                for (int j = 0; j < info.dim; ++j) {
                    L2Vector e = basis_vector(g, a, i, j);
                    CHECK(coeff_dist(expand_quantum_characters(g, e).coeffs, e.coeffs) < 1e-12);
                }
        for (int t = 0; t < 20; ++t) {
            L2Vector xi = random_vector(g, rng);
            CHECK(coeff_dist(expand_quantum_characters(g, xi).coeffs, xi.coeffs) < 1e-12);
        }
    }
}

TEST_CASE("restriction map") {
    QuantumGroupData g = suq2_truncated(0.5, 2);
    SUBCASE("r(u^1_00) = 0.8 chi^1") {
        CoefficientElement u;
        u.coeffs[{"1", 0, 0}] = 1.0;
        CharacterRingElement out = restrict_r(g, u);
        CHECK(out.coeffs.size() == 1);
        CHECK(out.coeffs.at("1").real() == doctest::Approx(0.8));  // lambda_0/d = 2/2.5
    }
    SUBCASE("off-diagonal coefficients die") {
        CoefficientElement u;
        u.coeffs[{"1", 0, 1}] = 1.0;
        CHECK(restrict_r(g, u).coeffs.empty());
    }
    SUBCASE("characters are fixed and r is idempotent") {
        std::mt19937_64 rng(47);
        for (const auto& a : g.labels()) {
            CharacterRingElement chi = CharacterRingElement::basis(a);
            CharacterRingElement out = restrict_r(g, characters_as_coefficients(g, chi));
            CHECK(out.coeffs.size() == 1);
            CHECK(std::abs(out.coeffs.at(a) - cplx(1.0)) < 1e-12);
        }
        for (int t = 0; t < 20; ++t) {
            CoefficientElement x{random_vector(g, rng).coeffs};
            CharacterRingElement once = restrict_r(g, x);
            CharacterRingElement twice = restrict_r(g, characters_as_coefficients(g, once));
            for (const auto& [a, v] : once.coeffs)
                CHECK(std::abs(v - twice.coeffs.at(a)) < 1e-12);
        }
    }
}

TEST_CASE("b is an algebra homomorphism") {
    QuantumGroupData g = suq2_truncated(0.3, 2);
    std::mt19937_64 rng(53);
    for (int t = 0; t < 25; ++t) {
        L2Vector xi = random_vector(g, rng), eta = random_vector(g, rng);
        L1Element lhs = b_map(g, convolve_l2(g, xi, eta));
        L1Element rhs = convolve(g, b_map(g, xi), b_map(g, eta));
        CHECK(coeff_dist(lhs.coeffs, rhs.coeffs) < 1e-12);
    }
}
