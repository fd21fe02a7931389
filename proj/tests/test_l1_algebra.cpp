#include <doctest.h>

#include <random>

#include "cqg/instances.hpp"
#include "cqg/l1_algebra.hpp"
#include "test_helpers.hpp"

using namespace cqg;
using namespace cqg_test;

namespace {

L1Element random_element(const QuantumGroupData& g, std::mt19937_64& rng) {
    L1Element f;
    for (const auto& [a, info] : g.irreps)
        for (int i = 0; i < info.dim; ++i)
            for (int j = 0; j < info.dim; ++j) {
                double re = double(rng() >> 11) * 0x1.0p-53;
                double im = double(rng() >> 11) * 0x1.0p-53;
                f.coeffs[{a, i, j}] = {re, im};
            }
    return f;
}

}  // namespace

TEST_CASE("convolution structure constants") {
    SUBCASE("suq2 q=1/2: phi^1_01 * phi^1_10 = 0.8 phi^1_00") {
        QuantumGroupData g = suq2_truncated(0.5, 2);
        L1Element out = convolve(g, basis_functional(g, "1", 0, 1), basis_functional(g, "1", 1, 0));
        CHECK(out.coeffs.size() == 1);
        // 1/(lambda_1 d) = 1/(0.5 * 2.5)
        CHECK(coeff_at(out.coeffs, "1", 0, 0).real() == doctest::Approx(0.8));
    }
    SUBCASE("S3: phi^v_00 * phi^v_01 = 0.5 phi^v_01 (against the function oracle)") {
        Instance s3 = s3_function_algebra();
        L1Element f = basis_functional(s3.data, "v", 0, 0);
        L1Element h = basis_functional(s3.data, "v", 0, 1);
        L1Element got = convolve(s3.data, f, h);
        CHECK(coeff_at(got.coeffs, "v", 0, 1).real() == doctest::Approx(0.5));
        CHECK(coeff_dist(got.coeffs, s3.brute->convolve(f, h).coeffs) < 1e-12);
    }
    SUBCASE("Haar state is idempotent and acts as the trivial-block cut") {
        QuantumGroupData g = suq2_truncated(0.5, 2);
        L1Element haar = basis_functional(g, "0", 0, 0);
        CHECK(coeff_dist(convolve(g, haar, haar).coeffs, haar.coeffs) < 1e-15);
        L1Element f;
        f.coeffs[{"0", 0, 0}] = {2.0, 1.0};
        f.coeffs[{"1", 0, 1}] = {-1.0, 0.5};
        f.coeffs[{"2", 2, 2}] = {0.25, 0.0};
        L1Element cut = convolve(g, haar, f);
        CHECK(cut.coeffs.size() == 1);
        CHECK(coeff_at(cut.coeffs, "0", 0, 0) == cplx(2.0, 1.0));
    }
    SUBCASE("mismatched blocks annihilate") {
        QuantumGroupData g = suq2_truncated(0.5, 2);
        CHECK(convolve(g, basis_functional(g, "1", 0, 0), basis_functional(g, "2", 0, 0))
                  .coeffs.empty());
        CHECK(convolve(g, basis_functional(g, "1", 0, 0), basis_functional(g, "1", 1, 1))
                  .coeffs.empty());
    }
}

TEST_CASE("dense and sparse convolution routes agree") {
    QuantumGroupData g = on_plus_truncated(3, 2);
    std::mt19937_64 rng(7);
    // full-support elements take the dense path; compare against a manual
    // term-by-term evaluation of the structure constants
    L1Element f = random_element(g, rng), h = random_element(g, rng);
    L1Element manual;
    for (const auto& [kf, vf] : f.coeffs)
        for (const auto& [kh, vh] : h.coeffs) {
            if (kf.irrep != kh.irrep || kf.col != kh.row) continue;
            double lam = g.f_eigenvalue(kf.irrep, kf.col);
            double d = quantum_dimension(g, kf.irrep);
            add_scaled(manual.coeffs, {kf.irrep, kf.row, kh.col}, vf * vh / (lam * d));
        }
    CHECK(coeff_dist(convolve(g, f, h).coeffs, manual.coeffs) < 1e-12);
}

TEST_CASE("involution") {
    QuantumGroupData g = suq2_truncated(0.5, 2);
    SUBCASE("transposes indices") {
        L1Element out = involute(g, basis_functional(g, "1", 0, 1));
        CHECK(out.coeffs.size() == 1);
        CHECK(coeff_at(out.coeffs, "1", 1, 0) == cplx(1.0));
    }
    SUBCASE("conjugate-linear on the diagonal") {
        L1Element f;
        f.coeffs[{"1", 0, 0}] = {0.0, 1.0};  // i phi^1_00
        L1Element out = involute(g, f);
        CHECK(coeff_at(out.coeffs, "1", 0, 0) == cplx(0.0, -1.0));
    }
    SUBCASE("involutive and anti-multiplicative on random elements") {
        std::mt19937_64 rng(11);
        for (int t = 0; t < 25; ++t) {
            L1Element f = random_element(g, rng), h = random_element(g, rng);
            CHECK(coeff_dist(involute(g, involute(g, f)).coeffs, f.coeffs) < 1e-12);
            L1Element lhs = involute(g, convolve(g, f, h));
            L1Element rhs = convolve(g, involute(g, h), involute(g, f));
            CHECK(coeff_dist(lhs.coeffs, rhs.coeffs) < 1e-12);
        }
    }
}

TEST_CASE("characters and quantum characters") {
    SUBCASE("trivial irrep: both equal the Haar functional") {
        QuantumGroupData g = trivial_instance();
        CHECK(coeff_dist(character_l1(g, "triv").coeffs,
                         quantum_character_l1(g, "triv").coeffs) == 0.0);
    }
    SUBCASE("suq2 q=1/2 spin 1: phi_q = 2 phi_00 + 0.5 phi_11") {
        QuantumGroupData g = suq2_truncated(0.5, 1);
        L1Element q = quantum_character_l1(g, "1");
        CHECK(q.coeffs.size() == 2);
        CHECK(coeff_at(q.coeffs, "1", 0, 0).real() == doctest::Approx(2.0));
        CHECK(coeff_at(q.coeffs, "1", 1, 1).real() == doctest::Approx(0.5));
    }
    SUBCASE("Kac instances: quantum character equals the plain character") {
        Instance s3 = s3_function_algebra();
        for (const auto& a : s3.data.labels())
            CHECK(coeff_dist(character_l1(s3.data, a).coeffs,
                             quantum_character_l1(s3.data, a).coeffs) == 0.0);
    }
    SUBCASE("idempotency: phi_q * phi_q = (1/d) phi_q") {
        QuantumGroupData g = suq2_truncated(0.3, 3);
        for (const auto& a : g.labels()) {
            L1Element q = quantum_character_l1(g, a);
            L1Element lhs = convolve(g, q, q);
            L1Element rhs = q;
            for (auto& [k, v] : rhs.coeffs) v /= quantum_dimension(g, a);
            CHECK(coeff_dist(lhs.coeffs, rhs.coeffs) < 1e-12);
        }
    }
    SUBCASE("two-sided action: phi_q^a * phi^b_kl = phi^b_kl * phi_q^a = (delta/d) phi^b_kl") {
        QuantumGroupData g = suq2_truncated(0.5, 2);
        L1Element q1 = quantum_character_l1(g, "1");
        L1Element e = basis_functional(g, "1", 0, 1);
        L1Element expected = e;
        for (auto& [k, v] : expected.coeffs) v /= quantum_dimension(g, "1");
        CHECK(coeff_dist(convolve(g, q1, e).coeffs, expected.coeffs) < 1e-12);
        CHECK(coeff_dist(convolve(g, e, q1).coeffs, expected.coeffs) < 1e-12);
        L1Element cross = basis_functional(g, "2", 1, 1);
        CHECK(convolve(g, q1, cross).coeffs.empty());
    }
}

TEST_CASE("lambda_hat") {
    QuantumGroupData g = suq2_truncated(0.5, 2);
    SUBCASE("quantum character maps to (1/d) identity on its block") {
        BlockMatrixFamily bm = lambda_hat(g, quantum_character_l1(g, "1"));
        Eigen::MatrixXcd expected = Eigen::MatrixXcd::Identity(2, 2) / 2.5;
        CHECK((bm.block_or_zero(g, "1") - expected).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(bm.block_or_zero(g, "2").cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("matrix-unit block relation") {
        // lambda(phi_ij) lambda(phi_jl) = (1/(lambda_j d)) lambda(phi_il)
        BlockMatrixFamily m01 = lambda_hat(g, basis_functional(g, "1", 0, 1));
        BlockMatrixFamily m10 = lambda_hat(g, basis_functional(g, "1", 1, 0));
        BlockMatrixFamily m00 = lambda_hat(g, basis_functional(g, "1", 0, 0));
        Eigen::MatrixXcd prod = m01.block_or_zero(g, "1") * m10.block_or_zero(g, "1");
        double lam1 = g.f_eigenvalue("1", 1);
        Eigen::MatrixXcd expected = m00.block_or_zero(g, "1") / (lam1 * 2.5);
        CHECK((prod - expected).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("zero element maps to zero blocks") {
        CHECK(lambda_hat(g, L1Element{}).blocks.empty());
    }
    SUBCASE("homomorphism and star on random elements") {
        std::mt19937_64 rng(5);
        for (int t = 0; t < 25; ++t) {
            L1Element f = random_element(g, rng), h = random_element(g, rng);
            BlockMatrixFamily lf = lambda_hat(g, f), lh = lambda_hat(g, h);
            BlockMatrixFamily conv = lambda_hat(g, convolve(g, f, h));
            for (const auto& a : g.labels()) {
                Eigen::MatrixXcd prod = lf.block_or_zero(g, a) * lh.block_or_zero(g, a);
                CHECK((prod - conv.block_or_zero(g, a)).cwiseAbs().maxCoeff() < 1e-12);
            }
            BlockMatrixFamily inv = lambda_hat(g, involute(g, f));
            for (const auto& a : g.labels())
                CHECK((lf.block_or_zero(g, a).adjoint() - inv.block_or_zero(g, a))
                          .cwiseAbs()
                          .maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("centrality") {
    QuantumGroupData g = suq2_truncated(0.5, 2);
    SUBCASE("quantum characters are central in both modes") {
        for (const auto& a : g.labels()) {
            L1Element q = quantum_character_l1(g, a);
            CHECK(is_central(g, q, CentralityMode::commutator).central);
            CHECK(is_central(g, q, CentralityMode::scalar_blocks).central);
        }
    }
    SUBCASE("plain character fails off the Kac case, witness phi^1_01") {
        L1Element chi = character_l1(g, "1");
        CentralityResult comm = is_central(g, chi, CentralityMode::commutator);
        CHECK_FALSE(comm.central);
        CHECK(comm.witness.find("1[0,1]") != std::string::npos);
        // left product (1/(lambda_0 d)) phi_01 vs right (1/(lambda_1 d)) phi_01
        L1Element e = basis_functional(g, "1", 0, 1);
        cplx left = coeff_at(convolve(g, chi, e).coeffs, "1", 0, 1);
        cplx right = coeff_at(convolve(g, e, chi).coeffs, "1", 0, 1);
        CHECK(left.real() == doctest::Approx(1.0 / (2.0 * 2.5)));
        CHECK(right.real() == doctest::Approx(1.0 / (0.5 * 2.5)));
        CHECK_FALSE(is_central(g, chi, CentralityMode::scalar_blocks).central);
    }
    SUBCASE("duals of abelian groups are wholly central") {
        QuantumGroupData dz4 = finite_group_dual(cyclic_group(4));
        std::mt19937_64 rng(3);
        for (int t = 0; t < 10; ++t) {
            L1Element f = random_element(dz4, rng);
            CHECK(is_central(dz4, f, CentralityMode::commutator).central);
            CHECK(is_central(dz4, f, CentralityMode::scalar_blocks).central);
        }
    }
    SUBCASE("modes agree on random elements") {
        std::mt19937_64 rng(17);
        for (int t = 0; t < 10; ++t) {
            L1Element f = random_element(g, rng);
            CHECK(is_central(g, f, CentralityMode::commutator).central ==
                  is_central(g, f, CentralityMode::scalar_blocks).central);
        }
    }
}

TEST_CASE("beta1") {
    Instance s3 = s3_function_algebra();
    const QuantumGroupData& g = s3.data;
    SUBCASE("phi^v_00 averages to half the character") {
        L1Element out = beta1(g, basis_functional(g, "v", 0, 0));
        CHECK(out.coeffs.size() == 2);
        CHECK(coeff_at(out.coeffs, "v", 0, 0).real() == doctest::Approx(0.5));
        CHECK(coeff_at(out.coeffs, "v", 1, 1).real() == doctest::Approx(0.5));
        // class-averaging oracle agrees
        CHECK(coeff_dist(out.coeffs, s3.brute->beta1(basis_functional(g, "v", 0, 0)).coeffs) <
              1e-12);
    }
    SUBCASE("off-diagonal coefficients vanish") {
        L1Element out = beta1(g, basis_functional(g, "v", 0, 1));
        CHECK(out.coeffs.empty());
        CHECK(s3.brute->beta1(basis_functional(g, "v", 0, 1)).coeffs.empty());
    }
    SUBCASE("already-central elements are fixed") {
        L1Element triv = basis_functional(g, "t", 0, 0);
        CHECK(coeff_dist(beta1(g, triv).coeffs, triv.coeffs) < 1e-15);
    }
    SUBCASE("idempotent and a module map over the center") {
        std::mt19937_64 rng(23);
        for (int t = 0; t < 25; ++t) {
            L1Element f = random_element(g, rng);
            L1Element once = beta1(g, f);
            CHECK(coeff_dist(beta1(g, once).coeffs, once.coeffs) < 1e-12);
            L1Element central;
            for (const auto& a : g.labels()) {
                double re = double(rng() >> 11) * 0x1.0p-53;
                add_scaled(central.coeffs, character_l1(g, a).coeffs, cplx(re, -re));
            }
            L1Element lhs = beta1(g, convolve(g, central, f));
            L1Element rhs = convolve(g, central, beta1(g, f));
            CHECK(coeff_dist(lhs.coeffs, rhs.coeffs) < 1e-12);
        }
    }
    SUBCASE("rejects non-Kac instances") {
        QuantumGroupData q = suq2_truncated(0.5, 2);
        CHECK_THROWS_AS(beta1(q, basis_functional(q, "1", 0, 0)), NonKacInstance);
    }
}

TEST_CASE("l1_norm") {
    Instance s3 = s3_function_algebra();
    const QuantumGroupData& g = s3.data;
    SUBCASE("values through the oracle") {
        CHECK(l1_norm(g, basis_functional(g, "t", 0, 0), *s3.norms) == doctest::Approx(1.0));
        CHECK(l1_norm(g, L1Element{}, *s3.norms) == doctest::Approx(0.0));
    }
    SUBCASE("beta1 is contractive on 100 seeded random elements") {
        std::mt19937_64 rng(42);
        for (int t = 0; t < 100; ++t) {
            L1Element f = random_element(g, rng);
            CHECK(l1_norm(g, beta1(g, f), *s3.norms) <= l1_norm(g, f, *s3.norms) + 1e-9);
        }
    }
    SUBCASE("missing oracle throws") {
        NormOracle empty;
        CHECK_THROWS_AS(l1_norm(g, L1Element{}, empty), NoNormOracle);
    }
}

TEST_CASE("convolution associativity on every built-in family") {
    std::mt19937_64 rng(29);
    for (const QuantumGroupData& g :
         {s3_function_algebra().data, finite_group_dual(symmetric_group_3()),
          suq2_truncated(0.3, 3), on_plus_truncated(3, 2)}) {
        for (int t = 0; t < 10; ++t) {
            L1Element f = random_element(g, rng), h = random_element(g, rng),
                      k = random_element(g, rng);
            L1Element lhs = convolve(g, convolve(g, f, h), k);
            L1Element rhs = convolve(g, f, convolve(g, h, k));
            CHECK(coeff_dist(lhs.coeffs, rhs.coeffs) < 1e-9);
        }
    }
}

TEST_CASE("master oracle test: structure constants vs brute force on the full basis") {
    Instance s3 = s3_function_algebra();
    const QuantumGroupData& g = s3.data;
    std::vector<CoeffKey> window;
    for (const auto& [a, info] : g.irreps)
        for (int i = 0; i < info.dim; ++i)
            for (int j = 0; j < info.dim; ++j) window.push_back({a, i, j});
    for (const auto& k1 : window)
        for (const auto& k2 : window) {
            L1Element f = basis_functional(g, k1.irrep, k1.row, k1.col);
            L1Element h = basis_functional(g, k2.irrep, k2.row, k2.col);
            CHECK(coeff_dist(convolve(g, f, h).coeffs, s3.brute->convolve(f, h).coeffs) < 1e-9);
        }
    std::mt19937_64 rng(31);
    for (int t = 0; t < 100; ++t) {
        L1Element f = random_element(g, rng), h = random_element(g, rng);
        CHECK(coeff_dist(convolve(g, f, h).coeffs, s3.brute->convolve(f, h).coeffs) < 1e-9);
    }
}
