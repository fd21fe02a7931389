#include "cqg/instances.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <numeric>
#include <sstream>

#include "cqg/l1_algebra.hpp"
#include "cqg/serialization.hpp"

namespace cqg {

// ---------------------------------------------------------------------------
// Finite group presentations
// ---------------------------------------------------------------------------

int FiniteGroupPresentation::inverse(int a) const {
    for (int b = 0; b < order(); ++b)
        if (mul(a, b) == identity) return b;
    throw InvalidGroupTable("element " + elements[a] + " has no inverse");
}

int FiniteGroupPresentation::index_of(const std::string& token) const {
    auto it = std::find(elements.begin(), elements.end(), token);
    if (it == elements.end()) throw InvalidGroupTable("unknown group element: " + token);
    return static_cast<int>(it - elements.begin());
}

void FiniteGroupPresentation::check() const {
    const int n = order();
    if (n == 0) throw InvalidGroupTable("empty element list");
    if (static_cast<int>(multiplication.size()) != n)
        throw InvalidGroupTable("multiplication table has wrong row count");
    for (const auto& row : multiplication) {
        if (static_cast<int>(row.size()) != n)
            throw InvalidGroupTable("multiplication table has wrong column count");
        for (int v : row)
            if (v < 0 || v >= n) throw InvalidGroupTable("table entry out of range");
    }
    if (identity < 0 || identity >= n) throw InvalidGroupTable("identity index out of range");
    for (int a = 0; a < n; ++a)
        if (mul(identity, a) != a || mul(a, identity) != a)
            throw InvalidGroupTable("identity axiom fails at " + elements[a]);
    for (int a = 0; a < n; ++a) {
        bool has_inverse = false;
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == identity && mul(b, a) == identity) has_inverse = true;
        if (!has_inverse) throw InvalidGroupTable("no inverse for " + elements[a]);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw InvalidGroupTable("associativity fails at (" + elements[a] + ", " +
                                            elements[b] + ", " + elements[c] + ")");
}

FiniteGroupPresentation cyclic_group(int n) {
    if (n < 1) throw InvalidGroupTable("cyclic group order must be positive");
    FiniteGroupPresentation p;
    for (int i = 0; i < n; ++i) p.elements.push_back("g" + std::to_string(i));
    p.multiplication.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) p.multiplication[a][b] = (a + b) % n;
    p.identity = 0;
    return p;
}

namespace {

using Perm = std::array<int, 3>;

Perm compose(const Perm& p, const Perm& q) {
    // (p . q)(x) = p(q(x))
    return {p[q[0]], p[q[1]], p[q[2]]};
}

const std::vector<std::pair<std::string, Perm>>& s3_elements() {
    static const std::vector<std::pair<std::string, Perm>> elems = {
        {"e", {0, 1, 2}},  {"r", {1, 2, 0}},  {"r2", {2, 0, 1}},
        {"s", {1, 0, 2}},  {"sr", {0, 2, 1}}, {"sr2", {2, 1, 0}},
    };
    return elems;
}

}  // namespace

FiniteGroupPresentation symmetric_group_3() {
    const auto& elems = s3_elements();
    FiniteGroupPresentation p;
    for (const auto& [tok, perm] : elems) {
        (void)perm;
        p.elements.push_back(tok);
    }
    const int n = static_cast<int>(elems.size());
    p.multiplication.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            Perm prod = compose(elems[a].second, elems[b].second);
            for (int c = 0; c < n; ++c)
                if (elems[c].second == prod) p.multiplication[a][b] = c;
        }
    }
    p.identity = 0;
    return p;
}

// ---------------------------------------------------------------------------
// Dual of a finite group
// ---------------------------------------------------------------------------

QuantumGroupData finite_group_dual(const FiniteGroupPresentation& p) {
    p.check();
    QuantumGroupData g;
    g.name = "finite-group-dual";
    g.tolerance = 1e-9;
    const int n = p.order();
    for (int a = 0; a < n; ++a) {
        IrrepInfo info;
        info.dim = 1;
        info.f_eigenvalues = {1.0};
        info.conjugate = p.elements[p.inverse(a)];
        info.conj_index_map = {0};
        g.irreps[p.elements[a]] = info;
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            FusionEntry e;
            e.decomp[p.elements[p.mul(a, b)]] = 1;
            e.complete = true;
            g.fusion.set(p.elements[a], p.elements[b], std::move(e));
        }
    }
    g.trivial = p.elements[p.identity];
    return g;
}

Instance finite_group_dual_instance(const FiniteGroupPresentation& p) {
    Instance inst;
    inst.data = finite_group_dual(p);
    auto group = std::make_shared<FiniteGroupPresentation>(p);

    // The group von Neumann algebra carries the normalized trace; elements
    // x = sum c_g lambda_g act on l2(G) via the left regular representation,
    // and the predual norm of x.tau is tau(|x|) = (1/|G|) sum of singular
    // values. The L-infinity norm is the largest singular value.
    auto regular_matrix = [group](const CoeffMap& coeffs) {
        const int n = group->order();
        Eigen::MatrixXcd X = Eigen::MatrixXcd::Zero(n, n);
        for (const auto& [k, v] : coeffs) {
            int a = group->index_of(k.irrep);
            for (int b = 0; b < n; ++b) X(group->mul(a, b), b) += v;
        }
        return X;
    };
    NormOracle norms;
    norms.l1_norm = [group, regular_matrix](const L1Element& f) {
        Eigen::MatrixXcd X = regular_matrix(f.coeffs);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(X);
        return svd.singularValues().sum() / double(group->order());
    };
    norms.linf_norm = [regular_matrix](const CoefficientElement& x) {
        Eigen::MatrixXcd X = regular_matrix(x.coeffs);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(X);
        return svd.singularValues().size() == 0 ? 0.0 : svd.singularValues()(0);
    };
    inst.norms = std::move(norms);
    return inst;
}

// ---------------------------------------------------------------------------
// Function algebra of a finite group
// ---------------------------------------------------------------------------

namespace {

/// Immutable capture for the function-algebra oracles.
struct FunctionAlgebraContext {
    FiniteGroupPresentation group;
    std::vector<ExplicitIrrep> irreps;

    const ExplicitIrrep& irrep(const IrrepLabel& label) const {
        for (const auto& r : irreps)
            if (r.label == label) return r;
        throw UnknownLabel(label);
    }

    /// Realize a coefficient combination as a function on the group.
    Eigen::VectorXcd realize(const CoeffMap& coeffs) const {
        const int n = group.order();
        Eigen::VectorXcd x = Eigen::VectorXcd::Zero(n);
        for (const auto& [k, v] : coeffs) {
            const ExplicitIrrep& r = irrep(k.irrep);
            for (int gi = 0; gi < n; ++gi) x(gi) += v * r.matrices[gi](k.row, k.col);
        }
        return x;
    }

    /// Peter-Weyl coefficients of a function: c_{aij} = n_a phi(u_{ij}^* z).
    CoeffMap decompose(const Eigen::VectorXcd& z) const {
        const int n = group.order();
        CoeffMap out;
        for (const auto& r : irreps) {
            const int na = static_cast<int>(r.matrices[0].rows());
            for (int i = 0; i < na; ++i) {
                for (int j = 0; j < na; ++j) {
                    cplx c = 0.0;
                    for (int gi = 0; gi < n; ++gi)
                        c += std::conj(r.matrices[gi](i, j)) * z(gi);
                    c *= double(na) / double(n);
                    if (std::abs(c) > 1e-14) out[{r.label, i, j}] = c;
                }
            }
        }
        return out;
    }
};

}  // namespace

Instance finite_group_function_algebra(const FiniteGroupPresentation& p,
                                       const std::vector<ExplicitIrrep>& irreps) {
    p.check();
    const int n = p.order();
    const double tol = 1e-9;

    int dim_sq = 0;
    for (const auto& r : irreps) {
        if (r.matrices.size() != static_cast<std::size_t>(n))
            throw Error("irrep " + r.label + " has wrong matrix count");
        const int na = static_cast<int>(r.matrices[0].rows());
        dim_sq += na * na;
        for (int gi = 0; gi < n; ++gi) {
            const Eigen::MatrixXcd& M = r.matrices[gi];
            if (M.rows() != na || M.cols() != na)
                throw Error("irrep " + r.label + " has ragged matrices");
            double unit_res = (M * M.adjoint() - Eigen::MatrixXcd::Identity(na, na))
                                  .cwiseAbs()
                                  .maxCoeff();
            if (unit_res > tol)
                throw Error("irrep " + r.label + " is not unitary at " + p.elements[gi]);
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                double hom_res =
                    (r.matrices[a] * r.matrices[b] - r.matrices[p.mul(a, b)]).cwiseAbs().maxCoeff();
                if (hom_res > tol)
                    throw Error("irrep " + r.label + " is not a homomorphism at (" +
                                p.elements[a] + ", " + p.elements[b] + ")");
            }
    }
    if (dim_sq != n)
        throw Error("irrep set incomplete: sum of squared dims is " + std::to_string(dim_sq) +
                    ", group order is " + std::to_string(n));

    auto character = [&](const ExplicitIrrep& r, int gi) { return r.matrices[gi].trace(); };

    // Character orthonormality doubles as the pairwise-inequivalence and
    // irreducibility check.
    for (std::size_t a = 0; a < irreps.size(); ++a) {
        for (std::size_t b = 0; b < irreps.size(); ++b) {
            cplx ip = 0.0;
            for (int gi = 0; gi < n; ++gi)
                ip += character(irreps[a], gi) * std::conj(character(irreps[b], gi));
            ip /= double(n);
            double expect = a == b ? 1.0 : 0.0;
            if (std::abs(ip - expect) > tol)
                throw Error("irreps " + irreps[a].label + ", " + irreps[b].label +
                            " fail character orthonormality (reducible or equivalent)");
        }
    }

    QuantumGroupData g;
    g.name = "finite-group-function-algebra";
    g.tolerance = tol;

    // Conjugates: match conjugated characters, then find the index alignment
    // that makes the stored conjugate matrices equal u_{ij}^* entrywise.
    for (const auto& r : irreps) {
        const int na = static_cast<int>(r.matrices[0].rows());
        IrrepInfo info;
        info.dim = na;
        info.f_eigenvalues.assign(na, 1.0);

        const ExplicitIrrep* conj_rep = nullptr;
        for (const auto& cand : irreps) {
            double worst = 0.0;
            for (int gi = 0; gi < n; ++gi)
                worst = std::max(worst, std::abs(character(cand, gi) -
                                                 std::conj(character(r, gi))));
            if (worst <= tol) {
                conj_rep = &cand;
                break;
            }
        }
        if (!conj_rep) throw Error("no conjugate representative for irrep " + r.label);
        info.conjugate = conj_rep->label;

        auto alignment_works = [&](const std::vector<int>& sigma) {
            for (int gi = 0; gi < n; ++gi)
                for (int i = 0; i < na; ++i)
                    for (int j = 0; j < na; ++j)
                        if (std::abs(conj_rep->matrices[gi](sigma[i], sigma[j]) -
                                     std::conj(r.matrices[gi](i, j))) > tol)
                            return false;
            return true;
        };
        std::vector<int> sigma(na);
        std::iota(sigma.begin(), sigma.end(), 0);
        if (!alignment_works(sigma)) {
            bool found = false;
            std::vector<int> perm = sigma;
            while (std::next_permutation(perm.begin(), perm.end())) {
                if (alignment_works(perm)) {
                    sigma = perm;
                    found = true;
                    break;
                }
            }
            if (!found)
                throw Error("conjugate of irrep " + r.label +
                            " is equivalent but not entrywise aligned; provide aligned "
                            "representatives");
        }
        info.conj_index_map = sigma;
        g.irreps[r.label] = info;
    }

    // Fusion multiplicities from the character inner products.
    for (const auto& ra : irreps) {
        for (const auto& rb : irreps) {
            FusionEntry e;
            e.complete = true;
            for (const auto& rc : irreps) {
                cplx acc = 0.0;
                for (int gi = 0; gi < n; ++gi)
                    acc += character(ra, gi) * character(rb, gi) *
                           std::conj(character(rc, gi));
                acc /= double(n);
                long mult = std::lround(acc.real());
                if (std::abs(acc - cplx(double(mult), 0.0)) > tol)
                    throw Error("non-integer fusion multiplicity at (" + ra.label + ", " +
                                rb.label + ", " + rc.label + ")");
                if (mult > 0) e.decomp[rc.label] = static_cast<int>(mult);
            }
            g.fusion.set(ra.label, rb.label, std::move(e));
        }
    }

    // Trivial: the irrep with character identically one.
    for (const auto& r : irreps) {
        bool is_triv = true;
        for (int gi = 0; gi < n; ++gi)
            if (std::abs(character(r, gi) - cplx(1.0, 0.0)) > tol) is_triv = false;
        if (is_triv) g.trivial = r.label;
    }
    if (g.trivial.empty()) throw Error("irrep set lacks the trivial representation");

    auto ctx = std::make_shared<FunctionAlgebraContext>(FunctionAlgebraContext{p, irreps});

    Instance inst;
    inst.data = g;

    NormOracle norms;
    norms.l1_norm = [ctx](const L1Element& f) {
        Eigen::VectorXcd x = ctx->realize(f.coeffs);
        return x.cwiseAbs().sum() / double(ctx->group.order());
    };
    norms.linf_norm = [ctx](const CoefficientElement& x) {
        Eigen::VectorXcd v = ctx->realize(x.coeffs);
        return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
    };
    inst.norms = std::move(norms);

    BruteForceOracle brute;
    brute.convolve = [ctx](const L1Element& f, const L1Element& h) {
        // (x.phi) * (y.phi) = z.phi with z the classical convolution
        // z(r) = (1/|G|) sum_s x(s) y(s^{-1} r), summed directly.
        const int n = ctx->group.order();
        Eigen::VectorXcd x = ctx->realize(f.coeffs);
        Eigen::VectorXcd y = ctx->realize(h.coeffs);
        Eigen::VectorXcd z = Eigen::VectorXcd::Zero(n);
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s)
                z(r) += x(s) * y(ctx->group.mul(ctx->group.inverse(s), r));
        z /= double(n);
        return L1Element{ctx->decompose(z)};
    };
    brute.beta1 = [ctx](const L1Element& f) {
        // Class averaging: x~(g) = (1/|G|) sum_s x(s g s^{-1}).
        const int n = ctx->group.order();
        Eigen::VectorXcd x = ctx->realize(f.coeffs);
        Eigen::VectorXcd avg = Eigen::VectorXcd::Zero(n);
        for (int gi = 0; gi < n; ++gi)
            for (int s = 0; s < n; ++s)
                avg(gi) += x(ctx->group.mul(ctx->group.mul(s, gi), ctx->group.inverse(s)));
        avg /= double(n);
        return L1Element{ctx->decompose(avg)};
    };
    brute.haar_pairing = [ctx](const CoeffKey& a, const CoeffKey& b) {
        // phi((u^b_{kl})^* u^a_{ij}) over the realized functions.
        const ExplicitIrrep& ra = ctx->irrep(a.irrep);
        const ExplicitIrrep& rb = ctx->irrep(b.irrep);
        cplx acc = 0.0;
        const int n = ctx->group.order();
        for (int gi = 0; gi < n; ++gi)
            acc += std::conj(rb.matrices[gi](b.row, b.col)) * ra.matrices[gi](a.row, a.col);
        return acc / double(n);
    };
    inst.brute = std::move(brute);
    return inst;
}

Instance s3_function_algebra() {
    FiniteGroupPresentation p = symmetric_group_3();
    const auto& elems = s3_elements();
    const int n = p.order();

    // Standard 2-dimensional irrep: the permutation representation on C^3
    // restricted to the plane sum(x) = 0, in the orthonormal basis
    // (1,-1,0)/sqrt2, (1,1,-2)/sqrt6. Real orthogonal matrices, so every
    // irrep is entrywise self-conjugate.
    Eigen::MatrixXd B(3, 2);
    B << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(6.0),  //
        -1.0 / std::sqrt(2.0), 1.0 / std::sqrt(6.0),  //
        0.0, -2.0 / std::sqrt(6.0);

    ExplicitIrrep triv{"t", {}}, sign{"s", {}}, stand{"v", {}};
    for (int gi = 0; gi < n; ++gi) {
        const Perm& perm = elems[gi].second;
        Eigen::MatrixXd P = Eigen::MatrixXd::Zero(3, 3);
        for (int k = 0; k < 3; ++k) P(perm[k], k) = 1.0;
        Eigen::MatrixXd V = B.transpose() * P * B;
        stand.matrices.push_back(V.cast<cplx>());
        double det = V.determinant();
        sign.matrices.push_back((Eigen::MatrixXcd(1, 1) << cplx(det < 0 ? -1.0 : 1.0)).finished());
        triv.matrices.push_back((Eigen::MatrixXcd(1, 1) << cplx(1.0)).finished());
    }

    Instance inst = finite_group_function_algebra(p, {triv, sign, stand});
    inst.data.name = "s3";
    return inst;
}

// ---------------------------------------------------------------------------
// SU_q(2) and O_N^+ truncations
// ---------------------------------------------------------------------------

namespace {

void add_clebsch_gordan_fusion(QuantumGroupData& g, int L) {
    for (int a = 0; a <= L; ++a) {
        for (int b = 0; b <= L; ++b) {
            FusionEntry e;
            e.complete = a + b <= L;
            for (int c = std::abs(a - b); c <= std::min(a + b, L); c += 2)
                e.decomp[std::to_string(c)] = 1;
            g.fusion.set(std::to_string(a), std::to_string(b), std::move(e));
        }
    }
    g.trivial = "0";
}

}  // namespace

QuantumGroupData suq2_truncated(double q, int L) {
    if (!(q > 0.0) || q > 1.0) throw Error("suq2 requires q in (0, 1]");
    if (L < 0) throw Error("suq2 requires a non-negative level");
    QuantumGroupData g;
    std::ostringstream name;
    name << "suq2(q=" << q << ",L=" << L << ")";
    g.name = name.str();
    g.tolerance = 1e-9;
    for (int k = 0; k <= L; ++k) {
        IrrepInfo info;
        info.dim = k + 1;
        for (int j = 0; j <= k; ++j) info.f_eigenvalues.push_back(std::pow(q, 2 * j - k));
        info.conjugate = std::to_string(k);
        info.conj_index_map.resize(k + 1);
        for (int j = 0; j <= k; ++j) info.conj_index_map[j] = k - j;
        g.irreps[std::to_string(k)] = info;
    }
    add_clebsch_gordan_fusion(g, L);
    return g;
}

QuantumGroupData on_plus_truncated(int N, int L) {
    if (N < 2) throw Error("onplus requires N >= 2");
    if (L < 0) throw Error("onplus requires a non-negative level");
    QuantumGroupData g;
    g.name = "onplus(N=" + std::to_string(N) + ",L=" + std::to_string(L) + ")";
    g.tolerance = 1e-9;
    long long prev = 1, cur = N;
    for (int k = 0; k <= L; ++k) {
        long long dim = k == 0 ? 1 : (k == 1 ? cur : 0);
        if (k >= 2) {
            dim = N * cur - prev;
            prev = cur;
            cur = dim;
        }
        IrrepInfo info;
        info.dim = static_cast<int>(dim);
        info.f_eigenvalues.assign(info.dim, 1.0);
        info.conjugate = std::to_string(k);
        info.conj_index_map.resize(info.dim);
        std::iota(info.conj_index_map.begin(), info.conj_index_map.end(), 0);
        g.irreps[std::to_string(k)] = info;
    }
    add_clebsch_gordan_fusion(g, L);
    return g;
}

QuantumGroupData trivial_instance() {
    QuantumGroupData g;
    g.name = "trivial";
    g.tolerance = 1e-9;
    IrrepInfo info;
    info.dim = 1;
    info.f_eigenvalues = {1.0};
    info.conjugate = "triv";
    info.conj_index_map = {0};
    g.irreps["triv"] = info;
    FusionEntry e;
    e.decomp["triv"] = 1;
    g.fusion.set("triv", "triv", std::move(e));
    g.trivial = "triv";
    return g;
}

// ---------------------------------------------------------------------------
// Loading and built-in resolution
// ---------------------------------------------------------------------------

QuantumGroupData load_instance(const std::string& path) {
    QuantumGroupData g = parse_instance_file(path);
    VerificationReport report = validate(g);
    if (!report.all_passed()) {
        auto bad = report.violations();
        throw ValidationError("instance " + path + " fails validation: " + bad.front().id +
                                  " (" + bad.front().witness + ")",
                              std::move(report));
    }
    return g;
}

std::optional<Instance> make_builtin(const std::string& selector, const BuiltinParams& params) {
    if (selector == "s3") return s3_function_algebra();
    if (selector == "trivial") return Instance{trivial_instance(), std::nullopt, std::nullopt};
    if (selector == "suq2")
        return Instance{suq2_truncated(params.q, params.level), std::nullopt, std::nullopt};
    if (selector == "onplus")
        return Instance{on_plus_truncated(params.n, params.level), std::nullopt, std::nullopt};
    if (selector.rfind("dual:", 0) == 0) {
        std::string group = selector.substr(5);
        std::optional<FiniteGroupPresentation> p;
        if (group == "s3") {
            p = symmetric_group_3();
        } else if (group.size() > 1 && group[0] == 'z') {
            int k = 0;
            try {
                k = std::stoi(group.substr(1));
            } catch (...) {
                return std::nullopt;
            }
            if (k < 1 || k > 64) return std::nullopt;
            p = cyclic_group(k);
        }
        if (!p) return std::nullopt;
        Instance inst = finite_group_dual_instance(*p);
        inst.data.name = selector;
        return inst;
    }
    return std::nullopt;
}

}  // namespace cqg
