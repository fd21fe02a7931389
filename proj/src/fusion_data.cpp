#include "cqg/fusion_data.hpp"

#include <cmath>
#include <sstream>

namespace cqg {

namespace {

std::string pair_str(const IrrepLabel& a, const IrrepLabel& b) {
    return "(" + a + ", " + b + ")";
}

/// Collects one check record, tracking the worst residual and the first
/// witness that crosses the tolerance.
struct CheckAcc {
    CheckRecord rec;
    double tol;

    CheckAcc(std::string id, double tolerance) : tol(tolerance) { rec.id = std::move(id); }

    void observe(double residual, const std::string& witness) {
        if (residual > rec.residual) rec.residual = residual;
        if (residual > tol && rec.status == CheckStatus::pass) {
            rec.status = CheckStatus::fail;
            rec.witness = witness;
        }
    }

    void fail(const std::string& witness) { observe(tol * 2 + 1.0, witness); }
};

bool is_fusion_unit(const QuantumGroupData& g, const IrrepLabel& cand) {
    for (const auto& [b, info] : g.irreps) {
        (void)info;
        const FusionEntry* left = g.fusion.find(cand, b);
        const FusionEntry* right = g.fusion.find(b, cand);
        for (const FusionEntry* e : {left, right}) {
            if (!e || !e->complete) return false;
            if (e->decomp.size() != 1) return false;
            auto it = e->decomp.begin();
            if (it->first != b || it->second != 1) return false;
        }
    }
    return true;
}

}  // namespace

double quantum_dimension(const QuantumGroupData& g, const IrrepLabel& a) {
    const IrrepInfo& info = g.info(a);
    double d = 0.0;
    for (double lam : info.f_eigenvalues) d += lam;
    return d;
}

bool is_kac(const QuantumGroupData& g) {
    for (const auto& [label, info] : g.irreps) {
        (void)label;
        for (double lam : info.f_eigenvalues)
            if (std::abs(lam - 1.0) > g.tolerance) return false;
    }
    return true;
}

IrrepLabel detect_trivial(const QuantumGroupData& g) {
    std::vector<IrrepLabel> candidates;
    for (const auto& [label, info] : g.irreps) {
        if (info.dim != 1) continue;
        if (info.f_eigenvalues.size() != 1 ||
            std::abs(info.f_eigenvalues[0] - 1.0) > g.tolerance)
            continue;
        if (info.conjugate != label) continue;
        if (is_fusion_unit(g, label)) candidates.push_back(label);
    }
    if (candidates.size() != 1)
        throw ParseError("cannot designate a unique trivial irrep (" +
                         std::to_string(candidates.size()) + " candidates)");
    return candidates.front();
}

VerificationReport validate(const QuantumGroupData& g) {
    VerificationReport report;
    report.instance = g.name;
    report.tolerance = g.tolerance;
    const double tol = g.tolerance;

    CheckAcc positivity("data/eigenvalue-positivity", tol);
    CheckAcc trace_sym("data/eigenvalue-trace-symmetry", tol);
    CheckAcc conj_inv("data/conjugation-involution", tol);
    CheckAcc conj_eig("data/conjugate-eigenvalue-inverse", tol);
    CheckAcc trivial("data/trivial-irrep", tol);
    CheckAcc funit("fusion/unit", tol);
    CheckAcc fdim("fusion/dim-consistency", tol);
    CheckAcc fqdim("fusion/qdim-consistency", tol);
    CheckAcc fassoc("fusion/associativity", tol);

    for (const auto& [a, info] : g.irreps) {
        if (info.dim <= 0 || static_cast<int>(info.f_eigenvalues.size()) != info.dim) {
            positivity.fail(a + ": eigenvalue list length != dim");
            continue;
        }
        double sum = 0.0, inv_sum = 0.0;
        for (int i = 0; i < info.dim; ++i) {
            double lam = info.f_eigenvalues[i];
            if (!(lam > 0.0)) {
                positivity.fail(a + ": f_eigenvalues positivity at index " + std::to_string(i));
                continue;
            }
            sum += lam;
            inv_sum += 1.0 / lam;
        }
        trace_sym.observe(std::abs(sum - inv_sum), a + ": sum(lambda) != sum(1/lambda)");

        // Conjugate data: label exists, involution, matching dims, index map
        // a bijection with sigma_conj . sigma = id, eigenvalues inverse.
        if (!g.contains(info.conjugate)) {
            conj_inv.fail(a + ": conjugate label " + info.conjugate + " unknown");
            continue;
        }
        const IrrepInfo& cinfo = g.info(info.conjugate);
        if (cinfo.conjugate != a) conj_inv.fail(a + ": conjugation not an involution on labels");
        if (cinfo.dim != info.dim ||
            cinfo.f_eigenvalues.size() != static_cast<std::size_t>(info.dim) ||
            cinfo.conj_index_map.size() != static_cast<std::size_t>(info.dim)) {
            conj_eig.fail(a + ": conjugate data shape mismatch");
            continue;
        }
        std::vector<bool> hit(info.dim, false);
        bool bijective = static_cast<int>(info.conj_index_map.size()) == info.dim;
        if (bijective) {
            for (int i = 0; i < info.dim; ++i) {
                int s = info.conj_index_map[i];
                if (s < 0 || s >= info.dim || hit[s]) {
                    bijective = false;
                    break;
                }
                hit[s] = true;
            }
        }
        if (!bijective) {
            conj_eig.fail(a + ": conj_index_map is not a bijection");
            continue;
        }
        for (int i = 0; i < info.dim; ++i) {
            int s = info.conj_index_map[i];
            double prod = cinfo.f_eigenvalues[s] * info.f_eigenvalues[i];
            conj_eig.observe(std::abs(prod - 1.0),
                             a + ": lambda^conj[" + std::to_string(s) + "] * lambda[" +
                                 std::to_string(i) + "] != 1");
            // Index maps must compose to the identity for the star map to be
            // an involution.
            if (cinfo.conj_index_map[s] != i)
                conj_eig.fail(a + ": conj_index_map of " + info.conjugate +
                              " does not invert that of " + a);
        }
    }

    // Trivial designation.
    if (!g.contains(g.trivial)) {
        trivial.fail("designated trivial label " + g.trivial + " unknown");
    } else {
        const IrrepInfo& t = g.info(g.trivial);
        if (t.dim != 1) trivial.fail("trivial irrep has dim != 1");
        if (t.dim == 1 && !t.f_eigenvalues.empty())
            trivial.observe(std::abs(t.f_eigenvalues[0] - 1.0), "trivial eigenvalue != 1");
        if (t.conjugate != g.trivial) trivial.fail("trivial irrep not self-conjugate");
        if (!is_fusion_unit(g, g.trivial))
            funit.fail("N^c_{triv,b} or N^c_{b,triv} differs from delta");
    }

    // Fusion numerics on complete entries.
    for (const auto& [key, entry] : g.fusion.entries) {
        const auto& [a, b] = key;
        if (!g.contains(a) || !g.contains(b)) {
            fdim.fail(pair_str(a, b) + ": unknown label in fusion key");
            continue;
        }
        for (const auto& [c, mult] : entry.decomp) {
            if (!g.contains(c)) fdim.fail(pair_str(a, b) + ": unknown label " + c + " in decomp");
            if (mult < 0) fdim.fail(pair_str(a, b) + ": negative multiplicity at " + c);
        }
        if (!entry.complete) continue;
        double ns = 0.0, ds = 0.0;
        for (const auto& [c, mult] : entry.decomp) {
            if (!g.contains(c)) continue;
            ns += mult * g.dim(c);
            ds += mult * quantum_dimension(g, c);
        }
        fdim.observe(std::abs(static_cast<double>(g.dim(a)) * g.dim(b) - ns),
                     pair_str(a, b) + ": n_a n_b != sum N n_c");
        fqdim.observe(std::abs(quantum_dimension(g, a) * quantum_dimension(g, b) - ds),
                      pair_str(a, b) + ": d_a d_b != sum N d_c");
    }

    // Associativity on complete triples: every inner entry must exist and be
    // complete for the triple to count.
    auto mults_of = [&](const IrrepLabel& a, const IrrepLabel& b) -> const FusionEntry* {
        const FusionEntry* e = g.fusion.find(a, b);
        return (e && e->complete) ? e : nullptr;
    };
    for (const auto& [keyAB, entryAB] : g.fusion.entries) {
        if (!entryAB.complete) continue;
        const auto& [a, b] = keyAB;
        for (const auto& [c, infoc] : g.irreps) {
            (void)infoc;
            const FusionEntry* bc = mults_of(b, c);
            if (!bc) continue;
            // Left route: (a b) c. Right route: a (b c).
            std::map<IrrepLabel, double> left, right;
            bool complete_triple = true;
            for (const auto& [e, m1] : entryAB.decomp) {
                const FusionEntry* ec = mults_of(e, c);
                if (!ec) {
                    complete_triple = false;
                    break;
                }
                for (const auto& [d, m2] : ec->decomp) left[d] += double(m1) * m2;
            }
            if (!complete_triple) continue;
            for (const auto& [f, m1] : bc->decomp) {
                const FusionEntry* af = mults_of(a, f);
                if (!af) {
                    complete_triple = false;
                    break;
                }
                for (const auto& [d, m2] : af->decomp) right[d] += double(m1) * m2;
            }
            if (!complete_triple) continue;
            for (const auto& [d, m] : left)
                fassoc.observe(std::abs(m - (right.count(d) ? right[d] : 0.0)),
                               "(" + a + ", " + b + ", " + c + ") at " + d);
            for (const auto& [d, m] : right)
                if (!left.count(d))
                    fassoc.observe(std::abs(m), "(" + a + ", " + b + ", " + c + ") at " + d);
        }
    }

    for (CheckAcc* acc :
         {&positivity, &trace_sym, &conj_inv, &conj_eig, &trivial, &funit, &fdim, &fqdim, &fassoc})
        report.checks.push_back(acc->rec);
    report.sort_by_id();
    return report;
}

CharacterRingElement fuse_characters(const QuantumGroupData& g, const CharacterRingElement& x,
                                     const CharacterRingElement& y, FusionMode mode) {
    CharacterRingElement out;
    out.truncated = x.truncated || y.truncated;
    for (const auto& [a, ca] : x.coeffs) {
        if (!g.contains(a)) throw UnknownLabel(a);
        for (const auto& [b, cb] : y.coeffs) {
            if (!g.contains(b)) throw UnknownLabel(b);
            cplx scale = ca * cb;
            if (scale == cplx{0.0, 0.0}) continue;
            const FusionEntry* e = g.fusion.find(a, b);
            if (!e || !e->complete) {
                if (mode == FusionMode::strict)
                    throw TruncationOverflow("fusion of " + pair_str(a, b) +
                                             " leaves the truncation window");
                out.truncated = true;
                if (!e) continue;
            }
            for (const auto& [c, mult] : e->decomp) {
                cplx v = out.coeffs[c] += scale * double(mult);
                if (v == cplx{0.0, 0.0}) out.coeffs.erase(c);
            }
        }
    }
    return out;
}

CharacterRingElement conjugate_character(const QuantumGroupData& g,
                                         const CharacterRingElement& x) {
    CharacterRingElement out;
    out.truncated = x.truncated;
    for (const auto& [a, c] : x.coeffs) out.coeffs[g.info(a).conjugate] += std::conj(c);
    return out;
}

}  // namespace cqg
