#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cqg/errors.hpp"
#include "cqg/report.hpp"

namespace cqg {

using cplx = std::complex<double>;

/// Irrep labels are opaque string tokens, unique within an instance.
using IrrepLabel = std::string;

/// Per-irrep data: the dimension n, the F-matrix eigenvalue list
/// (lambda_0, ..., lambda_{n-1}), all strictly positive with
/// sum(lambda) == sum(1/lambda) == quantum dimension d, the conjugate label,
/// and the index bijection sigma aligning conjugate bases:
/// lambda^conj[sigma(i)] * lambda[i] == 1.
///
/// The listed eigenvalue order IS the basis order for all matrix indices.
/// Indices are 0-based throughout.
struct IrrepInfo {
    int dim = 0;
    std::vector<double> f_eigenvalues;
    IrrepLabel conjugate;
    std::vector<int> conj_index_map;
};

/// Decomposition of one ordered tensor product a (x) b into irreps with
/// multiplicities. `complete` is false when part of the decomposition falls
/// outside the truncation window; such entries list only the in-window part.
struct FusionEntry {
    std::map<IrrepLabel, int> decomp;
    bool complete = true;
};

struct FusionTable {
    std::map<std::pair<IrrepLabel, IrrepLabel>, FusionEntry> entries;

    const FusionEntry* find(const IrrepLabel& a, const IrrepLabel& b) const {
        auto it = entries.find({a, b});
        return it == entries.end() ? nullptr : &it->second;
    }
    void set(const IrrepLabel& a, const IrrepLabel& b, FusionEntry e) {
        entries[{a, b}] = std::move(e);
    }
};

/// Truncated description of a compact quantum group: a finite label window
/// with per-irrep data and the (possibly partial) fusion table.
/// Immutable after construction; all operations on it are pure.
struct QuantumGroupData {
    std::string name;
    std::map<IrrepLabel, IrrepInfo> irreps;
    FusionTable fusion;
    double tolerance = 1e-9;
    IrrepLabel trivial;  // the designated trivial label

    bool contains(const IrrepLabel& a) const { return irreps.count(a) != 0; }

    const IrrepInfo& info(const IrrepLabel& a) const {
        auto it = irreps.find(a);
        if (it == irreps.end()) throw UnknownLabel(a);
        return it->second;
    }

    int dim(const IrrepLabel& a) const { return info(a).dim; }

    /// Eigenvalue lambda_i of F at irrep a.
    double f_eigenvalue(const IrrepLabel& a, int i) const { return info(a).f_eigenvalues.at(i); }

    std::vector<IrrepLabel> labels() const {
        std::vector<IrrepLabel> out;
        out.reserve(irreps.size());
        for (const auto& [l, _] : irreps) out.push_back(l);
        return out;
    }
};

/// Element of the character ring: a finite complex combination of irrep
/// labels, chi = sum coeffs[a] * chi^a. `truncated` marks results of lossy
/// fusion that dropped out-of-window components.
struct CharacterRingElement {
    std::map<IrrepLabel, cplx> coeffs;
    bool truncated = false;

    static CharacterRingElement basis(const IrrepLabel& a) {
        CharacterRingElement x;
        x.coeffs[a] = 1.0;
        return x;
    }
};

enum class FusionMode { strict, lossy };

/// Quantum dimension d_a = sum_i lambda_i. Equals the classical dimension
/// n_a exactly on Kac instances.
double quantum_dimension(const QuantumGroupData& g, const IrrepLabel& a);

/// True when every F-eigenvalue equals 1 within the instance tolerance,
/// i.e. the Haar state is tracial.
bool is_kac(const QuantumGroupData& g);

/// Checks every structural and numeric invariant of the instance data and
/// reports each as a pass/fail record with worst residual and witness.
/// Violations are data, not exceptions: the report's violations() list is
/// empty exactly when the instance is valid.
VerificationReport validate(const QuantumGroupData& g);

/// Bilinear extension of chi^a * chi^b = sum_c N^c_{ab} chi^c.
/// Strict mode throws TruncationOverflow when a needed entry is missing or
/// incomplete; lossy mode keeps the in-window part and flags the result.
CharacterRingElement fuse_characters(const QuantumGroupData& g, const CharacterRingElement& x,
                                     const CharacterRingElement& y,
                                     FusionMode mode = FusionMode::strict);

/// Conjugate-linear involution chi^a -> chi^conj(a).
CharacterRingElement conjugate_character(const QuantumGroupData& g,
                                         const CharacterRingElement& x);

/// Locates the unique label that behaves as the two-sided fusion unit and
/// has dim 1, eigenvalue list [1] and itself as conjugate. Used when loading
/// files, which carry no explicit trivial designation. Throws ParseError if
/// no unique candidate exists.
IrrepLabel detect_trivial(const QuantumGroupData& g);

}  // namespace cqg
