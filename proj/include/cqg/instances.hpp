#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "cqg/elements.hpp"
#include "cqg/fusion_data.hpp"

namespace cqg {

/// Finite group given by tokens and a total multiplication table
/// (indices into `elements`).
struct FiniteGroupPresentation {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> multiplication;
    int identity = 0;

    int order() const { return static_cast<int>(elements.size()); }
    int mul(int a, int b) const { return multiplication[a][b]; }
    int inverse(int a) const;
    int index_of(const std::string& token) const;

    /// Checks the group axioms: table shape, associativity, identity,
    /// inverses. Throws InvalidGroupTable on violation.
    void check() const;
};

FiniteGroupPresentation cyclic_group(int n);
FiniteGroupPresentation symmetric_group_3();

/// One concrete unitary irrep, matrices indexed by group element.
struct ExplicitIrrep {
    IrrepLabel label;
    std::vector<Eigen::MatrixXcd> matrices;
};

/// A quantum group instance bundled with whatever oracles its construction
/// can honestly provide.
struct Instance {
    QuantumGroupData data;
    std::optional<NormOracle> norms;
    std::optional<BruteForceOracle> brute;
};

/// Dual of a finite group: one 1-dimensional irrep per element, eigenvalue
/// list [1] (Kac), conjugate = inverse, fusion = group law. The attached
/// NormOracle computes the predual norm of the group von Neumann algebra,
/// tau(|x|) over the regular representation.
QuantumGroupData finite_group_dual(const FiniteGroupPresentation& p);
Instance finite_group_dual_instance(const FiniteGroupPresentation& p);

/// Function algebra of a finite group from a complete list of pairwise
/// inequivalent unitary irreps (sum n^2 == |G| required). Kac; fusion from
/// character inner products. NormOracle evaluates elements as functions on
/// the group; BruteForceOracle convolves them as honest functions and
/// class-averages for the central projection.
Instance finite_group_function_algebra(const FiniteGroupPresentation& p,
                                       const std::vector<ExplicitIrrep>& irreps);

/// The standard S3 instance: trivial, sign and the 2-dimensional irrep
/// realized by real orthogonal matrices.
Instance s3_function_algebra();

/// SU_q(2) truncated at spin level L: labels "0".."L", dim(k) = k+1,
/// eigenvalues (q^{-k}, q^{-k+2}, ..., q^k), quantum dimension the
/// q-integer [k+1]_q, Clebsch-Gordan fusion with entries beyond the window
/// flagged incomplete, self-conjugate with index reversal.
QuantumGroupData suq2_truncated(double q, int L);

/// Free orthogonal quantum group O_N^+ truncated at level L: Kac, same
/// fusion rules as suq2, dims n_0 = 1, n_1 = N, n_{k+1} = N n_k - n_{k-1}.
QuantumGroupData on_plus_truncated(int N, int L);

/// Instance with just the trivial irrep.
QuantumGroupData trivial_instance();

/// Strict instance loading: parse, then validate; violations are returned as
/// a ValidationError carrying the report.
QuantumGroupData load_instance(const std::string& path);

struct BuiltinParams {
    double q = 0.5;
    int level = 4;
    int n = 3;
};

/// Resolves a built-in selector: "s3", "trivial", "dual:z<k>", "dual:s3",
/// "suq2", "onplus". Returns nothing for unknown names.
std::optional<Instance> make_builtin(const std::string& selector, const BuiltinParams& params);

}  // namespace cqg
