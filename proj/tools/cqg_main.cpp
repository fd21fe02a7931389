#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "cqg/instances.hpp"
#include "cqg/l1_algebra.hpp"
#include "cqg/l2_space.hpp"
#include "cqg/serialization.hpp"
#include "cqg/verify.hpp"

namespace {

using namespace cqg;

struct Options {
    std::string instance;
    double q = 0.5;
    int level = 4;
    int n = 3;
    std::uint64_t seed = 42;
    double tolerance = 0.0;  // 0 means: use the instance tolerance
    std::string out;
    std::string left, right, in;
    std::string kind;
    std::string fuse_a, fuse_b;
    bool lossy = false;
};

void add_instance_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--instance", o.instance,
                    "built-in name (s3, trivial, dual:z<k>, dual:s3, suq2, onplus) or a JSON "
                    "instance file")
        ->required();
    cmd->add_option("--q", o.q, "deformation parameter for suq2");
    cmd->add_option("--level", o.level, "truncation level for suq2/onplus");
    cmd->add_option("--n", o.n, "N for onplus");
}

/// Built-in name first; otherwise treat the selector as a file path.
/// `strict` gates file loading on validation.
Instance resolve_instance(const Options& o, bool strict) {
    BuiltinParams params{o.q, o.level, o.n};
    if (auto built = make_builtin(o.instance, params)) return *built;
    QuantumGroupData g = strict ? load_instance(o.instance) : parse_instance_file(o.instance);
    return Instance{std::move(g), std::nullopt, std::nullopt};
}

void print_coefficients(const CoeffMap& coeffs) {
    if (coeffs.empty()) {
        std::cout << "  (zero element)\n";
        return;
    }
    std::cout << std::left << std::setw(12) << "  irrep" << std::setw(5) << "row" << std::setw(5)
              << "col" << std::setw(24) << "re" << "im\n";
    for (const auto& [k, v] : coeffs)
        std::cout << "  " << std::setw(10) << k.irrep << std::setw(5) << k.row << std::setw(5)
                  << k.col << std::setw(24) << std::setprecision(16) << v.real() << v.imag()
                  << "\n";
}

int cmd_verify(const Options& o) {
    Instance inst = resolve_instance(o, /*strict=*/false);
    double tol = o.tolerance > 0.0 ? o.tolerance : inst.data.tolerance;
    VerificationReport report = run_suite(inst, o.seed, tol);
    print_report(report, std::cout);
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) throw Error("cannot open " + o.out + " for writing");
        f << report_to_json(report).dump(2) << "\n";
    }
    return report.all_passed() ? 0 : 1;
}

int cmd_conv(const Options& o) {
    Instance inst = resolve_instance(o, /*strict=*/true);
    ElementFile lhs = load_element(o.left);
    ElementFile rhs = load_element(o.right);
    if (lhs.space != rhs.space)
        throw SpaceMismatch(std::string("cannot convolve a ") + space_tag(lhs.space) +
                            " element with a " + space_tag(rhs.space) + " element");
    check_support(inst.data, lhs.coeffs);
    check_support(inst.data, rhs.coeffs);
    ElementFile result;
    result.space = lhs.space;
    switch (lhs.space) {
        case ElementSpace::l1:
            result.coeffs =
                convolve(inst.data, L1Element{lhs.coeffs}, L1Element{rhs.coeffs}).coeffs;
            break;
        case ElementSpace::l2:
            result.coeffs =
                convolve_l2(inst.data, L2Vector{lhs.coeffs}, L2Vector{rhs.coeffs}).coeffs;
            break;
        case ElementSpace::linf:
            throw SpaceMismatch("convolution is defined on L1 and L2 elements only");
    }
    std::cout << "convolution result (" << space_tag(result.space) << "):\n";
    print_coefficients(result.coeffs);
    save_element(result, o.out);
    return 0;
}

int cmd_project(const Options& o) {
    Instance inst = resolve_instance(o, /*strict=*/true);
    ElementFile in = load_element(o.in);
    check_support(inst.data, in.coeffs);

    auto require_space = [&](ElementSpace s) {
        if (in.space != s)
            throw SpaceMismatch("projection kind '" + o.kind + "' needs a " +
                                std::string(space_tag(s)) + " element, got " +
                                space_tag(in.space));
    };

    if (o.kind == "r") {
        require_space(ElementSpace::linf);
        CharacterRingElement out = restrict_r(inst.data, CoefficientElement{in.coeffs});
        std::cout << "restriction onto the character ring:\n";
        for (const auto& [a, v] : out.coeffs)
            std::cout << "  chi^" << a << "  " << std::setprecision(16) << v.real() << "  "
                      << v.imag() << "\n";
        std::ofstream f(o.out);
        if (!f) throw Error("cannot open " + o.out + " for writing");
        f << character_to_json(out).dump(2) << "\n";
        return 0;
    }

    ElementFile result;
    if (o.kind == "beta2") {
        require_space(ElementSpace::l2);
        result.space = ElementSpace::l2;
        result.coeffs = beta2_haar(inst.data, L2Vector{in.coeffs}).coeffs;
    } else if (o.kind == "pq") {
        require_space(ElementSpace::l2);
        result.space = ElementSpace::l2;
        result.coeffs = pq_projection(inst.data, L2Vector{in.coeffs}).coeffs;
    } else if (o.kind == "beta1") {
        require_space(ElementSpace::l1);
        result.space = ElementSpace::l1;
        result.coeffs = beta1(inst.data, L1Element{in.coeffs}).coeffs;
    } else {
        throw Error("unknown projection kind: " + o.kind);
    }
    std::cout << "projection " << o.kind << " result:\n";
    print_coefficients(result.coeffs);
    save_element(result, o.out);
    return 0;
}

int cmd_info(const Options& o) {
    Instance inst = resolve_instance(o, /*strict=*/true);
    const QuantumGroupData& g = inst.data;
    std::cout << "instance: " << g.name << "\n"
              << "kac: " << (is_kac(g) ? "yes" : "no") << "\n"
              << "tolerance: " << g.tolerance << "\n"
              << "irreps (" << g.irreps.size() << "):\n";
    std::cout << std::left << "  " << std::setw(10) << "label" << std::setw(6) << "dim"
              << std::setw(14) << "qdim" << std::setw(12) << "conjugate"
              << "f-eigenvalues\n";
    for (const auto& [a, info] : g.irreps) {
        std::cout << "  " << std::setw(10) << (a + (a == g.trivial ? "*" : "")) << std::setw(6)
                  << info.dim << std::setw(14) << std::setprecision(10) << quantum_dimension(g, a)
                  << std::setw(12) << info.conjugate;
        for (double lam : info.f_eigenvalues) std::cout << lam << " ";
        std::cout << "\n";
    }
    std::cout << "(* marks the trivial irrep)\n";
    return 0;
}

int cmd_fusion(const Options& o) {
    Instance inst = resolve_instance(o, /*strict=*/true);
    const QuantumGroupData& g = inst.data;
    if (!o.fuse_a.empty() || !o.fuse_b.empty()) {
        if (o.fuse_a.empty() || o.fuse_b.empty())
            throw Error("--a and --b must be given together");
        CharacterRingElement x = CharacterRingElement::basis(o.fuse_a);
        CharacterRingElement y = CharacterRingElement::basis(o.fuse_b);
        CharacterRingElement prod = fuse_characters(
            g, x, y, o.lossy ? FusionMode::lossy : FusionMode::strict);
        std::cout << "chi^" << o.fuse_a << " * chi^" << o.fuse_b << " =";
        for (const auto& [c, v] : prod.coeffs) std::cout << " + " << v.real() << " chi^" << c;
        if (prod.truncated) std::cout << "   [lossy: out-of-window part dropped]";
        std::cout << "\n";
        return 0;
    }
    std::cout << "fusion table of " << g.name << ":\n";
    for (const auto& [key, entry] : g.fusion.entries) {
        std::cout << "  " << key.first << " x " << key.second << " = ";
        bool first = true;
        for (const auto& [c, mult] : entry.decomp) {
            if (!first) std::cout << " + ";
            if (mult != 1) std::cout << mult << " ";
            std::cout << c;
            first = false;
        }
        if (entry.decomp.empty()) std::cout << "0";
        std::cout << (entry.complete ? "" : "   [incomplete]") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-truncation harmonic analysis on compact quantum groups"};
    app.require_subcommand(1);
    Options o;

    CLI::App* verify = app.add_subcommand("verify", "run the full invariant suite");
    add_instance_options(verify, o);
    verify->add_option("--seed", o.seed, "seed for randomized checks");
    verify->add_option("--tolerance", o.tolerance, "residual tolerance (default: instance)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--out", o.out, "write the JSON report here");

    CLI::App* conv = app.add_subcommand("conv", "convolve two element files");
    add_instance_options(conv, o);
    conv->add_option("--left", o.left, "left element file")->required();
    conv->add_option("--right", o.right, "right element file")->required();
    conv->add_option("--out", o.out, "output element file")->required();

    CLI::App* project = app.add_subcommand("project", "apply a projection to an element file");
    add_instance_options(project, o);
    project->add_option("--kind", o.kind, "beta2 | pq | beta1 | r")->required();
    project->add_option("--in", o.in, "input element file")->required();
    project->add_option("--out", o.out, "output file")->required();

    CLI::App* info = app.add_subcommand("info", "print the irrep table");
    add_instance_options(info, o);

    CLI::App* fusion = app.add_subcommand("fusion", "print the fusion table or one product");
    add_instance_options(fusion, o);
    fusion->add_option("--a", o.fuse_a, "left character label");
    fusion->add_option("--b", o.fuse_b, "right character label");
    fusion->add_flag("--lossy", o.lossy, "drop out-of-window fusion components");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(verify)) return cmd_verify(o);
        if (app.got_subcommand(conv)) return cmd_conv(o);
        if (app.got_subcommand(project)) return cmd_project(o);
        if (app.got_subcommand(info)) return cmd_info(o);
        if (app.got_subcommand(fusion)) return cmd_fusion(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
