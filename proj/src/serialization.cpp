#include "cqg/serialization.hpp"

#include <fstream>

namespace cqg {

using nlohmann::json;

const char* space_tag(ElementSpace s) {
    switch (s) {
        case ElementSpace::l1: return "L1";
        case ElementSpace::l2: return "L2";
        case ElementSpace::linf: return "Linf";
    }
    return "?";
}

ElementSpace space_from_tag(const std::string& tag) {
    if (tag == "L1") return ElementSpace::l1;
    if (tag == "L2") return ElementSpace::l2;
    if (tag == "Linf") return ElementSpace::linf;
    throw ParseError("unknown element space tag: " + tag);
}

json instance_to_json(const QuantumGroupData& g) {
    json irreps = json::array();
    for (const auto& [label, info] : g.irreps) {
        irreps.push_back({{"label", label},
                          {"dim", info.dim},
                          {"f_eigenvalues", info.f_eigenvalues},
                          {"conjugate", info.conjugate},
                          {"conj_index_map", info.conj_index_map}});
    }
    json fusion = json::array();
    for (const auto& [key, entry] : g.fusion.entries) {
        json decomp = json::object();
        for (const auto& [c, mult] : entry.decomp) decomp[c] = mult;
        fusion.push_back({{"a", key.first},
                          {"b", key.second},
                          {"decomp", decomp},
                          {"complete", entry.complete}});
    }
    return json{{"name", g.name},
                {"irreps", irreps},
                {"fusion", fusion},
                {"tolerance", g.tolerance}};
}

QuantumGroupData instance_from_json(const json& j) {
    try {
        QuantumGroupData g;
        g.name = j.at("name").get<std::string>();
        g.tolerance = j.at("tolerance").get<double>();
        if (!(g.tolerance > 0.0)) throw ParseError("tolerance must be positive");
        if (!j.at("irreps").is_array() || j.at("irreps").empty())
            throw ParseError("instance needs a non-empty irreps array");
        for (const auto& ji : j.at("irreps")) {
            IrrepLabel label = ji.at("label").get<std::string>();
            if (g.irreps.count(label)) throw ParseError("duplicate irrep label: " + label);
            IrrepInfo info;
            info.dim = ji.at("dim").get<int>();
            if (info.dim <= 0) throw ParseError("irrep " + label + " has non-positive dim");
            info.f_eigenvalues = ji.at("f_eigenvalues").get<std::vector<double>>();
            if (static_cast<int>(info.f_eigenvalues.size()) != info.dim)
                throw ParseError("irrep " + label + ": eigenvalue list length != dim");
            info.conjugate = ji.at("conjugate").get<std::string>();
            info.conj_index_map = ji.at("conj_index_map").get<std::vector<int>>();
            if (static_cast<int>(info.conj_index_map.size()) != info.dim)
                throw ParseError("irrep " + label + ": conj_index_map length != dim");
            for (int s : info.conj_index_map)
                if (s < 0 || s >= info.dim)
                    throw ParseError("irrep " + label + ": conj_index_map entry out of range");
            g.irreps[label] = std::move(info);
        }
        for (const auto& [label, info] : g.irreps)
            if (!g.irreps.count(info.conjugate))
                throw ParseError("irrep " + label + ": unknown conjugate " + info.conjugate);
        for (const auto& jf : j.at("fusion")) {
            IrrepLabel a = jf.at("a").get<std::string>();
            IrrepLabel b = jf.at("b").get<std::string>();
            if (!g.irreps.count(a) || !g.irreps.count(b))
                throw ParseError("fusion entry references unknown labels (" + a + ", " + b + ")");
            if (g.fusion.find(a, b))
                throw ParseError("duplicate fusion entry (" + a + ", " + b + ")");
            FusionEntry e;
            e.complete = jf.at("complete").get<bool>();
            for (const auto& [c, mult] : jf.at("decomp").items()) {
                if (!g.irreps.count(c))
                    throw ParseError("fusion decomp references unknown label " + c);
                e.decomp[c] = mult.get<int>();
            }
            g.fusion.set(a, b, std::move(e));
        }
        g.trivial = detect_trivial(g);
        return g;
    } catch (const json::exception& e) {
        throw ParseError(std::string("instance schema error: ") + e.what());
    }
}

void save_instance(const QuantumGroupData& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << instance_to_json(g).dump(2) << "\n";
}

QuantumGroupData parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("malformed JSON in " + path + ": " + e.what());
    }
    return instance_from_json(j);
}

json element_to_json(const ElementFile& e) {
    json terms = json::array();
    for (const auto& [k, v] : e.coeffs) {
        terms.push_back({{"irrep", k.irrep},
                         {"row", k.row},
                         {"col", k.col},
                         {"re", v.real()},
                         {"im", v.imag()}});
    }
    return json{{"space", space_tag(e.space)}, {"terms", terms}};
}

ElementFile element_from_json(const json& j) {
    try {
        ElementFile e;
        e.space = space_from_tag(j.at("space").get<std::string>());
        for (const auto& jt : j.at("terms")) {
            CoeffKey k{jt.at("irrep").get<std::string>(), jt.at("row").get<int>(),
                       jt.at("col").get<int>()};
            cplx v{jt.at("re").get<double>(), jt.at("im").get<double>()};
            e.coeffs[k] += v;
        }
        return e;
    } catch (const json::exception& ex) {
        throw ParseError(std::string("element schema error: ") + ex.what());
    }
}

void save_element(const ElementFile& e, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << element_to_json(e).dump(2) << "\n";
}

ElementFile load_element(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open element file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("malformed JSON in " + path + ": " + e.what());
    }
    return element_from_json(j);
}

json character_to_json(const CharacterRingElement& x) {
    json terms = json::array();
    for (const auto& [label, v] : x.coeffs)
        terms.push_back({{"irrep", label}, {"re", v.real()}, {"im", v.imag()}});
    return json{{"space", "char"}, {"terms", terms}, {"truncated", x.truncated}};
}

CharacterRingElement character_from_json(const json& j) {
    try {
        if (j.at("space").get<std::string>() != "char")
            throw ParseError("not a character-ring element file");
        CharacterRingElement x;
        x.truncated = j.value("truncated", false);
        for (const auto& jt : j.at("terms"))
            x.coeffs[jt.at("irrep").get<std::string>()] +=
                cplx{jt.at("re").get<double>(), jt.at("im").get<double>()};
        return x;
    } catch (const json::exception& ex) {
        throw ParseError(std::string("character element schema error: ") + ex.what());
    }
}

json report_to_json(const VerificationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"id", c.id},
                          {"status", to_string(c.status)},
                          {"residual", c.residual},
                          {"witness", c.witness},
                          {"reason", c.reason}});
    }
    return json{{"instance", r.instance},
                {"seed", r.seed},
                {"tolerance", r.tolerance},
                {"checks", checks}};
}

}  // namespace cqg
