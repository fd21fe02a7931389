#pragma once

#include <json.hpp>
#include <string>

#include "cqg/elements.hpp"
#include "cqg/fusion_data.hpp"
#include "cqg/report.hpp"

namespace cqg {

enum class ElementSpace { l1, l2, linf };

const char* space_tag(ElementSpace s);
ElementSpace space_from_tag(const std::string& tag);

/// Element file payload: a space tag plus the sparse coefficient map.
struct ElementFile {
    ElementSpace space = ElementSpace::l1;
    CoeffMap coeffs;
};

nlohmann::json instance_to_json(const QuantumGroupData& g);

/// Structural parse only (shapes, index bounds, label resolution, trivial
/// detection); numeric invariants are left to validate(). Throws ParseError.
QuantumGroupData instance_from_json(const nlohmann::json& j);

void save_instance(const QuantumGroupData& g, const std::string& path);

/// Parse a file without the validation gate (the verification suite reports
/// invariant violations itself).
QuantumGroupData parse_instance_file(const std::string& path);

nlohmann::json element_to_json(const ElementFile& e);
ElementFile element_from_json(const nlohmann::json& j);
void save_element(const ElementFile& e, const std::string& path);
ElementFile load_element(const std::string& path);

nlohmann::json character_to_json(const CharacterRingElement& x);
CharacterRingElement character_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& r);

}  // namespace cqg
