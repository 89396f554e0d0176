#ifndef POSTRIG_TOOLS_REPORT_JSON_HPP
#define POSTRIG_TOOLS_REPORT_JSON_HPP

#include <json.hpp>

#include "postrig/certify.hpp"
#include "postrig/seqkit.hpp"
#include "postrig/specfun.hpp"

namespace postrig {

// Keys are lower snake case throughout.
void to_json(nlohmann::json& j, const EndpointInfo& e);
void from_json(const nlohmann::json& j, EndpointInfo& e);
void to_json(nlohmann::json& j, const PositivityReport& r);
void from_json(const nlohmann::json& j, PositivityReport& r);
void to_json(nlohmann::json& j, const SpecialConstant& c);
void to_json(nlohmann::json& j, const CriterionReport& r);
void to_json(nlohmann::json& j, const ZeroBracketList& z);

Verdict verdict_from_string(const std::string& s);

} // namespace postrig

#endif
