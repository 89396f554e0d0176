#include "report_json.hpp"

#include "postrig/error.hpp"

namespace postrig {

using nlohmann::json;

void to_json(json& j, const EndpointInfo& e)
{
    j = json{{"theta", e.theta},   {"value", e.value},   {"vanishes", e.vanishes},
             {"order", e.order},   {"slope", e.slope},   {"margin", e.margin}};
}

void from_json(const json& j, EndpointInfo& e)
{
    j.at("theta").get_to(e.theta);
    j.at("value").get_to(e.value);
    j.at("vanishes").get_to(e.vanishes);
    j.at("order").get_to(e.order);
    j.at("slope").get_to(e.slope);
    j.at("margin").get_to(e.margin);
}

Verdict verdict_from_string(const std::string& s)
{
    if (s == "certified-positive")
        return Verdict::certified_positive;
    if (s == "refuted")
        return Verdict::refuted;
    if (s == "inconclusive")
        return Verdict::inconclusive;
    throw DomainError("unknown verdict '" + s + "'");
}

void to_json(json& j, const PositivityReport& r)
{
    j = json{{"verdict", to_string(r.verdict)},
             {"lower_bound", r.lower_bound},
             {"grid_points", r.grid_points},
             {"refinement_depth", r.refinement_depth},
             {"lipschitz", r.lipschitz},
             {"interval", {{"lo", r.lo}, {"hi", r.hi}}},
             {"lo_end", r.lo_end},
             {"hi_end", r.hi_end},
             {"boundary_notes", r.boundary_notes}};
    if (r.witness)
        j["witness"] = {{"theta", r.witness->theta}, {"value", r.witness->value}};
    else
        j["witness"] = nullptr;
}

void from_json(const json& j, PositivityReport& r)
{
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    j.at("lower_bound").get_to(r.lower_bound);
    j.at("grid_points").get_to(r.grid_points);
    j.at("refinement_depth").get_to(r.refinement_depth);
    j.at("lipschitz").get_to(r.lipschitz);
    j.at("interval").at("lo").get_to(r.lo);
    j.at("interval").at("hi").get_to(r.hi);
    j.at("lo_end").get_to(r.lo_end);
    j.at("hi_end").get_to(r.hi_end);
    j.at("boundary_notes").get_to(r.boundary_notes);
    const auto& w = j.at("witness");
    if (w.is_null())
        r.witness.reset();
    else
        r.witness = Witness{w.at("theta").get<double>(), w.at("value").get<double>()};
}

void to_json(json& j, const SpecialConstant& c)
{
    j = json{{"name", c.name},
             {"value", c.value},
             {"route", c.route},
             {"residual", c.residual},
             {"tol", c.tol}};
    if (c.cross_route_value)
        j["cross_route_value"] = *c.cross_route_value;
}

void to_json(json& j, const CriterionReport& r)
{
    j = json{{"satisfied", r.satisfied}, {"margin", r.margin}};
    j["first_violation_index"] =
        r.first_violation_index ? json(*r.first_violation_index) : json(nullptr);
    if (r.partial_sums)
        j["partial_sums"] = *r.partial_sums;
    if (!r.note.empty())
        j["note"] = r.note;
}

void to_json(json& j, const ZeroBracketList& z)
{
    j = json{{"polynomial_kind", z.kind == ZeroKind::p ? "p" : "q"}, {"brackets", json::array()}};
    for (const auto& b : z.brackets)
        j["brackets"].push_back({{"lo", b.lo},
                                 {"hi", b.hi},
                                 {"sign_lo", b.sign_lo},
                                 {"sign_hi", b.sign_hi},
                                 {"root", b.root}});
}

} // namespace postrig
