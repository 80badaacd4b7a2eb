#include "desub/report.hpp"

#include <sstream>

namespace desub {

std::string ThreeValued::kind_name() const {
    switch (kind) {
        case Kind::Holds: return "Holds";
        case Kind::Fails: return "Fails";
        case Kind::Unknown: return "Unknown";
    }
    return "?";
}

nlohmann::json PropertyReport::to_json() const {
    nlohmann::json j;
    j["property"] = property;
    j["verdict"] = verdict.kind_name();
    if (verdict.is_fails()) j["witness"] = verdict.witness;
    if (verdict.is_unknown()) j["depth"] = verdict.depth;
    j["params"] = nlohmann::json::object();
    for (const auto& [k, v] : params) j["params"][k] = v;
    j["witnesses"] = witnesses;
    return j;
}

std::string PropertyReport::to_text() const {
    std::ostringstream out;
    out << property << ": " << verdict.kind_name() << "\n";
    for (const auto& [k, v] : params) out << "  " << k << " = " << v << "\n";
    if (verdict.is_fails()) out << "  witness: " << verdict.witness << "\n";
    if (!witnesses.empty()) out << "  evidence: " << witnesses.dump() << "\n";
    return out.str();
}

} // namespace desub
