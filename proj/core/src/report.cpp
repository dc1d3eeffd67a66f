#include "kepler/report.hpp"

#include "json.hpp"

namespace kepler {

bool VerificationReport::all_passed() const {
    for (const auto& c : checks) {
        if (!c.pass()) return false;
    }
    return true;
}

std::string VerificationReport::to_json_string(int indent) const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["version"] = version;
    j["seed"] = seed;
    j["samples"] = samples;
    j["rng"] = rng;
    j["conventions"] = {
        {"bracket_sign_qp", conventions.bracket_sign_qp},
        {"hyperbolic_time_sign", conventions.hyperbolic_time_sign},
    };
    if (timestamp) j["timestamp"] = *timestamp;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        j["checks"].push_back({
            {"name", c.name},
            {"samples", c.samples},
            {"passed", c.passed},
            {"failed", c.failed},
            {"max_residual", c.max_residual},
            {"tolerance", c.tolerance},
        });
    }
    j["all_passed"] = all_passed();
    return j.dump(indent);
}

}  // namespace kepler
