#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kepler {

inline constexpr const char* kToolVersion = "0.1.0";

struct CheckResult {
    std::string name;
    long samples = 0;
    long passed = 0;
    long failed = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;

    bool pass() const { return failed == 0; }
};

/// Convention flags carried by every report.
/// bracket_sign_qp: value of {q1, p1} under the calibrated bracket (-1).
/// hyperbolic_time_sign: sign of d tau / dt along the integrated flow for the
/// verbatim tau formula (measured; -1 means tau decreases with physical time).
struct Conventions {
    int bracket_sign_qp = -1;
    int hyperbolic_time_sign = 0;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    long samples = 0;
    std::string version = kToolVersion;
    std::string rng;
    Conventions conventions;
    std::vector<CheckResult> checks;
    std::optional<std::string> timestamp;

    bool all_passed() const;
    /// Serialized as a single JSON document; deterministic for fixed inputs
    /// when the timestamp is absent.
    std::string to_json_string(int indent = 2) const;
};

}  // namespace kepler
