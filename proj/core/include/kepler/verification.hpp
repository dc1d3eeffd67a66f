#pragma once

#include <cstdint>
#include <optional>

#include "kepler/report.hpp"
#include "kepler/system.hpp"

namespace kepler {

/// Options for the sampled verification suites. When tol_override is unset,
/// every check runs at its pinned tolerance (the values the acceptance
/// criteria fix); when set, it replaces the pinned tolerance, except that
/// finite-difference-limited checks (gradient oracle, Darboux chart
/// brackets) never go below their discretization floor of 1e-6.
struct VerifyOptions {
    long samples = 1000;
    std::uint64_t seed = 42;
    std::optional<double> tol_override;
    bool with_timestamp = true;
};

/// Full check suite for one regime (bracket tables, Lie-algebra relations,
/// superintegrability ranks, algebraic identities, coalgebra layer, chart
/// roundtrips, gradient oracle).
VerificationReport run_regime_suite(Regime regime, const VerifyOptions& opts);

/// One regime, or both merged into a single report when regime is nullopt.
VerificationReport run_verification(std::optional<Regime> regime,
                                    const VerifyOptions& opts);

/// Short integration probe: sign of d tau / dt for the verbatim hyperbolic
/// time formula along the actual flow (-1 or +1).
int measure_hyperbolic_time_sign();

}  // namespace kepler
