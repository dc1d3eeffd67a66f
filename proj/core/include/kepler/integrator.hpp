#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "kepler/phase.hpp"

namespace kepler {

/// One kick-drift-kick (Stormer-Verlet) step of the flow of H = p^2/2 - 1/r
/// (force -q/r^3). Time-reversible: stepping dt then -dt restores the state
/// to roundoff. Throws std::domain_error if r(z) <= 1e-6 on entry.
PhasePoint verlet_step(const PhasePoint& z, double dt);

enum class StopReason { Completed, Escaped, RadiusUnderflow };

struct ConservedSample {
    double h, m12, a1, a2;
};

struct IntegrationLimits {
    double escape_radius = std::numeric_limits<double>::infinity();
    double min_radius = 1e-6;
};

/// Fixed-step trajectory with the conserved quantities (H, M12, A1, A2)
/// recorded at every state. Stops early when r exceeds escape_radius or
/// underflows min_radius; the stop reason is recorded, not thrown.
struct Trajectory {
    double dt = 0.0;
    std::vector<PhasePoint> states;
    std::vector<ConservedSample> conserved;
    StopReason stop_reason = StopReason::Completed;
};

Trajectory integrate(const PhasePoint& z0, double dt, long steps,
                     IntegrationLimits limits = {});

enum class TopologyTag { Circle, Line, Undecided };

const char* to_string(TopologyTag tag);

/// CIRCLE requires a detected return with positive period; LINE requires
/// escape past the configured radius with H > 0.
struct TopologyVerdict {
    TopologyTag tag = TopologyTag::Undecided;
    std::optional<double> period;
    std::optional<double> escape_radius;
};

/// CIRCLE if, after step 10, the trajectory passes within return_tol of the
/// initial state in all four coordinates (checked on states and linearly
/// interpolated between consecutive states; period = interpolated step * dt).
/// LINE if r exceeds escape_radius while H > 0. UNDECIDED otherwise.
TopologyVerdict classify_topology(const Trajectory& traj, double return_tol,
                                  double escape_radius);

/// Streaming equivalent of integrate + classify_topology that never stores
/// the trajectory; used for long orbits.
TopologyVerdict classify_orbit(const PhasePoint& z0, double dt, long max_steps,
                               double return_tol, double escape_radius);

}  // namespace kepler
