#include "kepler/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kepler/system.hpp"

namespace kepler {

namespace {

inline void kick(PhasePoint& z, double half_dt) {
    const double r2 = z.q1 * z.q1 + z.q2 * z.q2;
    const double inv_r3 = 1.0 / (r2 * std::sqrt(r2));
    z.p1 -= half_dt * z.q1 * inv_r3;
    z.p2 -= half_dt * z.q2 * inv_r3;
}

inline ConservedSample conserved_at(const PhasePoint& z) {
    const double r = z.radius();
    const double psq = z.p_squared();
    const double pq = z.qp_dot();
    ConservedSample c;
    c.h = 0.5 * psq - 1.0 / r;
    c.m12 = z.q1 * z.p2 - z.q2 * z.p1;
    c.a1 = z.q1 * psq - z.p1 * pq - z.q1 / r;
    c.a2 = z.q2 * psq - z.p2 * pq - z.q2 / r;
    return c;
}

// Distance of z0 to the segment (a, b), minimizing the l2 parameter and
// reporting the l-infinity distance at the minimizer, plus the parameter.
struct SegmentHit {
    double linf;
    double s;
};

SegmentHit segment_distance(const PhasePoint& z0, const PhasePoint& a,
                            const PhasePoint& b) {
    const double d[4] = {b.q1 - a.q1, b.q2 - a.q2, b.p1 - a.p1, b.p2 - a.p2};
    const double w[4] = {z0.q1 - a.q1, z0.q2 - a.q2, z0.p1 - a.p1,
                         z0.p2 - a.p2};
    double dd = 0.0, wd = 0.0;
    for (int k = 0; k < 4; ++k) {
        dd += d[k] * d[k];
        wd += w[k] * d[k];
    }
    double s = (dd > 0.0) ? std::clamp(wd / dd, 0.0, 1.0) : 0.0;
    double linf = 0.0;
    for (int k = 0; k < 4; ++k) {
        linf = std::max(linf, std::abs(w[k] - s * d[k]));
    }
    return {linf, s};
}

}  // namespace

PhasePoint verlet_step(const PhasePoint& z, double dt) {
    if (z.radius() <= 1e-6) {
        throw std::domain_error("verlet_step: radius underflow");
    }
    if (dt == 0.0) return z;
    PhasePoint out = z;
    kick(out, 0.5 * dt);
    out.q1 += dt * out.p1;
    out.q2 += dt * out.p2;
    kick(out, 0.5 * dt);
    return out;
}

Trajectory integrate(const PhasePoint& z0, double dt, long steps,
                     IntegrationLimits limits) {
    if (steps < 1) throw std::invalid_argument("integrate: steps >= 1");
    Trajectory traj;
    traj.dt = dt;
    traj.states.reserve(static_cast<std::size_t>(steps) + 1);
    traj.conserved.reserve(static_cast<std::size_t>(steps) + 1);
    traj.states.push_back(z0);
    traj.conserved.push_back(conserved_at(z0));
    PhasePoint z = z0;
    for (long k = 0; k < steps; ++k) {
        if (z.radius() <= limits.min_radius) {
            traj.stop_reason = StopReason::RadiusUnderflow;
            return traj;
        }
        z = verlet_step(z, dt);
        if (z.radius() <= limits.min_radius) {
            traj.stop_reason = StopReason::RadiusUnderflow;
            return traj;
        }
        traj.states.push_back(z);
        traj.conserved.push_back(conserved_at(z));
        if (z.radius() > limits.escape_radius) {
            traj.stop_reason = StopReason::Escaped;
            return traj;
        }
    }
    traj.stop_reason = StopReason::Completed;
    return traj;
}

const char* to_string(TopologyTag tag) {
    switch (tag) {
        case TopologyTag::Circle: return "CIRCLE";
        case TopologyTag::Line: return "LINE";
        default: return "UNDECIDED";
    }
}

TopologyVerdict classify_topology(const Trajectory& traj, double return_tol,
                                  double escape_radius) {
    TopologyVerdict verdict;
    if (traj.states.size() < 2) return verdict;
    const PhasePoint& z0 = traj.states.front();
    const double h0 = traj.conserved.front().h;
    // Return detection arms only once the state has genuinely left the
    // tolerance ball; otherwise small timesteps report a bogus tiny period.
    const double leave_radius = 10.0 * return_tol;
    bool armed = false;
    for (std::size_t k = 1; k < traj.states.size(); ++k) {
        const double r = traj.states[k].radius();
        if (r > escape_radius && h0 > 0.0) {
            verdict.tag = TopologyTag::Line;
            verdict.escape_radius = r;
            return verdict;
        }
        const SegmentHit hit =
            segment_distance(z0, traj.states[k - 1], traj.states[k]);
        if (!armed) {
            if (hit.linf > leave_radius) armed = true;
        } else if (k > 10 && hit.linf < return_tol) {
            verdict.tag = TopologyTag::Circle;
            verdict.period = (static_cast<double>(k - 1) + hit.s) * traj.dt;
            return verdict;
        }
    }
    return verdict;
}

TopologyVerdict classify_orbit(const PhasePoint& z0, double dt, long max_steps,
                               double return_tol, double escape_radius) {
    TopologyVerdict verdict;
    const double h0 = 0.5 * z0.p_squared() - 1.0 / z0.radius();
    const double leave_radius = 10.0 * return_tol;
    bool armed = false;
    PhasePoint prev = z0;
    for (long k = 1; k <= max_steps; ++k) {
        if (prev.radius() <= 1e-6) return verdict;
        const PhasePoint cur = verlet_step(prev, dt);
        if (cur.radius() <= 1e-6) return verdict;
        if (cur.radius() > escape_radius && h0 > 0.0) {
            verdict.tag = TopologyTag::Line;
            verdict.escape_radius = cur.radius();
            return verdict;
        }
        const SegmentHit hit = segment_distance(z0, prev, cur);
        if (!armed) {
            if (hit.linf > leave_radius) armed = true;
        } else if (k > 10 && hit.linf < return_tol) {
            verdict.tag = TopologyTag::Circle;
            verdict.period = (static_cast<double>(k - 1) + hit.s) * dt;
            return verdict;
        }
        prev = cur;
    }
    return verdict;
}

}  // namespace kepler
