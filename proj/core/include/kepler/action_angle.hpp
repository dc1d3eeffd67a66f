#pragma once

#include <optional>

#include "kepler/phase.hpp"
#include "kepler/system.hpp"

namespace kepler {

/// Orbit elements of a Kepler orbit off the H = 0 shell.
/// SO3 (H < 0): a = -1/(2I), e = sqrt(1 + 2 I M^2) in [0,1).
/// SO21 (H > 0): a = +1/(2I), e = sqrt(1 + 2 I M^2) > 1.
/// e equals |A| (the Runge-Lenz norm) in both regimes.
struct OrbitElements {
    Regime regime;
    double action = 0.0;  // I = H(z)
    double a = 0.0;
    double e = 0.0;
    double m_squared = 0.0;
};

/// Throws std::domain_error on Z0 or the H = 0 shell.
OrbitElements orbit_elements(const PhasePoint& z);

/// Solve u - e sin(u) = mean_anomaly for 0 <= e < 1 with |residual| <= tol.
/// Newton from u0 = mean_anomaly, bisection fallback on [M - e, M + e]
/// (the equation is strictly increasing in u). The root stays in the same
/// 2 pi branch as the input.
double solve_kepler_elliptic(double mean_anomaly, double eccentricity,
                             double tol = 1e-13);

/// Solve u - e sinh(u) = mean_anomaly for e > 1 (strictly decreasing,
/// unique root). Newton from u0 = asinh(-mean_anomaly / e), expanding-bracket
/// bisection fallback.
double solve_kepler_hyperbolic(double mean_anomaly, double eccentricity,
                               double tol = 1e-13);

/// r = a (1 - e cos u) in the bounded regime, a (e cosh u - 1) in the
/// unbounded one.
double radius_at_anomaly(const OrbitElements& el, double u);

/// The Hamiltonian as a function of the action alone: returns I.
double hamiltonian_in_action(const OrbitElements& el);

/// Sign convention for the unbounded time angle. Decreasing keeps
/// tau = a^{3/2} (u - e sinh u), which runs opposite to the physical flow;
/// Increasing negates it (tau = physical time since perihelion).
enum class HyperbolicTimeConvention { Decreasing, Increasing };

/// Chart values (I, x1, angle, time-angle) plus orbit elements.
/// Elliptic: time_angle is the mean anomaly in [0, 2 pi) (time since
/// perihelion rescaled by a^{-3/2}); cyclic_time carries the literal
/// t mod 2 pi. Hyperbolic: time_angle is tau per the chosen convention.
struct ActionAngleState {
    Regime regime;
    double action = 0.0;
    double x1 = 0.0;
    double angle = 0.0;
    double time_angle = 0.0;
    double a = 0.0;
    double e = 0.0;
    double time_since_perihelion = 0.0;
    std::optional<double> cyclic_time;
};

/// Full chart map. Throws std::domain_error off U- / U+ or on a chart
/// boundary (see darboux_forward). Circular orbits (e < 1e-9) use
/// sign(M12) * polar angle of q as the time phase.
ActionAngleState chart_forward(
    const PhasePoint& z,
    HyperbolicTimeConvention convention = HyperbolicTimeConvention::Decreasing);

/// Eccentricity threshold below which an orbit is treated as circular.
inline constexpr double kCircularEccentricity = 1e-9;

/// Wrap an angle into [0, 2 pi).
double wrap_two_pi(double angle);

}  // namespace kepler
