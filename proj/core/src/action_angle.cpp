#include "kepler/action_angle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kepler/lie_poisson.hpp"

namespace kepler {

double wrap_two_pi(double angle) {
    const double two_pi = 2.0 * M_PI;
    double w = std::fmod(angle, two_pi);
    if (w < 0.0) w += two_pi;
    if (w >= two_pi) w = 0.0;
    return w;
}

OrbitElements orbit_elements(const PhasePoint& z) {
    const auto regime = regime_at(z);
    if (!regime) {
        throw std::domain_error(
            "orbit_elements: point is on Z0 or the H = 0 shell");
    }
    OrbitElements el;
    el.regime = *regime;
    el.action = 0.5 * z.p_squared() - 1.0 / z.radius();
    const double m = z.q1 * z.p2 - z.q2 * z.p1;
    el.m_squared = m * m;
    el.a = (el.regime == Regime::SO3) ? -0.5 / el.action : 0.5 / el.action;
    el.e = std::sqrt(std::max(0.0, 1.0 + 2.0 * el.action * el.m_squared));
    return el;
}

double solve_kepler_elliptic(double mean_anomaly, double eccentricity,
                             double tol) {
    if (eccentricity < 0.0 || eccentricity >= 1.0) {
        throw std::invalid_argument(
            "solve_kepler_elliptic: need 0 <= e < 1");
    }
    if (tol <= 0.0) throw std::invalid_argument("solve_kepler_elliptic: tol > 0");
    const double m = mean_anomaly, e = eccentricity;
    if (e == 0.0) return m;

    auto residual = [&](double u) { return u - e * std::sin(u) - m; };
    double u = m;
    for (int it = 0; it < 50; ++it) {
        const double f = residual(u);
        if (std::abs(f) <= tol) return u;
        const double fp = 1.0 - e * std::cos(u);
        const double step = f / fp;
        u -= step;
    }
    if (std::abs(residual(u)) <= tol) return u;

    // Monotone in u, so the bracket [m - e, m + e] always contains the root.
    double lo = m - e, hi = m + e;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (residual(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    u = 0.5 * (lo + hi);
    return u;
}

double solve_kepler_hyperbolic(double mean_anomaly, double eccentricity,
                               double tol) {
    if (eccentricity <= 1.0) {
        throw std::invalid_argument("solve_kepler_hyperbolic: need e > 1");
    }
    if (tol <= 0.0) {
        throw std::invalid_argument("solve_kepler_hyperbolic: tol > 0");
    }
    const double m = mean_anomaly, e = eccentricity;
    if (m == 0.0) return 0.0;

    // u - e sinh u is strictly decreasing (derivative 1 - e cosh u < 0).
    auto residual = [&](double u) { return u - e * std::sinh(u) - m; };
    double u = std::asinh(-m / e);
    for (int it = 0; it < 50; ++it) {
        const double f = residual(u);
        if (std::abs(f) <= tol) return u;
        const double fp = 1.0 - e * std::cosh(u);
        u -= f / fp;
    }
    if (std::abs(residual(u)) <= tol) return u;

    double lo = std::asinh(-m / e) - 1.0, hi = lo + 2.0;
    while (residual(lo) < 0.0) lo -= std::max(1.0, std::abs(lo));
    while (residual(hi) > 0.0) hi += std::max(1.0, std::abs(hi));
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (residual(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double radius_at_anomaly(const OrbitElements& el, double u) {
    if (el.regime == Regime::SO3) {
        return el.a * (1.0 - el.e * std::cos(u));
    }
    return el.a * (el.e * std::cosh(u) - 1.0);
}

double hamiltonian_in_action(const OrbitElements& el) { return el.action; }

ActionAngleState chart_forward(const PhasePoint& z,
                               HyperbolicTimeConvention convention) {
    const OrbitElements el = orbit_elements(z);
    const CoalgebraPoint x = momentum_map(el.regime, z);
    const DarbouxPoint d = darboux_forward(x);

    ActionAngleState state;
    state.regime = el.regime;
    state.action = el.action;
    state.x1 = d.x1;
    state.angle = d.angle;
    state.a = el.a;
    state.e = el.e;

    const double r = z.radius();
    const double radial = z.qp_dot();
    const double a32 = std::pow(el.a, 1.5);

    if (el.regime == Regime::SO3) {
        double mean;
        if (el.e < kCircularEccentricity) {
            // Degenerate chart: the polar angle of q, oriented along the
            // motion, advances uniformly at the same rate a^{-3/2}.
            const double m12 = z.q1 * z.p2 - z.q2 * z.p1;
            const double theta = std::atan2(z.q2, z.q1);
            mean = wrap_two_pi(m12 >= 0.0 ? theta : -theta);
        } else {
            const double cos_u =
                std::clamp((1.0 - r / el.a) / el.e, -1.0, 1.0);
            double u = std::acos(cos_u);
            if (radial < 0.0) u = -u;
            mean = wrap_two_pi(u - el.e * std::sin(u));
        }
        state.time_angle = mean;
        state.time_since_perihelion = a32 * mean;
        state.cyclic_time = wrap_two_pi(state.time_since_perihelion);
        return state;
    }

    const double cosh_u = std::max(1.0, (1.0 + r / el.a) / el.e);
    double u = std::acosh(cosh_u);
    if (radial < 0.0) u = -u;
    const double mean = u - el.e * std::sinh(u);  // decreasing in u
    const double tau = a32 * mean;
    state.time_since_perihelion = -tau;
    state.time_angle =
        (convention == HyperbolicTimeConvention::Decreasing) ? tau : -tau;
    return state;
}

}  // namespace kepler
