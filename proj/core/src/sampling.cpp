#include "kepler/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace kepler {

namespace {

PhasePoint draw(SampleRng& rng, const SamplingMargins& m) {
    const double theta = rng.uniform(0.0, 2.0 * M_PI);
    const double r = rng.uniform(m.r_min, m.r_max);
    PhasePoint z;
    z.q1 = r * std::cos(theta);
    z.q2 = r * std::sin(theta);
    z.p1 = rng.uniform(-m.p_max, m.p_max);
    z.p2 = rng.uniform(-m.p_max, m.p_max);
    return z;
}

bool in_u(const PhasePoint& z, const SamplingMargins& m) {
    const double m12 = z.q1 * z.p2 - z.q2 * z.p1;
    if (std::abs(m12) < m.min_m12) return false;
    const double h = 0.5 * z.p_squared() - 1.0 / z.radius();
    return std::abs(h) >= m.min_abs_h;
}

bool in_regime(const PhasePoint& z, Regime regime, const SamplingMargins& m) {
    if (!in_u(z, m)) return false;
    const double h = 0.5 * z.p_squared() - 1.0 / z.radius();
    return (regime == Regime::SO3) ? h < 0.0 : h > 0.0;
}

constexpr int kMaxDraws = 1000000;

}  // namespace

PhasePoint sample_point_in_u(SampleRng& rng, const SamplingMargins& m) {
    for (int i = 0; i < kMaxDraws; ++i) {
        const PhasePoint z = draw(rng, m);
        if (in_u(z, m)) return z;
    }
    throw std::runtime_error("sample_point_in_u: rejection sampling stalled");
}

PhasePoint sample_regime_point(SampleRng& rng, Regime regime,
                               const SamplingMargins& m) {
    for (int i = 0; i < kMaxDraws; ++i) {
        const PhasePoint z = draw(rng, m);
        if (in_regime(z, regime, m)) return z;
    }
    throw std::runtime_error("sample_regime_point: rejection sampling stalled");
}

PhasePoint sample_chart_point(SampleRng& rng, Regime regime,
                              const SamplingMargins& m) {
    for (int i = 0; i < kMaxDraws; ++i) {
        const PhasePoint z = draw(rng, m);
        if (!in_regime(z, regime, m)) continue;
        const CoalgebraPoint x = momentum_map(regime, z);
        if (regime == Regime::SO3) {
            // Stay chart_margin in angle away from gamma = pi/2, 3pi/2.
            const double rho = std::sqrt(x.x2 * x.x2 + x.x3 * x.x3);
            if (std::abs(x.x3) < std::sin(m.chart_margin) * rho) continue;
            return z;
        }
        const double rho_sq = x.x2 * x.x2 - x.x3 * x.x3;
        if (rho_sq < 0.01) continue;  // inside the chart patch, not grazing it
        const double rho = std::sqrt(rho_sq);
        if (std::abs(x.x3) < std::sinh(m.chart_margin) * rho) continue;
        return z;
    }
    throw std::runtime_error("sample_chart_point: rejection sampling stalled");
}

CoalgebraPoint sample_coalgebra_point(SampleRng& rng, Regime regime,
                                      const SamplingMargins& m) {
    return momentum_map(regime, sample_regime_point(rng, regime, m));
}

}  // namespace kepler
