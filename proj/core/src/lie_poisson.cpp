#include "kepler/lie_poisson.hpp"

#include <cmath>
#include <stdexcept>

namespace kepler {

double casimir_quadratic(const CoalgebraPoint& x) {
    const double s3 = (x.regime == Regime::SO3) ? 1.0 : -1.0;
    return x.x1 * x.x1 + x.x2 * x.x2 + s3 * x.x3 * x.x3;
}

double casimir(const CoalgebraPoint& x) {
    const double c = casimir_quadratic(x);
    if (c == 0.0) {
        throw std::domain_error("casimir: quadratic form vanishes");
    }
    return (x.regime == Regime::SO3) ? -0.5 / c : 0.5 / c;
}

CoalgebraFunction coalgebra_coordinate(int i) {
    if (i < 1 || i > 3) {
        throw std::invalid_argument("coalgebra_coordinate: index must be 1..3");
    }
    const int k = i - 1;
    return CoalgebraFunction{
        "x" + std::to_string(i),
        [k](const R3& x) { return x[k]; },
        [k](const R3&) {
            R3 g{};
            g[k] = 1.0;
            return g;
        }};
}

CoalgebraFunction finite_difference_function(
    std::string label, std::function<double(const R3&)> value, double h,
    bool angular) {
    auto grad = [value, h, angular](const R3& x) {
        R3 g{};
        for (int k = 0; k < 3; ++k) {
            R3 hi = x, lo = x;
            hi[k] += h;
            lo[k] -= h;
            double d = value(hi) - value(lo);
            if (angular) d = std::remainder(d, 2.0 * M_PI);
            g[k] = d / (2.0 * h);
        }
        return g;
    };
    return CoalgebraFunction{std::move(label), std::move(value), grad};
}

double lie_poisson_bracket(const StructureConstants& c,
                           const CoalgebraFunction& f,
                           const CoalgebraFunction& g,
                           const CoalgebraPoint& x) {
    if (c.regime != x.regime) {
        throw std::invalid_argument(
            "lie_poisson_bracket: structure constants and point disagree on "
            "the regime");
    }
    const R3 coords = x.coords();
    const R3 gf = f.gradient(coords);
    const R3 gg = g.gradient(coords);
    double s = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (gf[i] == 0.0 || gg[j] == 0.0) continue;
            s += c.contract(i, j, coords) * gf[i] * gg[j];
        }
    }
    return s;
}

CoalgebraPoint momentum_map(Regime regime, const PhasePoint& z) {
    const auto actual = regime_at(z);
    if (!actual || *actual != regime) {
        throw std::domain_error(
            "momentum_map: point is not in the region of the requested regime");
    }
    auto [c1, c2] = rescaled_integrals(regime);
    const double m = z.q1 * z.p2 - z.q2 * z.p1;
    return CoalgebraPoint{regime, -c1.value(z), -c2.value(z), -m};
}

R3 coadjoint_field(const CoalgebraPoint& x, int i) {
    if (i < 1 || i > 3) {
        throw std::invalid_argument("coadjoint_field: index must be 1..3");
    }
    if (x.regime == Regime::SO3) {
        switch (i) {
            case 1: return {0.0, x.x3, -x.x2};
            case 2: return {-x.x3, 0.0, x.x1};
            default: return {x.x2, -x.x1, 0.0};
        }
    }
    switch (i) {
        case 1: return {0.0, -x.x3, -x.x2};
        case 2: return {x.x3, 0.0, x.x1};
        default: return {x.x2, -x.x1, 0.0};
    }
}

DarbouxPoint darboux_forward(const CoalgebraPoint& x) {
    DarbouxPoint d;
    d.regime = x.regime;
    d.x1 = x.x1;
    if (x.regime == Regime::SO3) {
        const double rho_sq = x.x2 * x.x2 + x.x3 * x.x3;
        if (rho_sq <= 0.0) {
            throw std::domain_error("darboux_forward: x2 = x3 = 0");
        }
        if (x.x3 == 0.0) {
            throw std::domain_error(
                "darboux_forward: chart boundary (gamma = pi/2 or 3pi/2)");
        }
        d.action = casimir(x);
        double gamma = std::atan2(x.x2, x.x3);
        if (gamma < 0.0) gamma += 2.0 * M_PI;
        d.angle = gamma;
        d.branch = 1;
        return d;
    }
    const double c = casimir_quadratic(x);
    if (c <= 0.0) {
        throw std::domain_error("darboux_forward: quadratic form not positive");
    }
    const double rho_sq = x.x2 * x.x2 - x.x3 * x.x3;
    if (rho_sq <= 0.0) {
        throw std::domain_error(
            "darboux_forward: point outside the chart patch (x2^2 <= x3^2)");
    }
    if (x.x3 == 0.0) {
        throw std::domain_error("darboux_forward: chart boundary (lambda = 0)");
    }
    d.action = 0.5 / c;
    d.branch = (x.x2 > 0.0) ? 1 : -1;
    // atanh(x3/x2) equals asinh(x3/rho) on the x2 > 0 branch and stays
    // branch-correct for x2 < 0.
    d.angle = std::atanh(x.x3 / x.x2);
    return d;
}

CoalgebraPoint darboux_inverse(const DarbouxPoint& d) {
    CoalgebraPoint x;
    x.regime = d.regime;
    x.x1 = d.x1;
    if (d.regime == Regime::SO3) {
        if (d.action >= 0.0) {
            throw std::domain_error("darboux_inverse: SO3 needs action < 0");
        }
        const double rho_sq = -0.5 / d.action - d.x1 * d.x1;
        if (rho_sq <= 0.0) {
            throw std::domain_error("darboux_inverse: -1/(2I) - x1^2 <= 0");
        }
        const double rho = std::sqrt(rho_sq);
        x.x2 = rho * std::sin(d.angle);
        x.x3 = rho * std::cos(d.angle);
        return x;
    }
    if (d.action <= 0.0) {
        throw std::domain_error("darboux_inverse: SO21 needs action > 0");
    }
    const double rho_sq = 0.5 / d.action - d.x1 * d.x1;
    if (rho_sq <= 0.0) {
        throw std::domain_error("darboux_inverse: 1/(2I) - x1^2 <= 0");
    }
    const double rho = std::sqrt(rho_sq);
    const double sign = (d.branch >= 0) ? 1.0 : -1.0;
    x.x2 = sign * rho * std::cosh(d.angle);
    x.x3 = sign * rho * std::sinh(d.angle);
    return x;
}

DarbouxBracketReport verify_darboux_bracket(const CoalgebraPoint& x,
                                            double tol) {
    const StructureConstants sc = StructureConstants::for_regime(x.regime);
    const Regime regime = x.regime;
    const double h = 1e-6;

    auto action_value = [regime](const R3& v) {
        return casimir(CoalgebraPoint{regime, v[0], v[1], v[2]});
    };
    auto angle_value = [regime](const R3& v) {
        return darboux_forward(CoalgebraPoint{regime, v[0], v[1], v[2]}).angle;
    };
    const CoalgebraFunction action_fn = finite_difference_function(
        "I", action_value, h);
    const CoalgebraFunction angle_fn = finite_difference_function(
        "angle", angle_value, h, /*angular=*/regime == Regime::SO3);
    const CoalgebraFunction x1_fn = coalgebra_coordinate(1);

    DarbouxBracketReport report;
    report.regime = regime;
    if (regime == Regime::SO3) {
        report.canonical_pair_residual =
            std::abs(lie_poisson_bracket(sc, x1_fn, angle_fn, x) - 1.0);
    } else {
        report.canonical_pair_residual =
            std::abs(lie_poisson_bracket(sc, angle_fn, x1_fn, x) - 1.0);
    }
    report.action_x1_residual =
        std::abs(lie_poisson_bracket(sc, action_fn, x1_fn, x));
    report.action_angle_residual =
        std::abs(lie_poisson_bracket(sc, action_fn, angle_fn, x));
    report.max_residual =
        std::max({report.canonical_pair_residual, report.action_x1_residual,
                  report.action_angle_residual});
    report.pass = report.max_residual <= tol;
    return report;
}

R3 chart_hamiltonian_field(const DarbouxPoint& d, int i) {
    if (i < 1 || i > 3) {
        throw std::invalid_argument("chart_hamiltonian_field: index must be 1..3");
    }
    const double I = d.action;
    const double four_i_sq = 4.0 * I * I;
    if (d.regime == Regime::SO3) {
        const double rho_sq = -0.5 / I - d.x1 * d.x1;
        const double rho = std::sqrt(rho_sq);
        const double sg = std::sin(d.angle), cg = std::cos(d.angle);
        switch (i) {
            case 1: return {0.0, 0.0, 1.0};
            case 2: return {sg / (four_i_sq * rho), -rho * cg, -d.x1 * sg / rho};
            default: return {cg / (four_i_sq * rho), rho * sg, -d.x1 * cg / rho};
        }
    }
    const double rho_sq = 0.5 / I - d.x1 * d.x1;
    const double rho = std::sqrt(rho_sq);
    const double sign = (d.branch >= 0) ? 1.0 : -1.0;
    const double sh = std::sinh(d.angle), ch = std::cosh(d.angle);
    switch (i) {
        case 1: return {0.0, 0.0, -1.0};
        case 2:
            return {-sign * ch / (four_i_sq * rho), sign * rho * sh,
                    sign * d.x1 * ch / rho};
        default:
            return {-sign * sh / (four_i_sq * rho), sign * rho * ch,
                    sign * d.x1 * sh / rho};
    }
}

}  // namespace kepler
