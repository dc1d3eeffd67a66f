#pragma once

#include <array>
#include <functional>
#include <string>

#include "kepler/phase.hpp"
#include "kepler/structure.hpp"
#include "kepler/system.hpp"

namespace kepler {

using R3 = std::array<double, 3>;

/// A point of the coalgebra so(3)* or so(2,1)* in the coordinates (x1,x2,x3).
struct CoalgebraPoint {
    Regime regime;
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;

    R3 coords() const { return {x1, x2, x3}; }
};

/// Quadratic Casimir C = x1^2 + x2^2 + x3^2 (SO3) or x1^2 + x2^2 - x3^2 (SO21).
double casimir_quadratic(const CoalgebraPoint& x);

/// Energy Casimir h = -1/(2C) on so(3)*, +1/(2C) on so(2,1)*.
/// Throws std::domain_error when C = 0 (the so(2,1) null cone).
double casimir(const CoalgebraPoint& x);

/// Function on the coalgebra with an analytic gradient.
struct CoalgebraFunction {
    std::string label;
    std::function<double(const R3&)> value;
    std::function<R3(const R3&)> gradient;
};

/// Coordinate function x_i (i = 1..3) with its trivial gradient.
CoalgebraFunction coalgebra_coordinate(int i);

/// Central finite-difference gradient wrapper; set angular to difference the
/// value modulo 2 pi (for cyclic chart functions).
CoalgebraFunction finite_difference_function(
    std::string label, std::function<double(const R3&)> value, double h,
    bool angular = false);

/// Lie-Poisson bracket {f,g}(x) = c_ij^h x_h  df/dx_i dg/dx_j.
double lie_poisson_bracket(const StructureConstants& c,
                           const CoalgebraFunction& f,
                           const CoalgebraFunction& g,
                           const CoalgebraPoint& x);

/// Momentum map: SO3 sends z in U- to (-L1,-L2,-M12), SO21 sends z in U+ to
/// (-K1,-K2,-M12). Throws std::domain_error off the regime's region.
/// Postcondition (tested): casimir(momentum_map(regime, z)) = H(z).
CoalgebraPoint momentum_map(Regime regime, const PhasePoint& z);

/// Coadjoint generator field (epsilon_i components at x, i = 1..3); equals
/// the Lie-Poisson Hamiltonian field of the coordinate x_i.
R3 coadjoint_field(const CoalgebraPoint& x, int i);

/// Darboux chart values on the coalgebra base.
/// SO3:  action I = -1/(2C) < 0, angle = gamma in [0, 2 pi), branch unused (+1).
/// SO21: action I = +1/(2C) > 0, angle = lambda in R, branch = sign(x2);
///       covers only the patch x2^2 > x3^2 of the base.
struct DarbouxPoint {
    Regime regime;
    double action = 0.0;
    double x1 = 0.0;
    double angle = 0.0;
    int branch = 1;
};

/// Throws std::domain_error at chart boundaries: x3 = 0 (both regimes),
/// x2^2 + x3^2 = 0 (SO3), C <= 0 or x2^2 - x3^2 <= 0 (SO21).
DarbouxPoint darboux_forward(const CoalgebraPoint& x);

/// Inverse chart map; the returned point's casimir equals the action.
CoalgebraPoint darboux_inverse(const DarbouxPoint& d);

/// Canonical-bracket residuals of the chart, computed with finite-difference
/// gradients of the chart functions:
///   SO3:  |{x1, gamma} - 1|, |{I, x1}|, |{I, gamma}|
///   SO21: |{lambda, x1} - 1|, |{I, x1}|, |{I, lambda}|
struct DarbouxBracketReport {
    Regime regime;
    double canonical_pair_residual = 0.0;
    double action_x1_residual = 0.0;
    double action_angle_residual = 0.0;
    double max_residual = 0.0;
    bool pass = false;
};

DarbouxBracketReport verify_darboux_bracket(const CoalgebraPoint& x,
                                            double tol);

/// Components of the Hamiltonian vector field of the i-th generator in the
/// generalized action-angle chart, ordered (time-angle, x1, angle). Derived
/// from the chart bivector; tested against finite differences of the chart.
R3 chart_hamiltonian_field(const DarbouxPoint& d, int i);

}  // namespace kepler
