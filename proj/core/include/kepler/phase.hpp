#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <span>
#include <string>

namespace kepler {

/// Gradient/Hessian coordinate order everywhere: (q1, q2, p1, p2).
using Grad4 = std::array<double, 4>;
using Hess4 = std::array<std::array<double, 4>, 4>;

/// A point of the punctured phase space Z = R^4 \ {0}.
struct PhasePoint {
    double q1 = 0.0;
    double q2 = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;

    double radius() const { return std::sqrt(q1 * q1 + q2 * q2); }
    double p_squared() const { return p1 * p1 + p2 * p2; }
    /// Radial pairing (p,q) = p1 q1 + p2 q2.
    double qp_dot() const { return p1 * q1 + p2 * q2; }
    bool valid() const { return radius() > 0.0; }
};

/// Named smooth function on phase space with an analytic gradient and,
/// where second derivatives are needed (nested brackets), an analytic Hessian.
class Observable {
  public:
    using ValueFn = std::function<double(const PhasePoint&)>;
    using GradientFn = std::function<Grad4(const PhasePoint&)>;
    using HessianFn = std::function<Hess4(const PhasePoint&)>;

    Observable(std::string label, ValueFn value, GradientFn gradient,
               HessianFn hessian = {});

    const std::string& label() const { return label_; }
    double value(const PhasePoint& z) const { return value_(z); }
    Grad4 gradient(const PhasePoint& z) const { return gradient_(z); }
    bool has_hessian() const { return static_cast<bool>(hessian_); }
    Hess4 hessian(const PhasePoint& z) const;

  private:
    std::string label_;
    ValueFn value_;
    GradientFn gradient_;
    HessianFn hessian_;
};

/// Canonical Poisson bracket of the symplectic form sum_i dp_i ^ dq_i.
///
/// Coordinate formula (sign fixed by the calibration {M12, A2} = A1):
///   {f,g} = sum_i (df/dp_i dg/dq_i - df/dq_i dg/dp_i),
/// so {q_i, p_i} = -1 and {p_i, q_i} = +1.
double poisson_bracket(const Observable& f, const Observable& g,
                       const PhasePoint& z);

/// {f,g} as an Observable whose gradient is assembled by the chain rule from
/// the gradients and Hessians of f and g. Throws std::invalid_argument if
/// either operand lacks a Hessian.
Observable bracket_observable(const Observable& f, const Observable& g);

/// Pointwise product f*g with product-rule gradient (and Hessian when both
/// factors carry one).
Observable product(const Observable& f, const Observable& g);

/// Scalar multiple c*f (keeps the Hessian if present).
Observable scaled(const Observable& f, double c, std::string label = {});

/// Coordinate observables; index 0..3 = q1, q2, p1, p2.
Observable coordinate(int index);

/// Worst relative deviation between the analytic gradient and a central
/// finite difference with step h: max_k |analytic_k - fd_k| / (1 + |analytic_k|).
double gradient_check(const Observable& f, const PhasePoint& z, double h);

/// Numerical rank of the |fs| x 4 gradient matrix: number of singular values
/// above tol * (largest singular value). A zero matrix has rank 0.
int jacobian_rank(std::span<const Observable> fs, const PhasePoint& z,
                  double tol);

}  // namespace kepler
