#include "kepler/system.hpp"

#include <cmath>
#include <stdexcept>

namespace kepler {

const char* to_string(Regime regime) {
    return regime == Regime::SO3 ? "so3" : "so21";
}

const char* to_string(RegionTag tag) {
    switch (tag) {
        case RegionTag::UMinus: return "U_MINUS";
        case RegionTag::UPlus: return "U_PLUS";
        case RegionTag::Z0Excluded: return "Z0_EXCLUDED";
        default: return "H_ZERO_SHELL";
    }
}

Observable hamiltonian() {
    auto value = [](const PhasePoint& z) {
        return 0.5 * z.p_squared() - 1.0 / z.radius();
    };
    auto gradient = [](const PhasePoint& z) {
        const double r = z.radius();
        const double r3 = r * r * r;
        return Grad4{z.q1 / r3, z.q2 / r3, z.p1, z.p2};
    };
    auto hessian = [](const PhasePoint& z) {
        const double r = z.radius();
        const double r3 = r * r * r;
        const double r5 = r3 * r * r;
        Hess4 h{};
        const double q[2] = {z.q1, z.q2};
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                h[a][b] = (a == b ? 1.0 / r3 : 0.0) - 3.0 * q[a] * q[b] / r5;
            }
            h[2 + a][2 + a] = 1.0;
        }
        return h;
    };
    return Observable("H", value, gradient, hessian);
}

Observable angular_momentum() {
    auto value = [](const PhasePoint& z) { return z.q1 * z.p2 - z.q2 * z.p1; };
    auto gradient = [](const PhasePoint& z) {
        return Grad4{z.p2, -z.p1, -z.q2, z.q1};
    };
    auto hessian = [](const PhasePoint&) {
        Hess4 h{};
        h[0][3] = h[3][0] = 1.0;
        h[1][2] = h[2][1] = -1.0;
        return h;
    };
    return Observable("M12", value, gradient, hessian);
}

Observable runge_lenz(int i) {
    if (i != 1 && i != 2) {
        throw std::invalid_argument("runge_lenz: index must be 1 or 2");
    }
    const int c = i - 1;  // 0-based component
    auto value = [c](const PhasePoint& z) {
        const double q[2] = {z.q1, z.q2};
        const double p[2] = {z.p1, z.p2};
        return q[c] * z.p_squared() - p[c] * z.qp_dot() - q[c] / z.radius();
    };
    auto gradient = [c](const PhasePoint& z) {
        const double q[2] = {z.q1, z.q2};
        const double p[2] = {z.p1, z.p2};
        const double r = z.radius();
        const double r3 = r * r * r;
        const double psq = z.p_squared();
        const double pq = z.qp_dot();
        Grad4 g{};
        for (int j = 0; j < 2; ++j) {
            const double dij = (c == j) ? 1.0 : 0.0;
            g[j] = dij * (psq - 1.0 / r) - p[c] * p[j] + q[c] * q[j] / r3;
            g[2 + j] = 2.0 * q[c] * p[j] - dij * pq - p[c] * q[j];
        }
        return g;
    };
    auto hessian = [c](const PhasePoint& z) {
        const double q[2] = {z.q1, z.q2};
        const double p[2] = {z.p1, z.p2};
        const double r = z.radius();
        const double r3 = r * r * r;
        const double r5 = r3 * r * r;
        Hess4 h{};
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                const double dij = (c == j) ? 1.0 : 0.0;
                const double dik = (c == k) ? 1.0 : 0.0;
                const double djk = (j == k) ? 1.0 : 0.0;
                // d2/dq_j dq_k
                h[j][k] = (dij * q[k] + dik * q[j] + djk * q[c]) / r3 -
                          3.0 * q[c] * q[j] * q[k] / r5;
                // d2/dq_j dp_k
                const double qp = 2.0 * dij * p[k] - dik * p[j] - djk * p[c];
                h[j][2 + k] = qp;
                h[2 + k][j] = qp;
                // d2/dp_j dp_k
                h[2 + j][2 + k] = 2.0 * djk * q[c] - dij * q[k] - dik * q[j];
            }
        }
        return h;
    };
    return Observable(i == 1 ? "A1" : "A2", value, gradient, hessian);
}

namespace {

// A_i / sqrt(sign * 2H); throws when sign*H <= 0.
Observable rescaled_component(int i, Regime regime) {
    const Observable a = runge_lenz(i);
    const Observable h = hamiltonian();
    const double sign = (regime == Regime::SO3) ? -1.0 : 1.0;
    const std::string label =
        (regime == Regime::SO3 ? "L" : "K") + std::to_string(i);
    auto value = [a, h, sign, label](const PhasePoint& z) {
        const double hv = sign * 2.0 * h.value(z);
        if (hv <= 0.0) {
            throw std::domain_error(label + ": H has the wrong sign here");
        }
        return a.value(z) / std::sqrt(hv);
    };
    auto gradient = [a, h, sign, label](const PhasePoint& z) {
        const double hv = sign * 2.0 * h.value(z);
        if (hv <= 0.0) {
            throw std::domain_error(label + ": H has the wrong sign here");
        }
        const double s = std::sqrt(hv);
        const double av = a.value(z);
        const Grad4 ga = a.gradient(z);
        const Grad4 gh = h.gradient(z);
        Grad4 g{};
        for (int k = 0; k < 4; ++k) {
            g[k] = ga[k] / s - sign * av * gh[k] / (s * s * s);
        }
        return g;
    };
    return Observable(label, value, gradient);
}

}  // namespace

std::pair<Observable, Observable> rescaled_integrals(Regime regime) {
    return {rescaled_component(1, regime), rescaled_component(2, regime)};
}

std::array<Observable, 3> coalgebra_generators(Regime regime) {
    auto [c1, c2] = rescaled_integrals(regime);
    const char* names[3] = {"F1", "F2", "F3"};
    const char* names_s[3] = {"S1", "S2", "S3"};
    const char** n = (regime == Regime::SO3) ? names : names_s;
    return {scaled(c1, -1.0, n[0]), scaled(c2, -1.0, n[1]),
            scaled(angular_momentum(), -1.0, n[2])};
}

RegionTag classify_region(const PhasePoint& z, double tol) {
    const double m = z.q1 * z.p2 - z.q2 * z.p1;
    if (std::abs(m) <= tol) return RegionTag::Z0Excluded;
    const double h = 0.5 * z.p_squared() - 1.0 / z.radius();
    if (std::abs(h) <= tol) return RegionTag::HZeroShell;
    return h < 0.0 ? RegionTag::UMinus : RegionTag::UPlus;
}

std::optional<Regime> regime_at(const PhasePoint& z, double tol) {
    switch (classify_region(z, tol)) {
        case RegionTag::UMinus: return Regime::SO3;
        case RegionTag::UPlus: return Regime::SO21;
        default: return std::nullopt;
    }
}

std::map<std::string, double> identity_residuals(const PhasePoint& z) {
    std::map<std::string, double> out;
    const RegionTag tag = classify_region(z);
    const double h = 0.5 * z.p_squared() - 1.0 / z.radius();
    const double m = z.q1 * z.p2 - z.q2 * z.p1;
    const double msq = m * m;
    const Observable a1 = runge_lenz(1), a2 = runge_lenz(2);
    const double asq = a1.value(z) * a1.value(z) + a2.value(z) * a2.value(z);
    out["runge_lenz_norm"] = std::abs(asq - (2.0 * msq * h + 1.0));
    if (tag == RegionTag::Z0Excluded) return out;
    out["energy_from_invariants"] = std::abs(h - (asq - 1.0) / (2.0 * msq));
    if (tag == RegionTag::UMinus) {
        const double lsq = asq / (-2.0 * h);
        out["casimir_bounded"] = std::abs(msq + lsq + 1.0 / (2.0 * h));
    } else if (tag == RegionTag::UPlus) {
        const double ksq = asq / (2.0 * h);
        out["casimir_unbounded"] = std::abs(ksq - msq - 1.0 / (2.0 * h));
    }
    return out;
}

std::vector<Observable> shipped_observables(Regime regime) {
    std::vector<Observable> out;
    out.push_back(hamiltonian());
    out.push_back(angular_momentum());
    out.push_back(runge_lenz(1));
    out.push_back(runge_lenz(2));
    auto [c1, c2] = rescaled_integrals(regime);
    out.push_back(c1);
    out.push_back(c2);
    return out;
}

}  // namespace kepler
