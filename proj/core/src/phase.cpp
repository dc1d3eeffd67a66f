#include "kepler/phase.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <utility>

namespace kepler {

Observable::Observable(std::string label, ValueFn value, GradientFn gradient,
                       HessianFn hessian)
    : label_(std::move(label)),
      value_(std::move(value)),
      gradient_(std::move(gradient)),
      hessian_(std::move(hessian)) {
    if (!value_ || !gradient_) {
        throw std::invalid_argument("Observable '" + label_ +
                                    "' needs a value and a gradient");
    }
}

Hess4 Observable::hessian(const PhasePoint& z) const {
    if (!hessian_) {
        throw std::logic_error("Observable '" + label_ + "' has no Hessian");
    }
    return hessian_(z);
}

double poisson_bracket(const Observable& f, const Observable& g,
                       const PhasePoint& z) {
    const Grad4 gf = f.gradient(z);
    const Grad4 gg = g.gradient(z);
    // {f,g} = sum_i df/dp_i dg/dq_i - df/dq_i dg/dp_i; layout (q1,q2,p1,p2).
    return gf[2] * gg[0] + gf[3] * gg[1] - gf[0] * gg[2] - gf[1] * gg[3];
}

Observable bracket_observable(const Observable& f, const Observable& g) {
    if (!f.has_hessian() || !g.has_hessian()) {
        throw std::invalid_argument("bracket_observable needs Hessians of '" +
                                    f.label() + "' and '" + g.label() + "'");
    }
    auto value = [f, g](const PhasePoint& z) { return poisson_bracket(f, g, z); };
    auto gradient = [f, g](const PhasePoint& z) {
        const Grad4 gf = f.gradient(z);
        const Grad4 gg = g.gradient(z);
        const Hess4 hf = f.hessian(z);
        const Hess4 hg = g.hessian(z);
        Grad4 out{};
        for (int k = 0; k < 4; ++k) {
            double s = 0.0;
            for (int i = 0; i < 2; ++i) {
                const int qi = i, pi = 2 + i;
                s += hf[pi][k] * gg[qi] + gf[pi] * hg[qi][k];
                s -= hf[qi][k] * gg[pi] + gf[qi] * hg[pi][k];
            }
            out[k] = s;
        }
        return out;
    };
    return Observable("{" + f.label() + "," + g.label() + "}", value, gradient);
}

Observable product(const Observable& f, const Observable& g) {
    auto value = [f, g](const PhasePoint& z) { return f.value(z) * g.value(z); };
    auto gradient = [f, g](const PhasePoint& z) {
        const double fv = f.value(z), gv = g.value(z);
        const Grad4 gf = f.gradient(z), gg = g.gradient(z);
        Grad4 out{};
        for (int k = 0; k < 4; ++k) out[k] = gf[k] * gv + fv * gg[k];
        return out;
    };
    Observable::HessianFn hessian;
    if (f.has_hessian() && g.has_hessian()) {
        hessian = [f, g](const PhasePoint& z) {
            const double fv = f.value(z), gv = g.value(z);
            const Grad4 gf = f.gradient(z), gg = g.gradient(z);
            const Hess4 hf = f.hessian(z), hg = g.hessian(z);
            Hess4 out{};
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    out[a][b] = hf[a][b] * gv + gf[a] * gg[b] + gg[a] * gf[b] +
                                fv * hg[a][b];
            return out;
        };
    }
    return Observable(f.label() + "*" + g.label(), value, gradient, hessian);
}

Observable scaled(const Observable& f, double c, std::string label) {
    if (label.empty()) label = std::to_string(c) + "*" + f.label();
    auto value = [f, c](const PhasePoint& z) { return c * f.value(z); };
    auto gradient = [f, c](const PhasePoint& z) {
        Grad4 out = f.gradient(z);
        for (double& v : out) v *= c;
        return out;
    };
    Observable::HessianFn hessian;
    if (f.has_hessian()) {
        hessian = [f, c](const PhasePoint& z) {
            Hess4 out = f.hessian(z);
            for (auto& row : out)
                for (double& v : row) v *= c;
            return out;
        };
    }
    return Observable(std::move(label), value, gradient, hessian);
}

Observable coordinate(int index) {
    if (index < 0 || index > 3) {
        throw std::invalid_argument("coordinate index must be 0..3");
    }
    static constexpr const char* names[4] = {"q1", "q2", "p1", "p2"};
    auto value = [index](const PhasePoint& z) {
        switch (index) {
            case 0: return z.q1;
            case 1: return z.q2;
            case 2: return z.p1;
            default: return z.p2;
        }
    };
    auto gradient = [index](const PhasePoint&) {
        Grad4 g{};
        g[index] = 1.0;
        return g;
    };
    auto hessian = [](const PhasePoint&) { return Hess4{}; };
    return Observable(names[index], value, gradient, hessian);
}

namespace {

PhasePoint shifted(const PhasePoint& z, int k, double h) {
    PhasePoint out = z;
    switch (k) {
        case 0: out.q1 += h; break;
        case 1: out.q2 += h; break;
        case 2: out.p1 += h; break;
        default: out.p2 += h; break;
    }
    return out;
}

}  // namespace

double gradient_check(const Observable& f, const PhasePoint& z, double h) {
    if (h <= 0.0) throw std::invalid_argument("gradient_check: h must be > 0");
    if (z.radius() <= 2.0 * h) {
        throw std::domain_error("gradient_check: point too close to the origin");
    }
    const Grad4 analytic = f.gradient(z);
    double worst = 0.0;
    for (int k = 0; k < 4; ++k) {
        const double fd =
            (f.value(shifted(z, k, h)) - f.value(shifted(z, k, -h))) / (2.0 * h);
        const double err =
            std::abs(analytic[k] - fd) / (1.0 + std::abs(analytic[k]));
        worst = std::max(worst, err);
    }
    return worst;
}

int jacobian_rank(std::span<const Observable> fs, const PhasePoint& z,
                  double tol) {
    const int k = static_cast<int>(fs.size());
    if (k < 1 || k > 4) {
        throw std::invalid_argument("jacobian_rank: need 1..4 observables");
    }
    Eigen::MatrixXd m(k, 4);
    for (int i = 0; i < k; ++i) {
        const Grad4 g = fs[i].gradient(z);
        for (int j = 0; j < 4; ++j) m(i, j) = g[j];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > tol * sv(0)) ++rank;
    }
    return rank;
}

}  // namespace kepler
