#include "kepler/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <vector>

#include "kepler/action_angle.hpp"
#include "kepler/integrator.hpp"
#include "kepler/lie_poisson.hpp"
#include "kepler/sampling.hpp"
#include "kepler/structure.hpp"

namespace kepler {

namespace {

// Pinned tolerances; fd-limited checks cannot be tightened below their
// discretization floor by a tol override.
struct CheckSpec {
    const char* name;
    double pinned_tol;
    bool fd_limited = false;
};

constexpr CheckSpec kBracketClosureRaw{"bracket_closure_raw", 1e-10};
constexpr CheckSpec kBracketClosureRescaled{"bracket_closure_rescaled", 1e-9};
constexpr CheckSpec kMetricIndexForm{"metric_index_form", 1e-9};
constexpr CheckSpec kStructureConstants{"structure_constants", 1e-9};
constexpr CheckSpec kGeneratorIndependence{"generator_independence", 1e-10};
constexpr CheckSpec kHamiltonianDependence{"hamiltonian_dependence", 1e-8};
constexpr CheckSpec kBracketCorank{"bracket_corank", 1e-10};
constexpr CheckSpec kInvolution{"involution_with_hamiltonian", 1e-10};
constexpr CheckSpec kIdentityRungeLenzNorm{"identity_runge_lenz_norm", 1e-10};
constexpr CheckSpec kIdentityEnergy{"identity_energy_from_invariants", 1e-10};
constexpr CheckSpec kIdentityCasimirLevel{"identity_casimir_level", 1e-10};
constexpr CheckSpec kIdentityEccentricity{"identity_eccentricity", 1e-10};
constexpr CheckSpec kCasimirBrackets{"casimir_brackets_vanish", 1e-9};
constexpr CheckSpec kMorphism{"momentum_map_poisson_morphism", 1e-9};
constexpr CheckSpec kEnergyPullback{"momentum_map_energy_pullback", 1e-10};
constexpr CheckSpec kDarbouxBrackets{"darboux_canonical_brackets", 1e-6, true};
constexpr CheckSpec kDarbouxRoundtrip{"darboux_roundtrip", 1e-10};
constexpr CheckSpec kCoadjoint{"coadjoint_annihilates_casimir", 1e-9};
constexpr CheckSpec kGradientOracle{"gradient_consistency", 1e-6, true};

constexpr double kFdFloor = 1e-6;

class Accumulator {
  public:
    Accumulator(Regime regime, const CheckSpec& spec,
                std::optional<double> tol_override)
        : result_{} {
        result_.name = std::string(to_string(regime)) + "." + spec.name;
        double tol = spec.pinned_tol;
        if (tol_override) {
            tol = spec.fd_limited ? std::max(kFdFloor, *tol_override)
                                  : *tol_override;
        }
        result_.tolerance = tol;
    }

    void add(double residual) { add_flag(residual <= result_.tolerance, residual); }

    void add_flag(bool ok, double residual) {
        ++result_.samples;
        ok ? ++result_.passed : ++result_.failed;
        result_.max_residual = std::max(result_.max_residual, residual);
    }

    double tolerance() const { return result_.tolerance; }
    CheckResult finish() const { return result_; }

  private:
    CheckResult result_;
};

double rel(double lhs, double rhs) {
    return std::abs(lhs - rhs) /
           std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

double angle_distance(double a, double b) {
    return std::abs(std::remainder(a - b, 2.0 * M_PI));
}

// eta_{2i} C1 - eta_{1i} C2 with Euclidean eta, i is 1-based.
double rotation_bracket_rhs(int i, double c1, double c2) {
    return (i == 2 ? c1 : 0.0) - (i == 1 ? c2 : 0.0);
}

CoalgebraFunction analytic_casimir(Regime regime) {
    if (regime == Regime::SO3) {
        return CoalgebraFunction{
            "h",
            [](const R3& x) {
                return -0.5 / (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
            },
            [](const R3& x) {
                const double c = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
                const double c2 = c * c;
                return R3{x[0] / c2, x[1] / c2, x[2] / c2};
            }};
    }
    return CoalgebraFunction{
        "h",
        [](const R3& x) {
            return 0.5 / (x[0] * x[0] + x[1] * x[1] - x[2] * x[2]);
        },
        [](const R3& x) {
            const double c = x[0] * x[0] + x[1] * x[1] - x[2] * x[2];
            const double c2 = c * c;
            return R3{-x[0] / c2, -x[1] / c2, x[2] / c2};
        }};
}

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

}  // namespace

int measure_hyperbolic_time_sign() {
    // A hyperbolic start at perihelion inside the chart patch; tau moves
    // strictly with the flow, so 100 steps fix the sign.
    const PhasePoint z0{0.0, 1.0, -2.0, 0.0};
    const ActionAngleState s0 = chart_forward(z0);
    PhasePoint z = z0;
    for (int k = 0; k < 100; ++k) z = verlet_step(z, 1e-3);
    const ActionAngleState s1 = chart_forward(z);
    return (s1.time_angle - s0.time_angle) > 0.0 ? 1 : -1;
}

VerificationReport run_regime_suite(Regime regime, const VerifyOptions& opts) {
    VerificationReport report;
    report.suite = to_string(regime);
    report.seed = opts.seed;
    report.samples = opts.samples;
    report.rng = SampleRng::kDescription;
    report.conventions.hyperbolic_time_sign = measure_hyperbolic_time_sign();
    if (opts.with_timestamp) report.timestamp = iso_timestamp();

    const Observable h = hamiltonian();
    const Observable m12 = angular_momentum();
    const Observable a1 = runge_lenz(1);
    const Observable a2 = runge_lenz(2);
    const auto [c1, c2] = rescaled_integrals(regime);
    const auto gens = coalgebra_generators(regime);
    const std::vector<Observable> gen_vec(gens.begin(), gens.end());
    const std::vector<Observable> with_h = {h, gens[0], gens[1], gens[2]};
    const StructureConstants sc = StructureConstants::for_regime(regime);
    const CoalgebraFunction casimir_fn = analytic_casimir(regime);
    const CoalgebraFunction coords[3] = {coalgebra_coordinate(1),
                                         coalgebra_coordinate(2),
                                         coalgebra_coordinate(3)};
    const std::vector<Observable> shipped = shipped_observables(regime);

    // M_{mu nu} realization for the index-form relations: M_{12} is the
    // angular momentum and M_{i3} = -C_i (C = L on U-, K on U+).
    const Observable zero_obs("0", [](const PhasePoint&) { return 0.0; },
                              [](const PhasePoint&) { return Grad4{}; });
    std::array<std::array<Observable, 3>, 3> mten{
        {{zero_obs, m12, scaled(c1, -1.0, "M13")},
         {scaled(m12, -1.0, "M21"), zero_obs, scaled(c2, -1.0, "M23")},
         {c1, c2, zero_obs}}};
    const double metric3 = (regime == Regime::SO3) ? 1.0 : -1.0;
    auto eta = [metric3](int mu, int nu) {
        if (mu != nu) return 0.0;
        return mu == 2 ? metric3 : 1.0;
    };
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};

    Accumulator acc_raw(regime, kBracketClosureRaw, opts.tol_override);
    Accumulator acc_rescaled(regime, kBracketClosureRescaled, opts.tol_override);
    Accumulator acc_metric(regime, kMetricIndexForm, opts.tol_override);
    Accumulator acc_sc(regime, kStructureConstants, opts.tol_override);
    Accumulator acc_gen_rank(regime, kGeneratorIndependence, opts.tol_override);
    Accumulator acc_dep_rank(regime, kHamiltonianDependence, opts.tol_override);
    Accumulator acc_corank(regime, kBracketCorank, opts.tol_override);
    Accumulator acc_inv(regime, kInvolution, opts.tol_override);
    Accumulator acc_id_a(regime, kIdentityRungeLenzNorm, opts.tol_override);
    Accumulator acc_id_h(regime, kIdentityEnergy, opts.tol_override);
    Accumulator acc_id_c(regime, kIdentityCasimirLevel, opts.tol_override);
    Accumulator acc_id_e(regime, kIdentityEccentricity, opts.tol_override);
    Accumulator acc_cas(regime, kCasimirBrackets, opts.tol_override);
    Accumulator acc_morph(regime, kMorphism, opts.tol_override);
    Accumulator acc_pullback(regime, kEnergyPullback, opts.tol_override);
    Accumulator acc_darboux(regime, kDarbouxBrackets, opts.tol_override);
    Accumulator acc_roundtrip(regime, kDarbouxRoundtrip, opts.tol_override);
    Accumulator acc_coad(regime, kCoadjoint, opts.tol_override);
    Accumulator acc_grad(regime, kGradientOracle, opts.tol_override);

    SampleRng rng(opts.seed);
    for (long s = 0; s < opts.samples; ++s) {
        const PhasePoint z = sample_regime_point(rng, regime);
        const double hv = h.value(z);
        const double mv = m12.value(z);
        const double a1v = a1.value(z);
        const double a2v = a2.value(z);
        const double c1v = c1.value(z);
        const double c2v = c2.value(z);

        // Raw closure: {M,A_i} and {A1,A2} against their closed forms.
        double resid = 0.0;
        resid = std::max(resid, std::abs(poisson_bracket(m12, a1, z) -
                                         rotation_bracket_rhs(1, a1v, a2v)));
        resid = std::max(resid, std::abs(poisson_bracket(m12, a2, z) -
                                         rotation_bracket_rhs(2, a1v, a2v)));
        resid = std::max(resid, std::abs(poisson_bracket(a1, a2, z) -
                                         2.0 * hv * mv));
        acc_raw.add(resid);

        // Rescaled closure: {M,C_i} and {C1,C2} = -M (U-) or +M (U+).
        resid = 0.0;
        resid = std::max(resid, std::abs(poisson_bracket(m12, c1, z) -
                                         rotation_bracket_rhs(1, c1v, c2v)));
        resid = std::max(resid, std::abs(poisson_bracket(m12, c2, z) -
                                         rotation_bracket_rhs(2, c1v, c2v)));
        const double cc = (regime == Regime::SO3) ? -mv : mv;
        resid = std::max(resid, std::abs(poisson_bracket(c1, c2, z) - cc));
        acc_rescaled.add(resid);

        // Index form with the (pseudo-)Euclidean metric.
        resid = 0.0;
        for (const auto& left : pairs) {
            for (const auto& right : pairs) {
                if (left[0] == right[0] && left[1] == right[1]) continue;
                const int mu = left[0], nu = left[1];
                const int al = right[0], be = right[1];
                const double lhs =
                    poisson_bracket(mten[mu][nu], mten[al][be], z);
                const double rhs = eta(mu, be) * mten[nu][al].value(z) +
                                   eta(nu, al) * mten[mu][be].value(z) -
                                   eta(mu, al) * mten[nu][be].value(z) -
                                   eta(nu, be) * mten[mu][al].value(z);
                resid = std::max(resid, std::abs(lhs - rhs));
            }
        }
        acc_metric.add(resid);

        const auto screport = verify_structure_constants(
            regime, z, acc_sc.tolerance());
        acc_sc.add(screport.max_residual);

        acc_gen_rank.add_flag(jacobian_rank(gen_vec, z, 1e-10) == 3, 0.0);
        acc_dep_rank.add_flag(jacobian_rank(with_h, z, 1e-8) == 3, 0.0);

        const BracketTable table = bracket_table(gen_vec, z);
        const std::vector<double> sv = singular_values(table);
        const double corank_resid =
            (sv.front() > 0.0) ? sv.back() / sv.front() : 0.0;
        acc_corank.add_flag(corank(table, 1e-10) == 1, corank_resid);

        resid = 0.0;
        for (const auto& f : gens) {
            resid = std::max(resid, std::abs(poisson_bracket(h, f, z)));
        }
        acc_inv.add(resid);

        const double msq = mv * mv;
        const double asq = a1v * a1v + a2v * a2v;
        acc_id_a.add(rel(asq, 2.0 * msq * hv + 1.0));
        acc_id_h.add(rel(hv, (asq - 1.0) / (2.0 * msq)));
        const double csq = c1v * c1v + c2v * c2v;
        if (regime == Regime::SO3) {
            acc_id_c.add(rel(msq + csq, -0.5 / hv));
        } else {
            acc_id_c.add(rel(csq - msq, 0.5 / hv));
        }
        acc_id_e.add(rel(orbit_elements(z).e, std::sqrt(asq)));

        // Coalgebra layer at the momentum-map image.
        const CoalgebraPoint x = momentum_map(regime, z);
        resid = 0.0;
        for (const auto& coord : coords) {
            resid = std::max(resid, std::abs(lie_poisson_bracket(
                                        sc, casimir_fn, coord, x)));
        }
        acc_cas.add(resid);

        resid = 0.0;
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                const double lhs = poisson_bracket(gens[i], gens[j], z);
                const double rhs =
                    lie_poisson_bracket(sc, coords[i], coords[j], x);
                resid = std::max(resid, std::abs(lhs - rhs));
            }
        }
        acc_morph.add(resid);

        acc_pullback.add(rel(casimir(x), hv));

        resid = 0.0;
        const R3 xc = x.coords();
        const R3 grad_c = {2.0 * xc[0], 2.0 * xc[1],
                           (regime == Regime::SO3 ? 2.0 : -2.0) * xc[2]};
        for (int i = 1; i <= 3; ++i) {
            const R3 eps = coadjoint_field(x, i);
            resid = std::max(resid, std::abs(grad_c[0] * eps[0] +
                                             grad_c[1] * eps[1] +
                                             grad_c[2] * eps[2]));
        }
        acc_coad.add(resid);

        resid = 0.0;
        for (const auto& f : shipped) {
            resid = std::max(resid, gradient_check(f, z, 1e-5));
        }
        acc_grad.add(resid);
    }

    // Chart-dependent checks need points inside the Darboux patch with a
    // margin from its boundaries.
    SampleRng chart_rng(opts.seed + 1);
    for (long s = 0; s < opts.samples; ++s) {
        const PhasePoint z = sample_chart_point(chart_rng, regime);
        const CoalgebraPoint x = momentum_map(regime, z);

        const auto dreport =
            verify_darboux_bracket(x, acc_darboux.tolerance());
        acc_darboux.add(dreport.max_residual);

        const DarbouxPoint d = darboux_forward(x);
        const CoalgebraPoint back = darboux_inverse(d);
        double resid = std::max({std::abs(back.x1 - x.x1),
                                 std::abs(back.x2 - x.x2),
                                 std::abs(back.x3 - x.x3)});
        const DarbouxPoint d2 = darboux_forward(back);
        resid = std::max(resid, std::abs(d2.action - d.action));
        resid = std::max(resid, std::abs(d2.x1 - d.x1));
        if (regime == Regime::SO3) {
            resid = std::max(resid, angle_distance(d2.angle, d.angle));
        } else {
            resid = std::max(resid, std::abs(d2.angle - d.angle));
        }
        resid = std::max(resid, rel(casimir(back), d.action));
        acc_roundtrip.add(resid);
    }

    report.checks = {
        acc_raw.finish(),       acc_rescaled.finish(), acc_metric.finish(),
        acc_sc.finish(),        acc_gen_rank.finish(), acc_dep_rank.finish(),
        acc_corank.finish(),    acc_inv.finish(),      acc_id_a.finish(),
        acc_id_h.finish(),      acc_id_c.finish(),     acc_id_e.finish(),
        acc_cas.finish(),       acc_morph.finish(),    acc_pullback.finish(),
        acc_darboux.finish(),   acc_roundtrip.finish(), acc_coad.finish(),
        acc_grad.finish(),
    };
    return report;
}

VerificationReport run_verification(std::optional<Regime> regime,
                                    const VerifyOptions& opts) {
    if (regime) return run_regime_suite(*regime, opts);
    VerificationReport so3 = run_regime_suite(Regime::SO3, opts);
    VerificationReport so21 = run_regime_suite(Regime::SO21, opts);
    so3.suite = "both";
    so3.checks.insert(so3.checks.end(), so21.checks.begin(),
                      so21.checks.end());
    return so3;
}

}  // namespace kepler
