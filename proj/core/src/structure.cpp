#include "kepler/structure.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

#include "kepler/sampling.hpp"

namespace kepler {

BracketTable bracket_table(std::span<const Observable> fs, const PhasePoint& z) {
    const int k = static_cast<int>(fs.size());
    BracketTable t;
    t.labels.reserve(k);
    for (const auto& f : fs) t.labels.push_back(f.label());
    t.entries.assign(k, std::vector<double>(k, 0.0));
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            const double v = poisson_bracket(fs[i], fs[j], z);
            t.entries[i][j] = v;
            t.entries[j][i] = -v;
        }
    }
    return t;
}

std::vector<double> singular_values(const BracketTable& table) {
    const int k = table.size();
    Eigen::MatrixXd m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m(i, j) = table.entries[i][j];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    return std::vector<double>(sv.data(), sv.data() + sv.size());
}

int corank(const BracketTable& table, double tol) {
    const std::vector<double> sv = singular_values(table);
    if (sv.empty() || sv.front() == 0.0) return table.size();
    int rank = 0;
    for (double s : sv) {
        if (s > tol * sv.front()) ++rank;
    }
    return table.size() - rank;
}

StructureConstants StructureConstants::so3() {
    StructureConstants sc{};
    sc.regime = Regime::SO3;
    // {x1,x2} = x3, {x2,x3} = x1, {x3,x1} = x2.
    sc.c[0][1][2] = 1.0;
    sc.c[1][0][2] = -1.0;
    sc.c[1][2][0] = 1.0;
    sc.c[2][1][0] = -1.0;
    sc.c[2][0][1] = 1.0;
    sc.c[0][2][1] = -1.0;
    return sc;
}

StructureConstants StructureConstants::so21() {
    StructureConstants sc = so3();
    sc.regime = Regime::SO21;
    // {x1,x2} = -x3.
    sc.c[0][1][2] = -1.0;
    sc.c[1][0][2] = 1.0;
    return sc;
}

StructureConstants StructureConstants::for_regime(Regime regime) {
    return regime == Regime::SO3 ? so3() : so21();
}

double StructureConstants::contract(int i, int j,
                                    const std::array<double, 3>& x) const {
    double s = 0.0;
    for (int h = 0; h < 3; ++h) s += c[i][j][h] * x[h];
    return s;
}

StructureConstantsReport verify_structure_constants(Regime regime,
                                                    const PhasePoint& z,
                                                    double tol) {
    const auto actual = regime_at(z);
    if (!actual || *actual != regime) {
        throw std::domain_error("verify_structure_constants: point is not in "
                                "the region of the requested regime");
    }
    const auto gens = coalgebra_generators(regime);
    const StructureConstants sc = StructureConstants::for_regime(regime);
    const std::array<double, 3> values = {gens[0].value(z), gens[1].value(z),
                                          gens[2].value(z)};
    StructureConstantsReport report;
    report.regime = regime;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            const double lhs = poisson_bracket(gens[i], gens[j], z);
            const double residual = std::abs(lhs - sc.contract(i, j, values));
            report.pairs.push_back({i, j, residual});
            report.max_residual = std::max(report.max_residual, residual);
        }
    }
    report.pass = report.max_residual <= tol;
    return report;
}

SuperintegrabilityReport verify_superintegrability(Regime regime, int samples,
                                                   std::uint64_t seed,
                                                   double tol) {
    SuperintegrabilityReport report;
    report.regime = regime;
    report.samples = samples;
    report.seed = seed;
    report.tol = tol;

    const Observable h = hamiltonian();
    const auto gens = coalgebra_generators(regime);
    const std::vector<Observable> gen_vec(gens.begin(), gens.end());
    std::vector<Observable> with_h = {h};
    with_h.insert(with_h.end(), gens.begin(), gens.end());

    SampleRng rng(seed);
    for (int s = 0; s < samples; ++s) {
        const PhasePoint z = sample_regime_point(rng, regime);
        if (jacobian_rank(gen_vec, z, 1e-10) != 3) {
            ++report.generator_rank_failures;
        }
        if (jacobian_rank(with_h, z, 1e-8) != 3) {
            ++report.dependence_rank_failures;
        }
        if (corank(bracket_table(gen_vec, z), 1e-10) != 1) {
            ++report.corank_failures;
        }
        bool involution_ok = true;
        for (const auto& f : gens) {
            const double resid = std::abs(poisson_bracket(h, f, z));
            report.max_involution_residual =
                std::max(report.max_involution_residual, resid);
            if (resid > tol) involution_ok = false;
        }
        if (!involution_ok) ++report.involution_failures;
    }
    return report;
}

}  // namespace kepler
