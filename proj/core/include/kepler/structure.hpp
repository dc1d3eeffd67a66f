#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kepler/phase.hpp"
#include "kepler/system.hpp"

namespace kepler {

/// Antisymmetric table s_ij = {f_i, f_j}(z); only i < j is computed, the rest
/// is filled by antisymmetry so s_ij = -s_ji holds exactly.
struct BracketTable {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> entries;

    int size() const { return static_cast<int>(labels.size()); }
};

BracketTable bracket_table(std::span<const Observable> fs, const PhasePoint& z);

/// Singular values of the table, descending.
std::vector<double> singular_values(const BracketTable& table);

/// k - (number of singular values > tol * largest). Zero table -> corank k.
int corank(const BracketTable& table, double tol = 1e-10);

/// Structure constants c_ij^h with {x_i, x_j} = c_ij^h x_h.
/// SO3:  {x1,x2} = x3,  {x2,x3} = x1, {x3,x1} = x2.
/// SO21: {x1,x2} = -x3, {x2,x3} = x1, {x3,x1} = x2.
struct StructureConstants {
    Regime regime;
    double c[3][3][3];

    static StructureConstants so3();
    static StructureConstants so21();
    static StructureConstants for_regime(Regime regime);

    /// c_ij^h x_h contracted on the lower pair (i, j), 0-based.
    double contract(int i, int j, const std::array<double, 3>& x) const;
};

struct PairResidual {
    int i, j;
    double residual;
};

/// Residuals |{F_i,F_j}(z) - c_ij^h F_h(z)| for the regime's mapped
/// generators. Throws std::domain_error if z is not in the regime's region.
struct StructureConstantsReport {
    Regime regime;
    double max_residual = 0.0;
    bool pass = false;
    std::vector<PairResidual> pairs;
};

StructureConstantsReport verify_structure_constants(Regime regime,
                                                    const PhasePoint& z,
                                                    double tol);

/// Sampled check of the superintegrability conditions: generator Jacobian
/// rank 3, (H, generators) rank 3 (dependence), bracket-table corank 1, and
/// involution |{H, F_i}| <= tol. Failures are counted, never thrown.
struct SuperintegrabilityReport {
    Regime regime;
    int samples = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
    int generator_rank_failures = 0;
    int dependence_rank_failures = 0;
    int corank_failures = 0;
    int involution_failures = 0;
    double max_involution_residual = 0.0;

    bool pass() const {
        return generator_rank_failures == 0 && dependence_rank_failures == 0 &&
               corank_failures == 0 && involution_failures == 0;
    }
};

SuperintegrabilityReport verify_superintegrability(Regime regime, int samples,
                                                   std::uint64_t seed,
                                                   double tol);

}  // namespace kepler
