#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kepler/phase.hpp"

namespace kepler {

/// The two superintegrable regimes of the planar Kepler system:
/// so(3) on the bounded region U- (H < 0), so(2,1) on the unbounded U+ (H > 0).
enum class Regime { SO3, SO21 };

enum class RegionTag { UMinus, UPlus, Z0Excluded, HZeroShell };

const char* to_string(Regime regime);
const char* to_string(RegionTag tag);

/// H = p^2/2 - 1/r, with analytic gradient and Hessian.
Observable hamiltonian();

/// M12 = q1 p2 - q2 p1.
Observable angular_momentum();

/// Runge-Lenz component A_i = q_i p^2 - p_i (p,q) - q_i / r, i in {1,2}.
Observable runge_lenz(int i);

/// Rescaled integrals: (L1, L2) = A_i / sqrt(-2H) on U-, (K1, K2) = A_i / sqrt(2H)
/// on U+. Evaluating either at a point with H of the wrong sign throws
/// std::domain_error.
std::pair<Observable, Observable> rescaled_integrals(Regime regime);

/// Generators mapped into the coalgebra coordinates:
/// SO3: (F1,F2,F3) = (-L1,-L2,-M12); SO21: (S1,S2,S3) = (-K1,-K2,-M12).
std::array<Observable, 3> coalgebra_generators(Regime regime);

/// Region of z, using |M12| <= tol and |H| <= tol as boundary tests. Boundary
/// points get the excluded tag rather than a guess.
RegionTag classify_region(const PhasePoint& z, double tol = 1e-9);

/// Regime at z, or nullopt on Z0 / the H = 0 shell.
std::optional<Regime> regime_at(const PhasePoint& z, double tol = 1e-9);

/// Absolute residuals of the closed-form identities tying H, M12 and the
/// Runge-Lenz vector together. Keys:
///   "runge_lenz_norm"      |A^2 - (2 M^2 H + 1)|
///   "energy_from_invariants" |H - (A^2 - 1)/(2 M^2)|
///   "casimir_bounded"      |M^2 + L^2 + 1/(2H)|   (U- only)
///   "casimir_unbounded"    |K^2 - M^2 - 1/(2H)|   (U+ only)
/// Identities not applicable to the region of z are omitted.
std::map<std::string, double> identity_residuals(const PhasePoint& z);

/// Every observable shipped for the given regime (H, M12, A1, A2 plus the
/// regime's rescaled pair); used by the gradient-consistency suite.
std::vector<Observable> shipped_observables(Regime regime);

}  // namespace kepler
