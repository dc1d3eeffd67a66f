#pragma once

#include <cstdint>
#include <random>

#include "kepler/lie_poisson.hpp"
#include "kepler/phase.hpp"
#include "kepler/system.hpp"

namespace kepler {

/// Deterministic sampler: mt19937_64 with 53-bit uniform doubles
/// ((x >> 11) * 2^-53), so streams are identical across standard libraries.
class SampleRng {
  public:
    explicit SampleRng(std::uint64_t seed) : gen_(seed) {}

    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    static constexpr const char* kDescription = "mt19937_64/53-bit-uniform";

  private:
    std::mt19937_64 gen_;
};

/// Verification sampling domain: q uniform in direction with radius uniform
/// in [0.5, 3], p components uniform in [-2, 2]; samples with |M12| < 0.1 or
/// |H| < 0.05 are rejected to stay clear of Z0 and the H = 0 shell.
struct SamplingMargins {
    double r_min = 0.5;
    double r_max = 3.0;
    double p_max = 2.0;
    double min_m12 = 0.1;
    double min_abs_h = 0.05;
    double chart_margin = 0.05;
};

PhasePoint sample_point_in_u(SampleRng& rng, const SamplingMargins& m = {});

/// As above, additionally requiring H < -min_abs_h (SO3) or H > +min_abs_h
/// (SO21).
PhasePoint sample_regime_point(SampleRng& rng, Regime regime,
                               const SamplingMargins& m = {});

/// Regime point whose momentum-map image is inside the Darboux chart with
/// the configured margin from the chart boundaries.
PhasePoint sample_chart_point(SampleRng& rng, Regime regime,
                              const SamplingMargins& m = {});

/// Momentum-map image of a sampled regime point.
CoalgebraPoint sample_coalgebra_point(SampleRng& rng, Regime regime,
                                      const SamplingMargins& m = {});

}  // namespace kepler
