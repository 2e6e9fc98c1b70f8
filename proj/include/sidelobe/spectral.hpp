#pragma once

#include "sidelobe/design_run.hpp"
#include "sidelobe/sequence.hpp"
#include "sidelobe/spectral_mask.hpp"

namespace sidelobe {

/// MISL step with stopband-inflated bin powers: pbar = p + lambda/2 on
/// omega, pbar_max = max(pbar). Aperiodic mode only. With lambda = 0 or
/// an empty omega this reduces exactly to misl_step.
UnimodularSequence spectral_misl_step(const UnimodularSequence& x,
                                      const SpectralMask& mask);

/// Penalized objective J(x) = ISL(x) + lambda/(4N) * stopband power; this
/// is the objective the step provably decreases, scaled so that
/// J = ISL when lambda = 0.
double spectral_objective(const UnimodularSequence& x,
                          const SpectralMask& mask);

/// Iterates spectral_misl_step (SQUAREM-wrapped when accelerate is set)
/// with the stopping rule applied to J.
RunResult run_spectral(const DesignRun& run, const UnimodularSequence& x0,
                       bool accelerate = false);

}  // namespace sidelobe
