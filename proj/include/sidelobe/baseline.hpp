#pragma once

#include <utility>

#include "sidelobe/design_run.hpp"
#include "sidelobe/sequence.hpp"
#include "sidelobe/transform.hpp"

namespace sidelobe {

/// One CAN alternating step: f = A^H x, v_p = exp(j arg(f_p)),
/// g = A v, x'_n = exp(j arg(g_n)). Periodic mode is PeCAN on the
/// N-bin grid. The record holds ||A^H x - sqrt(N) v||^2 for the
/// incoming x, which the alternating updates never increase (the ISL
/// itself carries no such guarantee).
std::pair<UnimodularSequence, CanStepRecord> can_step(
    const UnimodularSequence& x, Mode mode);

/// Driver for Variant::Can and Variant::Pecan with the shared
/// relative-ISL stopping rule.
RunResult run_can(const DesignRun& run, const UnimodularSequence& x0);

}  // namespace sidelobe
