#pragma once

#include <functional>
#include <utility>

#include "sidelobe/design_run.hpp"
#include "sidelobe/sequence.hpp"
#include "sidelobe/transform.hpp"

namespace sidelobe {

/// One SQUAREM extrapolation step over the MISL fixed-point map:
///   x1 = F(x), x2 = F(x1), r = x1 - x, v = x2 - x1 - r,
///   alpha = -||r|| / ||v||, x' = exp(j arg(x - 2 alpha r + alpha^2 v)),
/// halving alpha toward -1 until ISL(x') <= ISL(x). If ||r|| or ||v||
/// vanishes the step returns x2 directly.
std::pair<UnimodularSequence, SquaremStepRecord> squarem_step(
    const UnimodularSequence& x, Mode mode);

/// One backtracking-MISL step: the smallest L on the ladder
/// p_max + (2^i - 1) N whose surrogate u_L majorizes the quartic
/// objective at its own minimizer.
std::pair<UnimodularSequence, BacktrackStepRecord> backtracking_misl_step(
    const UnimodularSequence& x, Mode mode);

/// Driver for Variant::AccelMisl and Variant::BacktrackMisl.
RunResult run_accelerated(const DesignRun& run, const UnimodularSequence& x0);

namespace detail {

using FixedPointMap =
    std::function<UnimodularSequence(const UnimodularSequence&)>;
using Objective = std::function<double(const UnimodularSequence&)>;

// SQUAREM over an arbitrary unimodular fixed-point map; the objective is
// only used for the descent safeguard.
UnimodularSequence squarem_advance(const UnimodularSequence& x,
                                   const FixedPointMap& step,
                                   const Objective& objective,
                                   SquaremStepRecord& record);

}  // namespace detail

}  // namespace sidelobe
