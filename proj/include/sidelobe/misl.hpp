#pragma once

#include <utility>
#include <vector>

#include "sidelobe/design_run.hpp"
#include "sidelobe/sequence.hpp"
#include "sidelobe/transform.hpp"

namespace sidelobe {

struct MislStepDiagnostics {
    std::vector<double> p;  // |A^H x|^2 per bin
    double p_max = 0.0;
    double objective_before = 0.0;
    double objective_after = 0.0;
};

/// One MISL fixed-point step:
///   p = |A^H x|^2,  y = -A (Diag(p) - p_max I - N^2 I) A^H x,
///   x'_n = exp(j arg(y_n)).
/// Periodic mode uses the N-bin grid with the same N^2 constant.
std::pair<UnimodularSequence, MislStepDiagnostics> misl_step(
    const UnimodularSequence& x, Mode mode);

/// Iterates misl_step under the relative-change stopping rule.
RunResult run_misl(const DesignRun& run, const UnimodularSequence& x0);

}  // namespace sidelobe
