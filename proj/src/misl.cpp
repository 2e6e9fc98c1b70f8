#include "sidelobe/misl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "iterate.hpp"
#include "sidelobe/metrics.hpp"

namespace sidelobe {

std::pair<UnimodularSequence, MislStepDiagnostics> misl_step(
    const UnimodularSequence& x, Mode mode) {
    const auto n = static_cast<double>(x.size());
    SpectrumGrid grid = forward_grid(x, mode);

    MislStepDiagnostics diag;
    diag.objective_before = isl_from_grid(grid);
    diag.p.resize(grid.values.size());
    for (std::size_t p = 0; p < grid.values.size(); ++p)
        diag.p[p] = std::norm(grid.values[p]);
    diag.p_max = *std::max_element(diag.p.begin(), diag.p.end());

    // y = -A (Diag(p) - p_max I - N^2 I) A^H x, applied bin-wise.
    SpectrumGrid weighted{mode, grid.values};
    for (std::size_t p = 0; p < grid.values.size(); ++p)
        weighted.values[p] *= -(diag.p[p] - diag.p_max - n * n);
    UnimodularSequence next = project_phases(adjoint_grid(weighted));

    diag.objective_after = isl_freq(next, mode);
    return {std::move(next), std::move(diag)};
}

RunResult run_misl(const DesignRun& run, const UnimodularSequence& x0) {
    run.validate();
    if (run.variant != Variant::Misl)
        throw std::invalid_argument("run_misl: variant must be misl");
    if (x0.size() != run.length)
        throw std::invalid_argument("run_misl: x0 length mismatch");
    return detail::iterate_to_convergence(
        x0, run.tolerance, run.max_iters,
        [&run](const UnimodularSequence& x, RunResult&) {
            return misl_step(x, run.mode).first;
        },
        [&run](const UnimodularSequence& x) { return isl_freq(x, run.mode); });
}

}  // namespace sidelobe
