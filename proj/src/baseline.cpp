#include "sidelobe/baseline.hpp"

#include <cmath>
#include <stdexcept>

#include "iterate.hpp"
#include "sidelobe/metrics.hpp"

namespace sidelobe {

std::pair<UnimodularSequence, CanStepRecord> can_step(
    const UnimodularSequence& x, Mode mode) {
    const SpectrumGrid f = forward_grid(x, mode);
    const double sqrt_n = std::sqrt(static_cast<double>(x.size()));

    SpectrumGrid v{mode, std::vector<std::complex<double>>(f.values.size())};
    CanStepRecord record;
    for (std::size_t p = 0; p < f.values.size(); ++p) {
        const auto& fp = f.values[p];
        const std::complex<double> vp =
            (fp.real() == 0.0 && fp.imag() == 0.0)
                ? std::complex<double>(1.0, 0.0)  // arg(0) := 0
                : fp / std::abs(fp);
        v.values[p] = vp;
        record.objective_can += std::norm(fp - sqrt_n * vp);
    }
    record.isl_value = isl_from_grid(f);

    UnimodularSequence next = project_phases(adjoint_grid(v));
    return {std::move(next), record};
}

RunResult run_can(const DesignRun& run, const UnimodularSequence& x0) {
    run.validate();
    if (run.variant != Variant::Can && run.variant != Variant::Pecan)
        throw std::invalid_argument("run_can: variant must be can or pecan");
    if (x0.size() != run.length)
        throw std::invalid_argument("run_can: x0 length mismatch");
    const Mode mode =
        (run.variant == Variant::Pecan) ? Mode::Periodic : run.mode;
    return detail::iterate_to_convergence(
        x0, run.tolerance, run.max_iters,
        [mode](const UnimodularSequence& x, RunResult& result) {
            auto [next, record] = can_step(x, mode);
            result.can_steps.push_back(record);
            return next;
        },
        [mode](const UnimodularSequence& x) { return isl_freq(x, mode); });
}

}  // namespace sidelobe
