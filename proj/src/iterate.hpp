#pragma once

#include <cmath>
#include <utility>

#include "sidelobe/design_run.hpp"
#include "sidelobe/sequence.hpp"

namespace sidelobe::detail {

// Shared driver: step the sequence until the relative objective change
// |obj(k+1) - obj(k)| / max(1, obj(k)) drops to the tolerance or the
// iteration cap is hit. StepFn: (const UnimodularSequence&, RunResult&)
// -> UnimodularSequence, appending its per-step record to the result.
// ObjFn: (const UnimodularSequence&) -> double.
template <typename StepFn, typename ObjFn>
RunResult iterate_to_convergence(const UnimodularSequence& x0,
                                 double tolerance, std::size_t max_iters,
                                 StepFn&& step, ObjFn&& objective) {
    RunResult result{x0, {}, false, {}, {}, {}};
    double obj = objective(x0);
    result.trace.push_back({0, obj});
    for (std::size_t k = 1; k <= max_iters; ++k) {
        result.sequence = step(result.sequence, result);
        const double next = objective(result.sequence);
        result.trace.push_back({k, next});
        const double change = std::abs(next - obj) / std::max(1.0, obj);
        obj = next;
        if (change <= tolerance) return result;
    }
    result.hit_iteration_cap = true;
    return result;
}

}  // namespace sidelobe::detail
