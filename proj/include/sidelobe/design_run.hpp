#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sidelobe/sequence.hpp"
#include "sidelobe/spectral_mask.hpp"
#include "sidelobe/transform.hpp"

namespace sidelobe {

enum class Variant {
    Misl,
    AccelMisl,
    BacktrackMisl,
    SpectralMisl,
    Can,
    Pecan,
};

std::string variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& name);

/// One design run: configuration plus the stopping rule. The stopping
/// criterion is |obj(k+1) - obj(k)| / max(1, obj(k)) <= tolerance,
/// evaluated on consecutive iterates starting at (x0, x1).
struct DesignRun {
    Variant variant = Variant::Misl;
    Mode mode = Mode::Aperiodic;
    std::size_t length = 0;
    std::uint64_t seed = 0;
    double tolerance = 1e-5;
    std::size_t max_iters = 100000;
    std::optional<SpectralMask> mask;

    void validate() const;  // throws std::invalid_argument
};

struct TracePoint {
    std::size_t iteration;
    double objective;
};

struct SquaremStepRecord {
    double alpha = 0.0;
    int halvings = 0;
    double objective_before = 0.0;
    double objective_after = 0.0;
};

struct BacktrackStepRecord {
    int ladder_index = 0;   // accepted i_k
    double cap = 0.0;       // accepted L = p_max + (2^{i_k} - 1) N
    bool accepted = false;
};

struct CanStepRecord {
    double objective_can = 0.0;  // ||A^H x - sqrt(N) v||^2
    double isl_value = 0.0;
};

struct RunResult {
    UnimodularSequence sequence;
    std::vector<TracePoint> trace;  // trace[0] is the initial objective
    bool hit_iteration_cap = false;

    // Per-variant step records, parallel to trace[1..].
    std::vector<SquaremStepRecord> squarem_steps;
    std::vector<BacktrackStepRecord> backtrack_steps;
    std::vector<CanStepRecord> can_steps;
};

}  // namespace sidelobe
