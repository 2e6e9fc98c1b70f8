#include "sidelobe/design_run.hpp"

#include <stdexcept>

namespace sidelobe {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Misl: return "misl";
        case Variant::AccelMisl: return "accel-misl";
        case Variant::BacktrackMisl: return "backtrack-misl";
        case Variant::SpectralMisl: return "spectral-misl";
        case Variant::Can: return "can";
        case Variant::Pecan: return "pecan";
    }
    return "unknown";
}

std::optional<Variant> variant_from_name(const std::string& name) {
    if (name == "misl") return Variant::Misl;
    if (name == "accel-misl") return Variant::AccelMisl;
    if (name == "backtrack-misl") return Variant::BacktrackMisl;
    if (name == "spectral-misl") return Variant::SpectralMisl;
    if (name == "can") return Variant::Can;
    if (name == "pecan") return Variant::Pecan;
    return std::nullopt;
}

void DesignRun::validate() const {
    if (length == 0)
        throw std::invalid_argument("design run: length must be >= 1");
    if (!(tolerance > 0.0))
        throw std::invalid_argument("design run: tolerance must be positive");
    if (max_iters == 0)
        throw std::invalid_argument("design run: max_iters must be >= 1");
    if (variant == Variant::SpectralMisl) {
        if (!mask.has_value())
            throw std::invalid_argument("spectral-misl requires a mask");
        if (mode != Mode::Aperiodic)
            throw std::invalid_argument("spectral-misl is aperiodic only");
    }
}

}  // namespace sidelobe
