#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace sidelobe {

/// Stopband description for spectral-MISL: 0-based bin indices on the
/// 2N-bin aperiodic grid plus the penalty weight lambda.
struct SpectralMask {
    std::vector<std::size_t> omega;  // sorted, unique, each < 2N
    double lambda = 0.0;
};

/// Normalizes (sorts, dedupes) and validates a mask against a grid of
/// 2N bins. Throws std::invalid_argument on out-of-range indices or
/// negative lambda.
SpectralMask make_mask(std::vector<std::size_t> omega, double lambda,
                       std::size_t n);

/// Bins k in {0,...,2N-1} whose frequency pi*k/N falls in one of the
/// half-open intervals [lo, hi) with 0 <= lo < hi <= 2*pi.
std::vector<std::size_t> band_to_indices(
    const std::vector<std::pair<double, double>>& bands, std::size_t n);

}  // namespace sidelobe
