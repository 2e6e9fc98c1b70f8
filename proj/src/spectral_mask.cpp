#include "sidelobe/spectral_mask.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sidelobe {

SpectralMask make_mask(std::vector<std::size_t> omega, double lambda,
                       std::size_t n) {
    if (lambda < 0.0)
        throw std::invalid_argument("mask: lambda must be nonnegative");
    std::sort(omega.begin(), omega.end());
    omega.erase(std::unique(omega.begin(), omega.end()), omega.end());
    if (!omega.empty() && omega.back() >= 2 * n)
        throw std::invalid_argument("mask: bin index out of range");
    return SpectralMask{std::move(omega), lambda};
}

std::vector<std::size_t> band_to_indices(
    const std::vector<std::pair<double, double>>& bands, std::size_t n) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<std::size_t> indices;
    for (const auto& [lo, hi] : bands) {
        if (!(0.0 <= lo && lo < hi && hi <= two_pi))
            throw std::invalid_argument(
                "band_to_indices: need 0 <= lo < hi <= 2*pi");
        // bin k sits at frequency pi*k/N
        for (std::size_t k = 0; k < 2 * n; ++k) {
            const double w =
                std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
            if (lo <= w && w < hi) indices.push_back(k);
        }
    }
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    return indices;
}

}  // namespace sidelobe
