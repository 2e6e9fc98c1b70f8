#include "sidelobe/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sidelobe/detail/fft.hpp"

namespace sidelobe {

AutocorrelationProfile autocorrelation(const UnimodularSequence& x,
                                       Mode mode) {
    // Wiener-Khinchin: r_k = (1/grid) * DFT(|A^H x|^2)_k, truncated to the
    // first N lags. The forward (not inverse) transform of the power
    // spectrum yields r_k rather than its conjugate.
    const SpectrumGrid grid = forward_grid(x, mode);
    const std::size_t size = grid.values.size();
    std::vector<std::complex<double>> power(size);
    for (std::size_t p = 0; p < size; ++p)
        power[p] = std::norm(grid.values[p]);
    std::vector<std::complex<double>> lags_full(size);
    detail::dft_forward(power, lags_full);
    std::vector<std::complex<double>> lags(x.size());
    for (std::size_t k = 0; k < x.size(); ++k)
        lags[k] = lags_full[k] / static_cast<double>(size);
    return AutocorrelationProfile{mode, std::move(lags)};
}

double isl(const UnimodularSequence& x, Mode mode) {
    const auto profile = autocorrelation(x, mode);
    double sum = 0.0;
    for (std::size_t k = 1; k < profile.lags.size(); ++k)
        sum += std::norm(profile.lags[k]);
    return sum;
}

double isl_from_grid(const SpectrumGrid& grid) {
    const auto n = static_cast<double>(grid.sequence_length());
    double sum = 0.0;
    for (const auto& v : grid.values) {
        const double d = std::norm(v) - n;
        sum += d * d;
    }
    return (grid.mode == Mode::Aperiodic) ? sum / (4.0 * n) : sum / n;
}

double isl_freq(const UnimodularSequence& x, Mode mode) {
    return isl_from_grid(forward_grid(x, mode));
}

double merit_factor(const UnimodularSequence& x) {
    const double value = isl(x, Mode::Aperiodic);
    const auto n = static_cast<double>(x.size());
    if (value == 0.0) return std::numeric_limits<double>::infinity();
    return n * n / (2.0 * value);
}

std::vector<double> correlation_level(const UnimodularSequence& x, Mode mode) {
    const auto profile = autocorrelation(x, mode);
    const std::size_t n = x.size();
    const double r0 = std::abs(profile.lags[0]);
    if (r0 == 0.0)
        throw std::invalid_argument("correlation_level: r_0 is zero");
    // Lags that are zero in exact arithmetic come back from the FFT with
    // magnitudes around machine noise; snap anything below 1e-12 * r_0
    // (about -240 dB) to the -infinity sentinel.
    const double floor = 1e-12 * r0;
    std::vector<double> levels(2 * n - 1);
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const auto lag = static_cast<std::size_t>(
            std::abs(static_cast<long long>(i) - static_cast<long long>(n) + 1));
        const double mag = std::abs(profile.lags[lag]);
        levels[i] = (mag < floor) ? -std::numeric_limits<double>::infinity()
                                  : 20.0 * std::log10(mag / r0);
    }
    return levels;
}

double spectral_power(const SpectrumGrid& grid,
                      const std::vector<std::size_t>& omega) {
    double sum = 0.0;
    for (std::size_t k : omega) {
        if (k >= grid.values.size())
            throw std::invalid_argument("spectral_power: bin index out of range");
        sum += std::norm(grid.values[k]);
    }
    return sum;
}

double spectral_power(const UnimodularSequence& x,
                      const std::vector<std::size_t>& omega) {
    return spectral_power(forward_grid(x, Mode::Aperiodic), omega);
}

}  // namespace sidelobe
