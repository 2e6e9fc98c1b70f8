#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "sidelobe/sequence.hpp"
#include "sidelobe/transform.hpp"

namespace sidelobe {

/// Autocorrelation lags r_0..r_{N-1} (aperiodic) or rhat_0..rhat_{N-1}
/// (periodic). Negative lags are the conjugates and are not stored.
struct AutocorrelationProfile {
    Mode mode;
    std::vector<std::complex<double>> lags;
};

AutocorrelationProfile autocorrelation(const UnimodularSequence& x, Mode mode);

/// Integrated sidelobe level, sum_{k>=1} |r_k|^2, evaluated from the lags.
double isl(const UnimodularSequence& x, Mode mode);

/// ISL from the frequency-domain identity:
/// aperiodic (1/4N) sum_p (|f_p|^2 - N)^2, periodic (1/N) sum_p (|f_p|^2 - N)^2.
double isl_freq(const UnimodularSequence& x, Mode mode);

/// Same identity evaluated on an already-computed spectrum grid.
double isl_from_grid(const SpectrumGrid& grid);

/// N^2 / (2*ISL). Zero ISL yields +infinity (a success value, not an error).
double merit_factor(const UnimodularSequence& x);

/// 20*log10|r_k/r_0| for lags 1-N..N-1 (index 0 holds lag 1-N). Lags
/// below 1e-12 * r_0 (zero up to FFT roundoff) map to -infinity.
std::vector<double> correlation_level(const UnimodularSequence& x, Mode mode);

/// sum_{k in omega} |f_{k+1}|^2 on the 2N-bin aperiodic grid (0-based bins).
double spectral_power(const UnimodularSequence& x,
                      const std::vector<std::size_t>& omega);
double spectral_power(const SpectrumGrid& grid,
                      const std::vector<std::size_t>& omega);

}  // namespace sidelobe
