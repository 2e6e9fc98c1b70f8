#include "sidelobe/sequence.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace sidelobe {

UnimodularSequence::UnimodularSequence(std::vector<double> phases)
    : phases_(std::move(phases)) {
    if (phases_.empty())
        throw std::invalid_argument("sequence length must be at least 1");
}

std::complex<double> UnimodularSequence::entry(std::size_t n) const {
    return std::polar(1.0, phases_[n]);
}

std::vector<std::complex<double>> UnimodularSequence::to_complex() const {
    std::vector<std::complex<double>> out(phases_.size());
    for (std::size_t n = 0; n < phases_.size(); ++n)
        out[n] = std::polar(1.0, phases_[n]);
    return out;
}

UnimodularSequence random_unimodular(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("random_unimodular: n must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<double> phases(n);
    for (auto& theta : phases) {
        // 53-bit mantissa draw, uniform on [0,1); avoids distribution
        // objects so replays are exact on any standard library.
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        theta = 2.0 * std::numbers::pi * u;
    }
    return UnimodularSequence(std::move(phases));
}

UnimodularSequence golomb_sequence(std::size_t n) {
    if (n == 0) throw std::invalid_argument("golomb_sequence: n must be >= 1");
    std::vector<double> phases(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto k = static_cast<double>(i);  // n-1 in the 1-based formula
        phases[i] = std::numbers::pi * k * (k + 1.0) / static_cast<double>(n);
    }
    return UnimodularSequence(std::move(phases));
}

UnimodularSequence frank_sequence(std::size_t m) {
    if (m == 0) throw std::invalid_argument("frank_sequence: m must be >= 1");
    std::vector<double> phases(m * m);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q)
            phases[p * m + q] = 2.0 * std::numbers::pi *
                                static_cast<double>(p * q) /
                                static_cast<double>(m);
    return UnimodularSequence(std::move(phases));
}

UnimodularSequence project_phases(std::span<const std::complex<double>> y) {
    std::vector<double> phases(y.size());
    for (std::size_t n = 0; n < y.size(); ++n) {
        const auto& v = y[n];
        // arg(0) := 0, so a vanishing entry projects to 1.
        phases[n] = (v.real() == 0.0 && v.imag() == 0.0) ? 0.0 : std::arg(v);
    }
    return UnimodularSequence(std::move(phases));
}

}  // namespace sidelobe
