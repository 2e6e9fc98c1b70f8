#pragma once

#include <complex>
#include <vector>

#include "sidelobe/sequence.hpp"

namespace sidelobe {

enum class Mode {
    Aperiodic,  // 2N-bin grid, omega_p = pi*(p-1)/N
    Periodic,   // N-bin grid, omega_p = 2*pi*(p-1)/N
};

/// Values of A^H x (aperiodic, 2N bins) or Ahat^H x (periodic, N bins).
struct SpectrumGrid {
    Mode mode;
    std::vector<std::complex<double>> values;

    std::size_t sequence_length() const;
};

/// f_p = sum_n x_n e^{-j omega_p (n-1)}. Aperiodic mode is the size-2N
/// forward DFT of x padded with N zeros; periodic is the size-N DFT.
SpectrumGrid forward_grid(const UnimodularSequence& x, Mode mode);
SpectrumGrid forward_grid(std::span<const std::complex<double>> x, Mode mode);

/// A z (resp. Ahat z): first N entries of the unnormalized inverse DFT
/// of the grid values (conjugate kernel, no 1/size factor).
std::vector<std::complex<double>> adjoint_grid(const SpectrumGrid& z);

}  // namespace sidelobe
