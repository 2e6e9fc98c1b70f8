#include "sidelobe/transform.hpp"

#include <stdexcept>

#include "sidelobe/detail/fft.hpp"

namespace sidelobe {

std::size_t SpectrumGrid::sequence_length() const {
    if (mode == Mode::Aperiodic) {
        if (values.size() % 2 != 0)
            throw std::invalid_argument(
                "aperiodic grid must have an even number of bins");
        return values.size() / 2;
    }
    return values.size();
}

SpectrumGrid forward_grid(std::span<const std::complex<double>> x, Mode mode) {
    const std::size_t n = x.size();
    const std::size_t grid = (mode == Mode::Aperiodic) ? 2 * n : n;
    std::vector<std::complex<double>> padded(grid, 0.0);
    std::copy(x.begin(), x.end(), padded.begin());
    std::vector<std::complex<double>> values(grid);
    detail::dft_forward(padded, values);
    return SpectrumGrid{mode, std::move(values)};
}

SpectrumGrid forward_grid(const UnimodularSequence& x, Mode mode) {
    return forward_grid(std::span<const std::complex<double>>(x.to_complex()),
                        mode);
}

std::vector<std::complex<double>> adjoint_grid(const SpectrumGrid& z) {
    const std::size_t n = z.sequence_length();
    std::vector<std::complex<double>> full(z.values.size());
    detail::dft_inverse_unnormalized(z.values, full);
    full.resize(n);
    return full;
}

}  // namespace sidelobe
