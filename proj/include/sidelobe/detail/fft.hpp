#pragma once

#include <complex>
#include <span>

namespace sidelobe::detail {

// out[k] = sum_n in[n] e^{-j 2 pi k n / len}
void dft_forward(std::span<const std::complex<double>> in,
                 std::span<std::complex<double>> out);

// out[n] = sum_k in[k] e^{+j 2 pi k n / len}  (no 1/len factor)
void dft_inverse_unnormalized(std::span<const std::complex<double>> in,
                              std::span<std::complex<double>> out);

}  // namespace sidelobe::detail
