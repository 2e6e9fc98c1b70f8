#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace sidelobe {

/// A length-N sequence with |x_n| = 1, stored as phases (radians).
/// Unit modulus is structural: the complex entries are materialized as
/// exp(j*theta_n) only at the transform boundary.
class UnimodularSequence {
public:
    explicit UnimodularSequence(std::vector<double> phases);

    std::size_t size() const { return phases_.size(); }
    const std::vector<double>& phases() const { return phases_; }

    std::complex<double> entry(std::size_t n) const;
    std::vector<std::complex<double>> to_complex() const;

private:
    std::vector<double> phases_;
};

/// Phases 2*pi*theta_n with theta_n i.i.d. uniform on [0,1), drawn from a
/// fixed 64-bit PRNG. Pure function of (n, seed).
UnimodularSequence random_unimodular(std::size_t n, std::uint64_t seed);

/// Golomb sequence: x_n = exp(j*pi*(n-1)*n / N), n = 1..N.
UnimodularSequence golomb_sequence(std::size_t n);

/// Frank sequence of length M^2: phase 2*pi*p*q/M at index p*M+q,
/// p,q = 0..M-1. Perfect periodic autocorrelation.
UnimodularSequence frank_sequence(std::size_t m);

/// Nearest unimodular sequence to y: x_n = exp(j*arg(y_n)), with the
/// convention arg(0) := 0.
UnimodularSequence project_phases(std::span<const std::complex<double>> y);

}  // namespace sidelobe
