#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "sidelobe/metrics.hpp"
#include "sidelobe/sequence.hpp"
#include "sidelobe/transform.hpp"

// Brute-force references used by tests and the `validate` subcommand.
// Nothing here is on a solver path; dense N^2 x N^2 objects stay out of
// production code.

namespace sidelobe::oracle {

/// Dense real Phi = sum_p vec(a_p a_p^H) vec(a_p a_p^H)^H on the 2N-bin
/// grid, stored row-major. Entry (m1+(n1-1)N, m2+(n2-1)N) is 2N when
/// m1 - m2 = n1 - n2 and 0 otherwise.
struct PhiMatrix {
    std::size_t n = 0;  // sequence length; matrix is N^2 x N^2
    std::vector<double> entries;

    double at(std::size_t row, std::size_t col) const {
        return entries[row * n * n + col];
    }
};

/// Builds Phi by both routes (outer-product sum and the indicator
/// formula) and throws std::runtime_error if they disagree beyond 1e-9.
/// N is capped at 12 to bound the dense memory.
PhiMatrix build_phi(std::size_t n);

/// Largest eigenvalue of build_phi(n) via a dense symmetric eigensolve.
double lambda_max_phi(std::size_t n);

/// |x^T (2N^2 I - Phi) x  -  2N (sum of class-wise terms)| for a real
/// vector of length N^2; both sides evaluated independently.
double quadratic_form_identity(std::size_t n, const std::vector<double>& x);

/// Literal double-sum autocorrelation and ISL, O(N^2).
AutocorrelationProfile acf_bruteforce(const UnimodularSequence& x, Mode mode);
double isl_bruteforce(const UnimodularSequence& x, Mode mode);

/// Direct O(N * grid) matrix-product evaluation of A^H x.
SpectrumGrid forward_grid_dense(const UnimodularSequence& x, Mode mode);

/// CAN step computed with the explicit dense A matrix.
UnimodularSequence can_step_dense(const UnimodularSequence& x, Mode mode);

/// Runs the full oracle suite, printing one line per check to stdout.
/// Returns true iff every check passes.
bool run_validation_suite();

}  // namespace sidelobe::oracle
