#include "sidelobe/oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

#include "sidelobe/baseline.hpp"

namespace sidelobe::oracle {
namespace {

constexpr std::size_t kMaxPhiN = 12;

using Complex = std::complex<double>;

// Dense a_p vectors for the requested grid, a_p[n] = e^{j omega_p n}.
std::vector<std::vector<Complex>> steering_vectors(std::size_t n, Mode mode) {
    const std::size_t grid = (mode == Mode::Aperiodic) ? 2 * n : n;
    std::vector<std::vector<Complex>> a(grid, std::vector<Complex>(n));
    for (std::size_t p = 0; p < grid; ++p) {
        const double omega = 2.0 * std::numbers::pi * static_cast<double>(p) /
                             static_cast<double>(grid);
        for (std::size_t m = 0; m < n; ++m)
            a[p][m] = std::polar(1.0, omega * static_cast<double>(m));
    }
    return a;
}

void check_phi_bound(std::size_t n) {
    if (n == 0) throw std::invalid_argument("phi oracle: n must be >= 1");
    if (n > kMaxPhiN)
        throw std::invalid_argument(
            "phi oracle: n exceeds the dense-memory guard (12)");
}

}  // namespace

PhiMatrix build_phi(std::size_t n) {
    check_phi_bound(n);
    const std::size_t dim = n * n;
    const auto a = steering_vectors(n, Mode::Aperiodic);

    // Route 1: sum of outer products of vec(a_p a_p^H).
    Eigen::MatrixXcd phi_sum = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& ap : a) {
        Eigen::VectorXcd vec_ap(dim);
        // vec() stacks columns: entry m + n*N of A_p = a_p a_p^H is
        // a_p[m] * conj(a_p[n]).
        for (std::size_t col = 0; col < n; ++col)
            for (std::size_t row = 0; row < n; ++row)
                vec_ap(static_cast<Eigen::Index>(row + col * n)) =
                    ap[row] * std::conj(ap[col]);
        phi_sum += vec_ap * vec_ap.adjoint();
    }

    // Route 2: indicator formula.
    PhiMatrix phi{n, std::vector<double>(dim * dim, 0.0)};
    for (std::size_t n1 = 0; n1 < n; ++n1)
        for (std::size_t m1 = 0; m1 < n; ++m1)
            for (std::size_t n2 = 0; n2 < n; ++n2)
                for (std::size_t m2 = 0; m2 < n; ++m2) {
                    if (static_cast<long long>(m1) - static_cast<long long>(m2) ==
                        static_cast<long long>(n1) - static_cast<long long>(n2)) {
                        const std::size_t row = m1 + n1 * n;
                        const std::size_t col = m2 + n2 * n;
                        phi.entries[row * dim + col] = 2.0 * static_cast<double>(n);
                    }
                }

    for (std::size_t row = 0; row < dim; ++row)
        for (std::size_t col = 0; col < dim; ++col) {
            const Complex summed =
                phi_sum(static_cast<Eigen::Index>(row),
                        static_cast<Eigen::Index>(col));
            const double formula = phi.entries[row * dim + col];
            if (std::abs(summed.real() - formula) > 1e-9 ||
                std::abs(summed.imag()) > 1e-9)
                throw std::runtime_error(
                    "phi oracle: construction routes disagree");
        }
    return phi;
}

double lambda_max_phi(std::size_t n) {
    const PhiMatrix phi = build_phi(n);
    const auto dim = static_cast<Eigen::Index>(n * n);
    Eigen::MatrixXd mat(dim, dim);
    for (Eigen::Index row = 0; row < dim; ++row)
        for (Eigen::Index col = 0; col < dim; ++col)
            mat(row, col) = phi.at(static_cast<std::size_t>(row),
                                   static_cast<std::size_t>(col));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat);
    return solver.eigenvalues().maxCoeff();
}

double quadratic_form_identity(std::size_t n, const std::vector<double>& x) {
    check_phi_bound(n);
    const std::size_t dim = n * n;
    if (x.size() != dim)
        throw std::invalid_argument("quadratic_form_identity: x must be N^2 long");

    const PhiMatrix phi = build_phi(n);
    const double nn = static_cast<double>(n);

    // Left side: x^T (2N^2 I - Phi) x, evaluated directly.
    double left = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        left += 2.0 * nn * nn * x[i] * x[i];
        for (std::size_t j = 0; j < dim; ++j) left -= x[i] * phi.at(i, j) * x[j];
    }

    // Right side: the class-wise decomposition. A 1-based index
    // i = m + (n-1)N belongs to class k = n - m, k = 1-N..N-1.
    double right = 0.0;
    std::vector<std::vector<std::size_t>> classes(2 * n - 1);
    for (std::size_t col = 0; col < n; ++col)
        for (std::size_t row = 0; row < n; ++row) {
            const long long k = static_cast<long long>(col) -
                                static_cast<long long>(row) +
                                static_cast<long long>(n) - 1;
            classes[static_cast<std::size_t>(k)].push_back(row + col * n);
        }
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto k = std::abs(static_cast<long long>(c) -
                                static_cast<long long>(n) + 1);
        const auto& members = classes[c];
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const double d = x[members[i]] - x[members[j]];
                right += d * d;
            }
            right += static_cast<double>(k) * x[members[i]] * x[members[i]];
        }
    }
    right *= 2.0 * nn;

    return std::abs(left - right);
}

AutocorrelationProfile acf_bruteforce(const UnimodularSequence& x, Mode mode) {
    const std::size_t n = x.size();
    if (n > 4096)
        throw std::invalid_argument("acf_bruteforce: n exceeds the O(N^2) guard");
    const auto xc = x.to_complex();
    std::vector<Complex> lags(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        if (mode == Mode::Aperiodic) {
            for (std::size_t m = 0; m + k < n; ++m)
                lags[k] += xc[m] * std::conj(xc[m + k]);
        } else {
            for (std::size_t m = 0; m < n; ++m)
                lags[k] += xc[m] * std::conj(xc[(m + k) % n]);
        }
    }
    return AutocorrelationProfile{mode, std::move(lags)};
}

double isl_bruteforce(const UnimodularSequence& x, Mode mode) {
    const auto profile = acf_bruteforce(x, mode);
    double sum = 0.0;
    for (std::size_t k = 1; k < profile.lags.size(); ++k)
        sum += std::norm(profile.lags[k]);
    return sum;
}

SpectrumGrid forward_grid_dense(const UnimodularSequence& x, Mode mode) {
    const auto a = steering_vectors(x.size(), mode);
    const auto xc = x.to_complex();
    SpectrumGrid grid{mode, std::vector<Complex>(a.size(), 0.0)};
    for (std::size_t p = 0; p < a.size(); ++p)
        for (std::size_t m = 0; m < xc.size(); ++m)
            grid.values[p] += std::conj(a[p][m]) * xc[m];
    return grid;
}

UnimodularSequence can_step_dense(const UnimodularSequence& x, Mode mode) {
    const auto a = steering_vectors(x.size(), mode);
    const SpectrumGrid f = forward_grid_dense(x, mode);
    std::vector<Complex> g(x.size(), 0.0);
    for (std::size_t p = 0; p < a.size(); ++p) {
        const auto& fp = f.values[p];
        const Complex vp = (fp.real() == 0.0 && fp.imag() == 0.0)
                               ? Complex(1.0, 0.0)
                               : fp / std::abs(fp);
        for (std::size_t m = 0; m < x.size(); ++m) g[m] += a[p][m] * vp;
    }
    return project_phases(std::span<const Complex>(g));
}

bool run_validation_suite() {
    bool ok = true;
    auto report = [&ok](const char* name, bool pass, double detail) {
        std::printf("%-52s %s  (%.3e)\n", name, pass ? "PASS" : "FAIL", detail);
        ok = ok && pass;
    };

    for (std::size_t n = 1; n <= 8; ++n) {
        const double lmax = lambda_max_phi(n);
        const double expected = 2.0 * static_cast<double>(n * n);
        const double rel = std::abs(lmax - expected) / expected;
        char name[64];
        std::snprintf(name, sizeof(name),
                      "lambda_max(Phi) = 2N^2, N=%zu (got %.6f)", n, lmax);
        report(name, rel <= 1e-9, rel);
    }

    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (std::size_t n = 2; n <= 6; ++n) {
        double worst = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<double> x(n * n);
            for (auto& v : x) v = unit(rng);
            worst = std::max(worst, quadratic_form_identity(n, x));
        }
        char name[64];
        std::snprintf(name, sizeof(name),
                      "quadratic-form identity residual, N=%zu", n);
        report(name, worst <= 1e-8, worst);
    }

    for (Mode mode : {Mode::Aperiodic, Mode::Periodic}) {
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const auto x = random_unimodular(16, 9000 + trial);
            const auto fft_isl = isl(x, mode);
            const auto brute = isl_bruteforce(x, mode);
            worst = std::max(worst,
                             std::abs(fft_isl - brute) / std::max(1.0, brute));
        }
        report(mode == Mode::Aperiodic ? "FFT vs brute-force ISL (aperiodic)"
                                       : "FFT vs brute-force ISL (periodic)",
               worst <= 1e-10, worst);
    }

    {
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const auto x = random_unimodular(12, 700 + trial);
            const auto fast = forward_grid(x, Mode::Aperiodic);
            const auto dense = forward_grid_dense(x, Mode::Aperiodic);
            for (std::size_t p = 0; p < fast.values.size(); ++p)
                worst = std::max(worst,
                                 std::abs(fast.values[p] - dense.values[p]));
        }
        report("FFT vs dense forward grid", worst <= 1e-9, worst);
    }

    {
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const auto x = random_unimodular(12, 1300 + trial);
            const auto fast = can_step(x, Mode::Aperiodic).first;
            const auto dense = can_step_dense(x, Mode::Aperiodic);
            for (std::size_t m = 0; m < x.size(); ++m)
                worst = std::max(worst,
                                 std::abs(fast.entry(m) - dense.entry(m)));
        }
        report("FFT vs dense CAN step", worst <= 1e-9, worst);
    }

    return ok;
}

}  // namespace sidelobe::oracle
