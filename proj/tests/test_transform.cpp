#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "sidelobe/oracle.hpp"
#include "sidelobe/sequence.hpp"
#include "sidelobe/transform.hpp"

using namespace sidelobe;
using Complex = std::complex<double>;

namespace {

UnimodularSequence ones(std::size_t n) {
    return UnimodularSequence(std::vector<double>(n, 0.0));
}

}  // namespace

TEST_CASE("aperiodic grid of [1,1] by hand") {
    const auto f = forward_grid(ones(2), Mode::Aperiodic);
    REQUIRE(f.values.size() == 4);
    CHECK(std::abs(f.values[0] - Complex(2, 0)) < 1e-12);
    CHECK(std::abs(f.values[1] - Complex(1, -1)) < 1e-12);
    CHECK(std::abs(f.values[2] - Complex(0, 0)) < 1e-12);
    CHECK(std::abs(f.values[3] - Complex(1, 1)) < 1e-12);
}

TEST_CASE("n=1 gives two identical bins") {
    const auto f = forward_grid(ones(1), Mode::Aperiodic);
    REQUIRE(f.values.size() == 2);
    CHECK(std::abs(f.values[0] - Complex(1, 0)) < 1e-12);
    CHECK(std::abs(f.values[1] - Complex(1, 0)) < 1e-12);
}

TEST_CASE("Parseval constant on both grids") {
    for (std::size_t n : {1, 2, 7, 31, 64}) {
        const auto x = random_unimodular(n, 11 * n);
        const double nn = static_cast<double>(n);
        for (Mode mode : {Mode::Aperiodic, Mode::Periodic}) {
            const auto f = forward_grid(x, mode);
            double energy = 0.0;
            for (const auto& v : f.values) energy += std::norm(v);
            const double expected =
                (mode == Mode::Aperiodic) ? 2.0 * nn * nn : nn * nn;
            CHECK(std::abs(energy - expected) / expected <= 1e-10);
        }
    }
}

TEST_CASE("adjoint of zeros is zero") {
    const SpectrumGrid z{Mode::Aperiodic, std::vector<Complex>(6, 0.0)};
    for (const auto& v : adjoint_grid(z)) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("adjoint example by hand") {
    const SpectrumGrid z{Mode::Aperiodic,
                         {{-8, 0}, {-6, 6}, {0, 0}, {-6, -6}}};
    const auto az = adjoint_grid(z);
    REQUIRE(az.size() == 2);
    CHECK(std::abs(az[0] - Complex(-20, 0)) < 1e-12);
    CHECK(std::abs(az[1] - Complex(-20, 0)) < 1e-12);
}

TEST_CASE("adjoint(forward(x)) scales x by the grid size") {
    for (std::size_t n : {1, 3, 16, 50}) {
        const auto x = random_unimodular(n, n + 1);
        const auto xc = x.to_complex();
        for (Mode mode : {Mode::Aperiodic, Mode::Periodic}) {
            const double scale =
                (mode == Mode::Aperiodic) ? 2.0 * static_cast<double>(n)
                                          : static_cast<double>(n);
            const auto round = adjoint_grid(forward_grid(x, mode));
            REQUIRE(round.size() == n);
            for (std::size_t i = 0; i < n; ++i)
                CHECK(std::abs(round[i] - scale * xc[i]) <= 1e-9 * scale);
        }
    }
}

TEST_CASE("FFT path matches the dense matrix product") {
    for (std::size_t n : {1, 2, 5, 17, 64}) {
        const auto x = random_unimodular(n, 3 * n + 1);
        for (Mode mode : {Mode::Aperiodic, Mode::Periodic}) {
            const auto fast = forward_grid(x, mode);
            const auto dense = oracle::forward_grid_dense(x, mode);
            REQUIRE(fast.values.size() == dense.values.size());
            for (std::size_t p = 0; p < fast.values.size(); ++p)
                CHECK(std::abs(fast.values[p] - dense.values[p]) <=
                      1e-10 * static_cast<double>(n));
        }
    }
}

TEST_CASE("aperiodic grid with odd length is rejected") {
    const SpectrumGrid z{Mode::Aperiodic, std::vector<Complex>(3, 0.0)};
    CHECK_THROWS_AS(adjoint_grid(z), std::invalid_argument);
}
