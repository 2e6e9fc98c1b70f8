#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "sidelobe/metrics.hpp"
#include "sidelobe/oracle.hpp"
#include "sidelobe/sequence.hpp"

using namespace sidelobe;

namespace {

const double kPi = std::numbers::pi;

UnimodularSequence seq(std::initializer_list<double> phases) {
    return UnimodularSequence(std::vector<double>(phases));
}

}  // namespace

TEST_CASE("autocorrelation of small sequences") {
    const auto barker3 = seq({0, 0, kPi});  // [1, 1, -1]
    const auto r = autocorrelation(barker3, Mode::Aperiodic);
    CHECK(std::abs(r.lags[0] - 3.0) < 1e-12);
    CHECK(std::abs(r.lags[1]) < 1e-12);
    CHECK(std::abs(r.lags[2] + 1.0) < 1e-12);

    const auto ones3 = seq({0, 0, 0});
    const auto r1 = autocorrelation(ones3, Mode::Aperiodic);
    CHECK(std::abs(r1.lags[0] - 3.0) < 1e-12);
    CHECK(std::abs(r1.lags[1] - 2.0) < 1e-12);
    CHECK(std::abs(r1.lags[2] - 1.0) < 1e-12);

    // [1, 1, 1, -1] is perfect under periodic correlation.
    const auto perfect = seq({0, 0, 0, kPi});
    const auto rp = autocorrelation(perfect, Mode::Periodic);
    CHECK(std::abs(rp.lags[0] - 4.0) < 1e-12);
    for (std::size_t k = 1; k < 4; ++k) CHECK(std::abs(rp.lags[k]) < 1e-12);
}

TEST_CASE("autocorrelation matches the brute-force oracle") {
    for (std::size_t n : {1, 2, 13, 64, 256}) {
        const auto x = random_unimodular(n, 17 * n + 3);
        for (Mode mode : {Mode::Aperiodic, Mode::Periodic}) {
            const auto fast = autocorrelation(x, mode);
            const auto brute = oracle::acf_bruteforce(x, mode);
            for (std::size_t k = 0; k < n; ++k)
                CHECK(std::abs(fast.lags[k] - brute.lags[k]) <=
                      1e-10 * static_cast<double>(n));
        }
    }
}

TEST_CASE("isl on known sequences") {
    CHECK(isl(seq({0, 0, kPi}), Mode::Aperiodic) == doctest::Approx(1.0));
    CHECK(isl(seq({0, 0, 0}), Mode::Aperiodic) == doctest::Approx(5.0));
    CHECK(isl(seq({0, 0, 0, 0}), Mode::Periodic) == doctest::Approx(48.0));
}

TEST_CASE("frequency-domain isl equals the lag-domain isl") {
    // Hand case: x=[1,1], |f|^2 = [4,2,0,2], (1/8)(4+0+4+0) = 1.
    CHECK(isl_freq(seq({0, 0}), Mode::Aperiodic) == doctest::Approx(1.0));

    for (std::size_t n = 1; n <= 32; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto x = random_unimodular(n, 1000 * n + trial);
            for (Mode mode : {Mode::Aperiodic, Mode::Periodic}) {
                const double a = isl(x, mode);
                const double b = isl_freq(x, mode);
                CHECK(std::abs(a - b) / std::max(1.0, a) <= 1e-9);
            }
        }
    }
}

TEST_CASE("quartic identities") {
    // aperiodic ISL = (sum |f|^4 - 2N^3) / 4N, periodic (sum - N^3) / N.
    for (std::size_t n : {2, 9, 33}) {
        const auto x = random_unimodular(n, n + 77);
        const double nn = static_cast<double>(n);
        for (Mode mode : {Mode::Aperiodic, Mode::Periodic}) {
            const auto f = forward_grid(x, mode);
            double quartic = 0.0;
            for (const auto& v : f.values) {
                const double p = std::norm(v);
                quartic += p * p;
            }
            const double expected =
                (mode == Mode::Aperiodic)
                    ? (quartic - 2.0 * nn * nn * nn) / (4.0 * nn)
                    : (quartic - nn * nn * nn) / nn;
            const double value = isl(x, mode);
            CHECK(std::abs(value - expected) / std::max(1.0, value) <= 1e-9);
        }
    }
}

TEST_CASE("merit factor") {
    CHECK(merit_factor(seq({0, 0})) == doctest::Approx(2.0));
    CHECK(merit_factor(seq({0, 0, kPi})) == doctest::Approx(4.5));
    CHECK(merit_factor(seq({0, 0, 0})) == doctest::Approx(0.9));
    // Single-entry sequence has no sidelobes at all.
    CHECK(merit_factor(seq({0})) ==
          std::numeric_limits<double>::infinity());

    for (std::size_t n : {3, 10, 40}) {
        const auto x = random_unimodular(n, n);
        const double nn = static_cast<double>(n);
        CHECK(std::abs(merit_factor(x) * 2.0 * isl(x, Mode::Aperiodic) -
                       nn * nn) <= 1e-12 * nn * nn);
    }
}

TEST_CASE("correlation level") {
    const auto barker3 = seq({0, 0, kPi});
    const auto levels = correlation_level(barker3, Mode::Aperiodic);
    REQUIRE(levels.size() == 5);  // lags -2..2
    CHECK(levels[2] == doctest::Approx(0.0));  // lag 0
    CHECK(levels[0] == doctest::Approx(20.0 * std::log10(1.0 / 3.0)));
    CHECK(levels[4] == doctest::Approx(20.0 * std::log10(1.0 / 3.0)));
    CHECK(levels[1] == -std::numeric_limits<double>::infinity());
    CHECK(levels[3] == -std::numeric_limits<double>::infinity());
}

TEST_CASE("spectral power") {
    const auto x = seq({0, 0});
    CHECK(spectral_power(x, {2}) == doctest::Approx(0.0));  // f_3 = 0
    CHECK(spectral_power(x, {0, 1, 2, 3}) == doctest::Approx(8.0));  // 2N^2
    CHECK(spectral_power(x, {}) == 0.0);
    CHECK_THROWS_AS(spectral_power(x, {4}), std::invalid_argument);
}
