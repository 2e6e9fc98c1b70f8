#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sidelobe/oracle.hpp"
#include "sidelobe/sequence.hpp"

using namespace sidelobe;

TEST_CASE("phi at n=1 is the scalar 2") {
    const auto phi = oracle::build_phi(1);
    CHECK(phi.at(0, 0) == doctest::Approx(2.0));
    CHECK(oracle::lambda_max_phi(1) == doctest::Approx(2.0));
}

TEST_CASE("phi entries at n=2 follow the indicator pattern") {
    const auto phi = oracle::build_phi(2);
    // 1-based index i = m + (n-1)*2 with m,n in {1,2}:
    // diagonal-class pairs (1,1),(1,4),(4,1),(4,4),(2,2),(3,3) get 2N = 4.
    for (std::size_t row = 0; row < 4; ++row)
        for (std::size_t col = 0; col < 4; ++col) {
            const long long m1 = static_cast<long long>(row % 2);
            const long long n1 = static_cast<long long>(row / 2);
            const long long m2 = static_cast<long long>(col % 2);
            const long long n2 = static_cast<long long>(col / 2);
            const double expected = (m1 - m2 == n1 - n2) ? 4.0 : 0.0;
            CHECK(phi.at(row, col) == doctest::Approx(expected));
        }
}

TEST_CASE("largest eigenvalue equals 2 n^2") {
    CHECK(oracle::lambda_max_phi(2) == doctest::Approx(8.0));
    CHECK(oracle::lambda_max_phi(3) == doctest::Approx(18.0));
    for (std::size_t n = 1; n <= 6; ++n) {
        const double expected = 2.0 * static_cast<double>(n * n);
        CHECK(std::abs(oracle::lambda_max_phi(n) - expected) / expected <=
              1e-9);
    }
}

TEST_CASE("construction routes agree (built into build_phi)") {
    for (std::size_t n = 1; n <= 5; ++n) CHECK_NOTHROW(oracle::build_phi(n));
    CHECK_THROWS_AS(oracle::build_phi(13), std::invalid_argument);
    CHECK_THROWS_AS(oracle::build_phi(0), std::invalid_argument);
}

TEST_CASE("quadratic form identity") {
    const std::size_t n = 3;

    SUBCASE("zero vector") {
        CHECK(oracle::quadratic_form_identity(n, std::vector<double>(9, 0.0)) ==
              doctest::Approx(0.0));
    }

    SUBCASE("equality structure: equal on the diagonal class, zero elsewhere") {
        // 0-based members of the diagonal class are i = m + m*N.
        std::vector<double> x(9, 0.0);
        for (std::size_t m = 0; m < n; ++m) x[m + m * n] = 1.7;
        CHECK(oracle::quadratic_form_identity(n, x) <= 1e-10);

        // That vector is also a maximizing eigenvector: Phi x = 2N^2 x.
        const auto phi = oracle::build_phi(n);
        for (std::size_t row = 0; row < 9; ++row) {
            double out = 0.0;
            for (std::size_t col = 0; col < 9; ++col)
                out += phi.at(row, col) * x[col];
            CHECK(out == doctest::Approx(18.0 * x[row]));
        }
    }

    SUBCASE("random vectors") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> unit(-1.0, 1.0);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<double> x(9);
            for (auto& v : x) v = unit(rng);
            CHECK(oracle::quadratic_form_identity(n, x) <= 1e-8);
        }
    }
}

TEST_CASE("brute-force isl on known sequences") {
    CHECK(oracle::isl_bruteforce(UnimodularSequence({0, 0, 0, 0}),
                                 Mode::Periodic) == doctest::Approx(48.0));
    CHECK(oracle::isl_bruteforce(
              UnimodularSequence({0, 0, std::numbers::pi}),
              Mode::Aperiodic) == doctest::Approx(1.0));
}

TEST_CASE("validation suite passes") {
    CHECK(oracle::run_validation_suite());
}
