#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "symdet/ensembles.hpp"
#include "test_support.hpp"

using namespace symdet;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("make_em basic shapes") {
    const Ensemble e2 = make_em(2);
    REQUIRE(e2.size() == 2);
    CHECK(max_abs_diff(e2.states[0], CMat(2, 2, {1, 0, 0, 0})) <= 1e-15);
    CHECK(max_abs_diff(e2.states[1], CMat(2, 2, {0, 0, 0, 1})) <= 1e-15);
    CHECK(e2.priors[0] == 0.5);
    CHECK(e2.priors[1] == 0.5);

    const Ensemble e3 = make_em(3);
    CHECK(e3.pure[1][0].real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(e3.pure[1][1].real() == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));

    const Ensemble e4 = make_em(4);
    CHECK(std::abs(e4.pure[2][0]) <= 1e-16);
    CHECK(e4.pure[2][1].real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(inner(e4.pure[0], e4.pure[2])) <= 1e-16);
}

TEST_CASE("make_em rejects bad M") {
    CHECK_THROWS_AS(make_em(1), std::invalid_argument);
    CHECK_THROWS_AS(make_em(0), std::invalid_argument);
    CHECK_THROWS_AS(make_em(361), std::invalid_argument);
    CHECK_NOTHROW(make_em(360));
}

TEST_CASE("make_mixed_em") {
    const Ensemble pure = make_em(3);
    const Ensemble same = make_mixed_em(3, 0.0);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(max_abs_diff(pure.states[k], same.states[k]) == 0.0);
    }

    const Ensemble fully = make_mixed_em(3, 1.0);
    for (const auto &rho : fully.states) {
        CHECK(max_abs_diff(rho, 0.5 * CMat::identity(2)) <= 1e-15);
    }

    const Ensemble half = make_mixed_em(3, 0.5);
    CHECK(max_abs_diff(half.states[0], CMat(2, 2, {0.75, 0, 0, 0.25})) <= 1e-15);
    CHECK(half.pure.empty());

    CHECK_THROWS_AS(make_mixed_em(3, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(make_mixed_em(3, 1.1), std::invalid_argument);
    CHECK_NOTHROW(validate_ensemble(half));
}

TEST_CASE("make_double_em") {
    const Ensemble d2 = make_double_em(2);
    REQUIRE(d2.dim == 4);
    CHECK(std::abs(d2.pure[1][3] - cplx(1.0)) <= 1e-15);
    CHECK(std::abs(d2.pure[1][0]) + std::abs(d2.pure[1][1]) + std::abs(d2.pure[1][2]) <= 1e-15);

    const Ensemble d3 = make_double_em(3);
    CHECK(std::abs(d3.pure[0][0] - cplx(1.0)) <= 1e-15);
    // overlap squares under tensoring: cos²(π/3) = 1/4
    CHECK(inner(d3.pure[0], d3.pure[1]).real() == doctest::Approx(0.25).epsilon(1e-14));
    CHECK_NOTHROW(validate_ensemble(d3));
    CHECK_THROWS_AS(make_double_em(1), std::invalid_argument);
}

TEST_CASE("consecutive overlaps equal cos(pi/M)") {
    for (std::size_t M : {2, 3, 5, 7, 12, 31}) {
        const Ensemble e = make_em(M);
        for (std::size_t k = 0; k < M; ++k) {
            const double overlap = std::abs(inner(e.pure[k], e.pure[(k + 1) % M]));
            CHECK(std::abs(overlap - std::cos(kPi / static_cast<double>(M))) <= 1e-12);
        }
    }
}

TEST_CASE("E_M is Z_M covariant at the density-matrix level") {
    for (std::size_t M : {2, 3, 5, 8}) {
        const Ensemble e = make_em(M);
        const RotationGen g = rotation_gen(M);
        const CMat vdag = adjoint(g.matrix);
        for (std::size_t k = 0; k < M; ++k) {
            const CMat shifted = g.matrix * e.states[k] * vdag;
            CHECK(max_abs_diff(shifted, e.states[(k + 1) % M]) <= 1e-12);
        }
    }
}

TEST_CASE("rotation generator satisfies V^M = -I") {
    for (std::size_t M : {2, 3, 5, 9}) {
        const RotationGen g = rotation_gen(M);
        CMat power = CMat::identity(2);
        for (std::size_t i = 0; i < M; ++i) {
            power = power * g.matrix;
        }
        CHECK(max_abs_diff(power, -1.0 * CMat::identity(2)) <= 1e-10);
    }
}

TEST_CASE("ensemble validation rejects bad input") {
    Ensemble e = make_em(3);

    SUBCASE("priors not summing to one") {
        e.priors[0] = 0.5;
        CHECK_THROWS_WITH_AS(validate_ensemble(e), doctest::Contains("priors sum to"),
                             std::invalid_argument);
    }
    SUBCASE("negative prior") {
        e.priors[1] = -e.priors[1];
        CHECK_THROWS_WITH_AS(validate_ensemble(e), doctest::Contains("negative"),
                             std::invalid_argument);
    }
    SUBCASE("non-PSD state") {
        e.states[2] = CMat(2, 2, {1.5, 0, 0, -0.5});
        CHECK_THROWS_WITH_AS(validate_ensemble(e),
                             doctest::Contains("state 2 is not positive semidefinite"),
                             std::invalid_argument);
    }
    SUBCASE("wrong trace") {
        e.states[1] = 2.0 * e.states[1];
        CHECK_THROWS_WITH_AS(validate_ensemble(e), doctest::Contains("state 1 has trace"),
                             std::invalid_argument);
    }
    SUBCASE("make_ensemble runs the same checks") {
        std::vector<double> priors{0.6, 0.6};
        std::vector<CMat> states{CMat::identity(2), CMat::identity(2)};
        CHECK_THROWS_AS(make_ensemble(2, states, priors), std::invalid_argument);
    }
}
