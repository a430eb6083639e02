#include <array>
#include <cmath>
#include <vector>

#include "doctest.h"

#include "core/errors.hpp"
#include "core/hadamard.hpp"
#include "core/kdata.hpp"
#include "core/oracle.hpp"
#include "core/spectral.hpp"

using namespace huygens;

TEST_CASE("free potential gives the constant expansion") {
    TransportOracle oracle{AngularOperator{KData::trivial({0})}, {1.0, 0.5}};
    std::vector<double> u = oracle.u_list(3, {0.2, 1.7});
    REQUIRE(u.size() == 4);
    CHECK(u[0] == 1.0);
    CHECK(std::fabs(u[1]) < 1e-14);
    CHECK(std::fabs(u[2]) < 1e-14);
    CHECK(std::fabs(u[3]) < 1e-14);
}

TEST_CASE("first coefficient matches the closed form for k = (0, 1)") {
    // Frozen closed form: U_1(x, xi) = -2 / (x_2 xi_2).
    TransportOracle oracle{AngularOperator{KData::trivial({0, 1})}, {0.4, 1.1}};
    const std::array<double, 2> x{-0.3, 2.2};
    oracle.require_admissible(x);
    CHECK(oracle.u(1, x) ==
          doctest::Approx(-2.0 / (2.2 * 1.1)).epsilon(1e-10));
}

TEST_CASE("expansion terminates numerically for k = (0, 1)") {
    // k_max = 1, so the exact U_2 vanishes; the oracle value is pure noise.
    TransportOracle oracle{AngularOperator{KData::trivial({0, 1})}, {0.4, 1.1}};
    const std::array<double, 2> x{-0.3, 2.2};
    CHECK(std::fabs(oracle.u(2, x)) < 1e-6);
}

TEST_CASE("oracle agrees with the coefficient table for k = (0, 1, 3)") {
    // This Wronskian vanishes on both coordinate axes, so the ray must stay
    // inside one quadrant sector.
    KData data = KData::trivial({0, 1, 3});
    HadamardTable table{data};
    const std::array<double, 2> xi{1.0, 0.8}, x{0.55, 1.35};
    TransportOracle oracle{AngularOperator{data}, xi};
    oracle.require_admissible(x);
    std::vector<double> u = oracle.u_list(2, x);
    for (long nu = 0; nu <= 2; ++nu) {
        const double closed = table.u_value(x, xi, nu);
        const double scale = std::max(1.0, std::fabs(closed));
        CHECK(std::fabs(u[static_cast<size_t>(nu)] - closed) / scale < 1e-6);
    }
}

TEST_CASE("inadmissible segments are rejected") {
    TransportOracle oracle{AngularOperator{KData::trivial({0, 1})}, {1.0, 1.0}};
    // The zero lines of W = -sin are the horizontal axis; this segment
    // crosses it.
    CHECK_FALSE(oracle.admissible({1.0, -1.0}));
    CHECK_THROWS_AS(oracle.u(1, {1.0, -1.0}), SingularRayError);
    // Endpoint hugging the axis violates the angular margin.
    CHECK_FALSE(oracle.admissible({2.0, 0.05}));
    // A segment through the origin fails the radius floor.
    CHECK_FALSE(oracle.admissible({-1.0, -1.0}));
    CHECK(oracle.admissible({-1.0, 1.0}));
}

TEST_CASE("input guards") {
    CHECK_THROWS_AS(
        (TransportOracle{AngularOperator{KData::trivial({0, 1})}, {0.0, 0.0}}),
        OriginError);
    TransportOracle oracle{AngularOperator{KData::trivial({0, 1})}, {1.0, 1.0}};
    CHECK_THROWS_AS(oracle.u(-1, {0.5, 1.5}), InvalidArgumentError);
    CHECK_THROWS_AS(oracle.u(4, {0.5, 1.5}), InvalidArgumentError);
}

TEST_CASE("wrapper runs the same computation") {
    std::vector<double> u =
        transport_oracle_numeric(KData::trivial({0, 1}), {-0.3, 2.2}, {0.4, 1.1}, 1);
    REQUIRE(u.size() == 2);
    CHECK(u[0] == 1.0);
    CHECK(u[1] == doctest::Approx(-2.0 / (2.2 * 1.1)).epsilon(1e-10));
}
