#include <catch2/catch_amalgamated.hpp>

#include "properties.hpp"

TEST_CASE("quadratic identity holds everywhere") {
    auto out = props::quadratic_identity();
    CHECK(out.cases >= 1000);
    REQUIRE(out.failures == 0);
}

TEST_CASE("norm of a power is the power of the norm") {
    auto out = props::norm_power();
    CHECK(out.cases >= 1000);
    REQUIRE(out.failures == 0);
}

TEST_CASE("conjugation reverses products") {
    auto out = props::conj_antihomomorphism();
    CHECK(out.cases >= 1000);
    REQUIRE(out.failures == 0);
}

TEST_CASE("flexible law") {
    auto out = props::flexible_law();
    CHECK(out.cases >= 1000);
    REQUIRE(out.failures == 0);
}

TEST_CASE("sandwiching by a basis unit scales by its square") {
    auto out = props::unit_sandwich();
    CHECK(out.cases >= 1000);
    REQUIRE(out.failures == 0);
}

TEST_CASE("powers of one element multiply by adding exponents") {
    auto out = props::power_associativity();
    CHECK(out.cases >= 1000);
    REQUIRE(out.failures == 0);
}

TEST_CASE("alternative laws hold through level three") {
    auto out = props::alternativity_through_octonions();
    CHECK(out.cases >= 1000);
    REQUIRE(out.failures == 0);
}

TEST_CASE("level four drops alternativity") {
    auto witness = props::alternativity_counterexample();
    REQUIRE(witness.has_value());
    auto [x, y] = *witness;
    CHECK(!((x * x) * y == x * (x * y)));
    // Flexibility still holds for the same pair.
    CHECK((x * y) * x == x * (y * x));
}

TEST_CASE("level four multiplication loses information") {
    auto witness = props::decryption_failure_witness();
    REQUIRE(witness.has_value());
    auto [q, v] = *witness;
    REQUIRE(q.norm().value() != 0);
    CHECK(!(q.inverse() * (q * v) == v));
}
