#include <catch2/catch_amalgamated.hpp>

#include "cdzp/cdzp.hpp"
#include "support.hpp"

using cdzp::Algebra;
using cdzp::Element;
using cdzp::Prime;
using cdzp::Residue;

namespace {

Element elem(const Algebra& alg, std::initializer_list<std::uint32_t> c) {
    return Element(alg, std::vector<std::uint32_t>(c));
}

// F with parameters (A, B): A + B i + (A+B) j + (A+2B) k.
Element form_elem(const Algebra& alg, std::uint32_t A, std::uint32_t B) {
    const std::uint32_t p = alg.p();
    return Element(alg, {A % p, B % p, (A + B) % p, (A + 2 * B) % p});
}

std::uint32_t lin(std::int64_t v, std::uint32_t p) {
    v %= std::int64_t(p);
    if (v < 0) v += p;
    return std::uint32_t(v);
}

}  // namespace

TEST_CASE("pisano periods") {
    REQUIRE(cdzp::pisano(2) == 3);
    REQUIRE(cdzp::pisano(3) == 8);
    REQUIRE(cdzp::pisano(5) == 20);
    REQUIRE(cdzp::pisano(7) == 16);
    REQUIRE(cdzp::pisano(11) == 10);
    REQUIRE_THROWS_AS(cdzp::pisano(0), cdzp::InvalidParameter);
    REQUIRE_THROWS_AS(cdzp::pisano(1), cdzp::InvalidParameter);

    // Minimality: no earlier index restarts the sequence at (0, 1).
    for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
        std::uint32_t period = cdzp::pisano(q);
        std::uint32_t a = 0, b = 1;
        for (std::uint32_t n = 1; n < period; ++n) {
            std::uint32_t next = (a + b) % q;
            a = b;
            b = next;
            REQUIRE(!(a == 0 && b == 1));
        }
    }
}

TEST_CASE("fibonacci quaternions") {
    Prime p3(3);
    REQUIRE(cdzp::fib_quat(0, p3) ==
            elem(cdzp::fib_algebra(p3), {0, 1, 1, 2}));
    REQUIRE(cdzp::fib_quat(3, p3) ==
            elem(cdzp::fib_algebra(p3), {2, 0, 2, 2}));
    REQUIRE(cdzp::fib_quat(5, p3) ==
            elem(cdzp::fib_algebra(p3), {2, 2, 1, 0}));
    REQUIRE_THROWS_AS(cdzp::fib_quat(8, p3), cdzp::IndexOutOfPeriod);

    // The full list over Z_3, in display form.
    const char* expected[] = {"i+j+2k", "1+i+2j",  "1+2i+2k", "2+2j+2k",
                              "2i+2j+k", "2+2i+j", "2+i+k",   "1+j+k"};
    for (std::size_t n = 0; n < 8; ++n)
        REQUIRE(cdzp::to_display_string(cdzp::fib_quat(n, p3)) ==
                expected[n]);
}

TEST_CASE("fibonacci quaternion shape and consecutive sums") {
    for (std::uint32_t q : {3u, 5u, 7u, 11u}) {
        Prime p(q);
        cdzp::FibQuatSet set = cdzp::FibQuatSet::build(p);
        for (std::size_t n = 0; n < set.period(); ++n) {
            REQUIRE(cdzp::product_form(set.at(n)).has_value());
            REQUIRE(set.at(n) + set.at((n + 1) % set.period()) ==
                    set.at((n + 2) % set.period()));
        }
    }
}

TEST_CASE("norm identity") {
    Prime p3(3);
    for (std::size_t n = 0; n < 8; ++n) {
        REQUIRE(cdzp::norm_identity_check(n, p3));
        REQUIRE(cdzp::fib_quat(n, p3).norm().value() == 0);
    }
    REQUIRE(cdzp::norm_identity_check(1, Prime(7)));
    REQUIRE(cdzp::norm_identity_check(0, Prime(29)));
    for (std::uint32_t q : {7u, 11u, 29u}) {
        Prime p(q);
        std::uint32_t period = cdzp::pisano(q);
        for (std::size_t n = 0; n < period; ++n)
            REQUIRE(cdzp::norm_identity_check(n, p));
    }
}

TEST_CASE("product form detection") {
    Prime p3(3);
    Algebra alg = cdzp::fib_algebra(p3);
    Element prod = cdzp::fib_quat(1, p3) * cdzp::fib_quat(2, p3);
    auto form = cdzp::product_form(prod);
    REQUIRE(form.has_value());
    REQUIRE(form->first == 2);
    REQUIRE(form->second == 1);
    REQUIRE(prod == cdzp::fib_quat(6, p3));

    REQUIRE(cdzp::product_form(Element::zero(alg)) ==
            std::make_pair(0u, 0u));
    REQUIRE_FALSE(cdzp::product_form(Element::unit(alg, 1)).has_value());
    REQUIRE_THROWS_AS(cdzp::product_form(Element::one(Algebra(p3, 3))),
                      cdzp::PreconditionViolated);
}

TEST_CASE("symbolic products expand correctly") {
    // F1 = a+bi+(a+b)j+(a+2b)k times F2 = c+di+(c+d)j+(c+2d)k comes out as
    // (-ac-3ad-3bc-6bd) + 2ad i + 2a(c+d) j + (2ac+ad+3bc) k, and the
    // reversed product as the same scalar + 2bc i + 2c(a+b) j +
    // (2ac+3ad+bc) k. Exhaustive over small primes.
    for (std::uint32_t q : {3u, 5u, 7u}) {
        Algebra alg(Prime(q), 2);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                for (std::uint32_t c = 0; c < q; ++c)
                    for (std::uint32_t d = 0; d < q; ++d) {
                        Element f1 = form_elem(alg, a, b);
                        Element f2 = form_elem(alg, c, d);
                        std::int64_t ac = std::int64_t(a) * c,
                                     ad = std::int64_t(a) * d,
                                     bc = std::int64_t(b) * c,
                                     bd = std::int64_t(b) * d;
                        Element lhs(alg, {lin(-ac - 3 * ad - 3 * bc - 6 * bd, q),
                                          lin(2 * ad, q),
                                          lin(2 * (ac + ad), q),
                                          lin(2 * ac + ad + 3 * bc, q)});
                        REQUIRE(f1 * f2 == lhs);
                        Element rhs(alg, {lin(-ac - 3 * ad - 3 * bc - 6 * bd, q),
                                          lin(2 * bc, q),
                                          lin(2 * (ac + bc), q),
                                          lin(2 * ac + 3 * ad + bc, q)});
                        REQUIRE(f2 * f1 == rhs);
                    }
    }
}

TEST_CASE("closure systems") {
    Prime p3(3);
    for (std::uint32_t a = 0; a < 3; ++a)
        for (std::uint32_t b = 0; b < 3; ++b)
            for (std::uint32_t c = 0; c < 3; ++c)
                for (std::uint32_t d = 0; d < 3; ++d) {
                    auto [first, second] = cdzp::closure_systems(
                        Residue(a, p3), Residue(b, p3), Residue(c, p3),
                        Residue(d, p3));
                    REQUIRE(first);
                    REQUIRE(second);
                }

    Prime p5(5);
    REQUIRE(cdzp::closure_systems(Residue(1, p5), Residue(1, p5),
                                  Residue(0, p5), Residue(0, p5)) ==
            std::make_pair(true, true));
    REQUIRE(cdzp::closure_systems(Residue(1, p5), Residue(1, p5),
                                  Residue(1, p5), Residue(1, p5)) ==
            std::make_pair(true, false));
}

TEST_CASE("first closure system tracks the product shape exactly") {
    // The first system is equivalent to F1 F2 keeping the Fibonacci shape;
    // the second one is a stricter condition than the shape of F2 F1, and
    // the divergence below pins one witness.
    std::size_t divergences = 0;
    for (std::uint32_t q : {5u, 7u, 13u}) {
        Prime p(q);
        Algebra alg(p, 2);
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                for (std::uint32_t c = 0; c < q; ++c)
                    for (std::uint32_t d = 0; d < q; ++d) {
                        Element f1 = form_elem(alg, a, b);
                        Element f2 = form_elem(alg, c, d);
                        auto [first, second] = cdzp::closure_systems(
                            Residue(a, p), Residue(b, p), Residue(c, p),
                            Residue(d, p));
                        REQUIRE(first ==
                                cdzp::product_form(f1 * f2).has_value());
                        if (second !=
                            cdzp::product_form(f2 * f1).has_value())
                            ++divergences;
                    }
    }
    REQUIRE(divergences > 0);

    // Witness: a=b=c=d=1 mod 5 fails the second system although both
    // products keep the shape.
    Prime p5(5);
    Algebra alg5(p5, 2);
    Element f = form_elem(alg5, 1, 1);
    REQUIRE(cdzp::product_form(f * f).has_value());
    REQUIRE(cdzp::closure_systems(Residue(1, p5), Residue(1, p5),
                                  Residue(1, p5), Residue(1, p5))
                .second == false);
}

TEST_CASE("ring tables for p=3") {
    cdzp::RingTables tables = cdzp::build_tables(Prime(3));
    REQUIRE(tables.size() == 9);
    REQUIRE(tables.zero_index() == 8);
    REQUIRE(tables.set.members.size() == 8);

    // Quoted products, rows F1, F2, F3, F7 (other rows are all-zero or
    // identity maps and are asserted below).
    const std::size_t kMulRows[4] = {1, 2, 3, 7};
    const std::size_t kMulExpect[4][8] = {
        {4, 5, 6, 7, 0, 1, 2, 3},
        {4, 5, 6, 7, 0, 1, 2, 3},
        {0, 1, 2, 3, 4, 5, 6, 7},
        {4, 5, 6, 7, 0, 1, 2, 3},
    };
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t j = 0; j < 8; ++j)
            REQUIRE(tables.mul_at(kMulRows[r], j) == kMulExpect[r][j]);
    for (std::size_t j = 0; j < 8; ++j) {
        REQUIRE(tables.mul_at(0, j) == 8);
        REQUIRE(tables.mul_at(4, j) == 8);
        REQUIRE(tables.mul_at(5, j) == j);
        REQUIRE(tables.mul_at(6, j) == j);
    }

    // Quoted sums, upper triangle including doubles. The (4,6) entry is 3
    // by direct computation.
    const std::size_t kAddExpect[8][8] = {
        {4, 2, 7, 6, 8, 3, 5, 1},
        {2, 5, 3, 0, 7, 8, 4, 6},
        {7, 3, 6, 4, 1, 0, 8, 5},
        {6, 0, 4, 7, 5, 2, 1, 8},
        {8, 7, 1, 5, 0, 6, 3, 2},
        {3, 8, 0, 2, 6, 1, 7, 4},
        {5, 4, 8, 1, 3, 7, 2, 0},
        {1, 6, 5, 8, 2, 4, 0, 3},
    };
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i; j < 8; ++j)
            REQUIRE(tables.add_at(i, j) == kAddExpect[i][j]);

    REQUIRE(tables.add_at(0, 4) == 8);
    REQUIRE(tables.mul_at(1, 0) == 4);
    REQUIRE(tables.mul_at(7, 7) == 3);
}

TEST_CASE("ring axioms for p=3") {
    cdzp::RingTables tables = cdzp::build_tables(Prime(3));
    cdzp::RingReport rep = cdzp::ring_verify(tables);
    REQUIRE(rep.order == 9);
    REQUIRE(rep.abelian_group_ok());
    REQUIRE(rep.ring_ok());
    REQUIRE(rep.additive_exponent == 3);
    REQUIRE(rep.noncommutative_witness ==
            std::make_pair(std::size_t(0), std::size_t(1)));
    REQUIRE(tables.mul_at(1, 0) == 4);  // the witness: F1 F0 = F4
    REQUIRE(tables.mul_at(0, 1) == 8);  // but F0 F1 = 0
    REQUIRE(rep.left_identities == std::vector<std::size_t>({3, 5, 6}));
    REQUIRE(rep.right_failures.size() == 3);
    REQUIRE_FALSE(rep.has_two_sided_unity);
    REQUIRE(tables.mul_at(2, 5) == 1);  // F2 F5 = F1, so F5 is not two-sided
}

TEST_CASE("potency classes of the nine ring members") {
    Prime p3(3);
    auto expect_class = [&](std::size_t n, std::uint64_t k) {
        Element f = cdzp::fib_quat(n, p3);
        REQUIRE(cdzp::potency_index_iterative(f) == k);
        REQUIRE(cdzp::classify_structured(f).k == k);
    };
    for (std::size_t n : {0u, 4u})
        REQUIRE(cdzp::nilpotency_index(cdzp::fib_quat(n, p3)) == 2);
    for (std::size_t n : {3u, 5u, 6u}) expect_class(n, 2);
    for (std::size_t n : {1u, 2u, 7u}) expect_class(n, 3);
}

TEST_CASE("closure fails beyond p=3") {
    REQUIRE_THROWS_AS(cdzp::build_tables(Prime(5)), cdzp::NotClosed);
    REQUIRE_THROWS_AS(cdzp::build_tables(Prime(7)), cdzp::NotClosed);
}
