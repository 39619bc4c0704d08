#include <doctest.h>

#include <set>
#include <stdexcept>

#include "raptor/field.hpp"
#include "test_oracles.hpp"

using raptor::Field;

TEST_CASE("tabulated reduction polynomials are irreducible for every m") {
    for (int m = 1; m <= 16; ++m) {
        const Field f(m);
        CHECK(f.m() == m);
        CHECK(f.q() == (1u << m));
        CHECK(Field::is_irreducible(f.reduction_poly()));
    }
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(Field(0), std::domain_error);
    CHECK_THROWS_AS(Field(17), std::domain_error);
    CHECK_THROWS_AS(Field(4, 0x11), std::domain_error); // x^4 + 1 = (x+1)^4
    CHECK_THROWS_AS(Field(4, 0xb), std::domain_error);  // degree mismatch
    CHECK_NOTHROW(Field(4, 0x13));
    CHECK_NOTHROW(Field(4, 0x19)); // x^4 + x^3 + 1, also irreducible
}

TEST_CASE("addition is xor with identity and self-inverse") {
    const Field f16(4);
    for (Field::elem x = 0; x < 16; ++x)
        CHECK(f16.add(0, x) == x);
    const Field f4(2);
    for (Field::elem x = 0; x < 4; ++x)
        CHECK(f4.add(x, x) == 0);
    const Field f8(3);
    CHECK(f8.add(3, 5) == 6);
}

TEST_CASE("multiplication identities and hand values") {
    const Field f16(4);
    for (Field::elem x = 0; x < 16; ++x) {
        CHECK(f16.mul(1, x) == x);
        CHECK(f16.mul(0, x) == 0);
    }
    const Field f8(3);
    CHECK(f8.mul(3, 5) == 4); // (x+1)(x^2+1) mod x^3+x+1
}

TEST_CASE("multiplication by a nonzero element permutes GF(16)") {
    const Field f(4);
    for (Field::elem a = 1; a < 16; ++a) {
        std::set<Field::elem> image;
        for (Field::elem b = 0; b < 16; ++b)
            image.insert(f.mul(a, b));
        CHECK(image.size() == 16);
    }
}

TEST_CASE("field axioms hold exhaustively for m <= 4") {
    for (int m = 1; m <= 4; ++m) {
        const Field f(m);
        const int q = static_cast<int>(f.q());
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                for (int c = 0; c < q; ++c) {
                    const auto ea = static_cast<Field::elem>(a);
                    const auto eb = static_cast<Field::elem>(b);
                    const auto ec = static_cast<Field::elem>(c);
                    CHECK(f.add(f.add(ea, eb), ec) == f.add(ea, f.add(eb, ec)));
                    CHECK(f.mul(f.mul(ea, eb), ec) == f.mul(ea, f.mul(eb, ec)));
                    CHECK(f.mul(ea, f.add(eb, ec)) == f.add(f.mul(ea, eb), f.mul(ea, ec)));
                }
    }
}

TEST_CASE("inverses multiply to one") {
    for (int m : {1, 2, 3, 5, 8}) {
        const Field f(m);
        for (std::uint32_t a = 1; a < f.q(); ++a)
            CHECK(f.mul(static_cast<Field::elem>(a), f.inv(static_cast<Field::elem>(a))) == 1);
    }
    // spot checks for the large-field multiply-and-reduce path
    for (int m : {12, 16}) {
        const Field f(m);
        for (std::uint32_t a = 1; a < f.q(); a += 997)
            CHECK(f.mul(static_cast<Field::elem>(a), f.inv(static_cast<Field::elem>(a))) == 1);
    }
    CHECK_THROWS_AS(Field(3).inv(0), std::domain_error);
}

TEST_CASE("table-based product matches an independent shift-and-reduce oracle") {
    for (int m : {2, 3, 8}) {
        const Field f(m);
        for (std::uint32_t a = 0; a < f.q(); ++a)
            for (std::uint32_t b = 0; b < f.q(); ++b)
                CHECK(f.mul(static_cast<Field::elem>(a), static_cast<Field::elem>(b)) ==
                      raptor::testing::naive_gf_mul(a, b, f.reduction_poly(), m));
    }
}

TEST_CASE("division agrees with multiplication by the inverse") {
    const Field f(4);
    for (Field::elem a = 0; a < 16; ++a)
        for (Field::elem b = 1; b < 16; ++b)
            CHECK(f.div(a, b) == f.mul(a, f.inv(b)));
    CHECK_THROWS_AS(f.div(3, 0), std::domain_error);
}

TEST_CASE("out-of-range elements are rejected") {
    const Field f(3);
    CHECK_THROWS_AS(f.add(8, 0), std::domain_error);
    CHECK_THROWS_AS(f.add(0, 200), std::domain_error);
    CHECK_THROWS_AS(f.mul(8, 1), std::domain_error);
    CHECK_THROWS_AS(f.inv(9), std::domain_error);
}
