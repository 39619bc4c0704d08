#include <doctest.h>

#include <stdexcept>

#include "raptor/matrix.hpp"
#include "raptor/rng.hpp"
#include "test_oracles.hpp"

using raptor::Field;
using raptor::FqMatrix;
using raptor::Gf2Matrix;

namespace {

FqMatrix random_matrix(int rows, int cols, const Field& f, raptor::Xoshiro256ss& rng) {
    FqMatrix m(rows, cols);
    for (auto& e : m.data)
        e = static_cast<Field::elem>(rng.below(f.q()));
    return m;
}

} // namespace

TEST_CASE("rank of identity and zero matrices") {
    const Field f2(1);
    CHECK(raptor::rank(raptor::identity_matrix(5), f2) == 5);
    CHECK(raptor::rank(FqMatrix(3, 7), f2) == 0);
}

TEST_CASE("rank matches an independent elimination oracle") {
    raptor::Xoshiro256ss rng(20240501);
    for (int m : {1, 2, 4}) {
        const Field f(m);
        for (int trial = 0; trial < 40; ++trial) {
            const FqMatrix mat = random_matrix(20, 20, f, rng);
            CHECK(raptor::rank(mat, f) == raptor::testing::slow_rank(mat, f));
        }
    }
}

TEST_CASE("packed and dense paths agree over GF(2)") {
    const Field f(1);
    raptor::Xoshiro256ss rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const FqMatrix mat = random_matrix(17, 23, f, rng);
        CHECK(raptor::rank(mat, f) == raptor::rank_elimination(mat, f));
        const FqMatrix packed_basis = raptor::nullspace_basis(mat, f);
        const FqMatrix dense_basis = raptor::nullspace_elimination(mat, f);
        CHECK(packed_basis.rows == dense_basis.rows);
        CHECK(raptor::rank(packed_basis, f) == packed_basis.rows);
    }
}

TEST_CASE("rank is invariant under transposition and row operations") {
    raptor::Xoshiro256ss rng(99);
    for (int m : {1, 2}) {
        const Field f(m);
        for (int trial = 0; trial < 25; ++trial) {
            FqMatrix mat = random_matrix(12, 9, f, rng);
            const int r = raptor::rank(mat, f);
            CHECK(raptor::rank(raptor::transpose(mat), f) == r);

            // swap two rows
            for (int c = 0; c < mat.cols; ++c)
                std::swap(mat.at(1, c), mat.at(4, c));
            CHECK(raptor::rank(mat, f) == r);
            // scale a row by a nonzero element
            const Field::elem s = static_cast<Field::elem>(1 + rng.below(f.q() - 1));
            for (int c = 0; c < mat.cols; ++c)
                mat.at(2, c) = f.mul(s, mat.at(2, c));
            CHECK(raptor::rank(mat, f) == r);
            // add one row to another
            for (int c = 0; c < mat.cols; ++c)
                mat.at(0, c) = f.add(mat.at(0, c), mat.at(5, c));
            CHECK(raptor::rank(mat, f) == r);
        }
    }
}

TEST_CASE("nullspace of a full-rank square matrix is empty") {
    const Field f(1);
    const FqMatrix basis = raptor::nullspace_basis(raptor::identity_matrix(4), f);
    CHECK(basis.rows == 0);
    CHECK(basis.cols == 4);
}

TEST_CASE("nullspace of the all-ones parity row is the even-weight code") {
    const Field f(1);
    FqMatrix m(1, 3);
    m.at(0, 0) = m.at(0, 1) = m.at(0, 2) = 1;
    const FqMatrix basis = raptor::nullspace_basis(m, f);
    REQUIRE(basis.rows == 2);
    for (int r = 0; r < basis.rows; ++r) {
        int weight = 0;
        for (int c = 0; c < 3; ++c)
            weight += basis.at(r, c);
        CHECK(weight % 2 == 0);
    }
}

TEST_CASE("nullspace rows are independent and annihilated by the matrix") {
    raptor::Xoshiro256ss rng(4242);
    for (int m : {1, 2, 3}) {
        const Field f(m);
        for (int trial = 0; trial < 20; ++trial) {
            const FqMatrix mat = random_matrix(3, 7, f, rng);
            const FqMatrix basis = raptor::nullspace_basis(mat, f);
            CHECK(basis.rows == 7 - raptor::rank(mat, f));
            if (basis.rows == 0)
                continue;
            const FqMatrix prod = raptor::mat_mul(mat, raptor::transpose(basis), f);
            for (auto e : prod.data)
                CHECK(e == 0);
            CHECK(raptor::rank(basis, f) == basis.rows);
        }
    }
}

TEST_CASE("matrix helpers validate their inputs") {
    const Field f4(2);
    FqMatrix bad(2, 2);
    bad.at(1, 1) = 7; // >= q
    CHECK_THROWS_AS(raptor::rank(bad, f4), std::domain_error);
    CHECK_THROWS_AS(raptor::mat_mul(bad, bad, f4), std::domain_error);
    CHECK_THROWS_AS(raptor::mat_mul(FqMatrix(2, 3), FqMatrix(2, 3), f4), std::domain_error);
    CHECK_THROWS_AS(raptor::stack_rows(FqMatrix(1, 3), FqMatrix(1, 4)), std::domain_error);
    CHECK_THROWS_AS(Gf2Matrix::from_matrix(bad), std::domain_error);
}

TEST_CASE("stacking keeps both blocks") {
    FqMatrix top(1, 3);
    top.at(0, 2) = 1;
    FqMatrix bottom(2, 3);
    bottom.at(1, 0) = 1;
    const FqMatrix s = raptor::stack_rows(top, bottom);
    CHECK(s.rows == 3);
    CHECK(s.at(0, 2) == 1);
    CHECK(s.at(2, 0) == 1);
    // empty blocks are fine
    CHECK(raptor::stack_rows(FqMatrix(0, 3), bottom).rows == 2);
}

TEST_CASE("packed round trip preserves the matrix") {
    raptor::Xoshiro256ss rng(11);
    const Field f(1);
    const FqMatrix mat = random_matrix(9, 70, f, rng);
    CHECK(Gf2Matrix::from_matrix(mat).to_matrix() == mat);
}
