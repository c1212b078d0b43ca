#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilpair/matrix.hpp"
#include "testutil.hpp"

using namespace nilpair;
using testutil::Rng;

namespace {
const FieldSpec kQ = FieldSpec::rationals();
}

TEST_CASE("product basics") {
    DenseMatrix id3 = DenseMatrix::identity(kQ, 3);
    Rng rng(1);
    DenseMatrix m = testutil::random_matrix(rng, kQ, 3, 3);
    CHECK(id3 * m == m);
    CHECK(m * id3 == m);

    DenseMatrix j2 = DenseMatrix::jordan_block(kQ, 2);
    CHECK((j2 * j2).is_zero());

    FieldSpec f2 = FieldSpec::prime_field(2);
    DenseMatrix x = testutil::matrix_of_ints(f2, {{1, 1}, {0, 1}});
    DenseMatrix y = testutil::matrix_of_ints(f2, {{1, 0}, {1, 1}});
    CHECK(x * y == testutil::matrix_of_ints(f2, {{0, 1}, {1, 1}}));

    CHECK_THROWS_AS(j2 * id3, ShapeError);
    CHECK_THROWS_AS(j2 * DenseMatrix::identity(f2, 2), FieldMismatchError);
}

TEST_CASE("product associativity on random triples") {
    Rng rng(2);
    for (FieldSpec spec : {kQ, FieldSpec::prime_field(5)}) {
        for (int i = 0; i < 25; ++i) {
            DenseMatrix a = testutil::random_matrix(rng, spec, 4, 4);
            DenseMatrix b = testutil::random_matrix(rng, spec, 4, 4);
            DenseMatrix c = testutil::random_matrix(rng, spec, 4, 4);
            CHECK((a * b) * c == a * (b * c));
        }
    }
}

TEST_CASE("inverse") {
    CHECK(DenseMatrix::identity(kQ, 3).inverse() == DenseMatrix::identity(kQ, 3));

    DenseMatrix u = testutil::matrix_of_ints(kQ, {{1, 1}, {0, 1}});
    CHECK(u.inverse() == testutil::matrix_of_ints(kQ, {{1, -1}, {0, 1}}));

    CHECK_THROWS_AS(DenseMatrix::jordan_block(kQ, 2).inverse(), SingularMatrixError);
    CHECK_THROWS_AS(DenseMatrix(kQ, 2, 3).inverse(), ShapeError);
}

TEST_CASE("inverse of random invertible matrices is exact") {
    Rng rng(3);
    for (FieldSpec spec : {kQ, FieldSpec::prime_field(7)}) {
        for (int i = 0; i < 20; ++i) {
            DenseMatrix x = testutil::random_invertible(rng, spec, 5);
            CHECK(x.inverse() * x == DenseMatrix::identity(spec, 5));
            CHECK(x * x.inverse() == DenseMatrix::identity(spec, 5));
        }
    }
}

TEST_CASE("rank") {
    CHECK(DenseMatrix(kQ, 3, 3).rank() == 0);
    CHECK(DenseMatrix::jordan_block(kQ, 4).rank() == 3);

    // (J3 + J2)^2 has a single nonzero entry
    DenseMatrix j = DenseMatrix::jordan_matrix(kQ, JordanType({3, 2}));
    CHECK((j * j).rank() == 1);

    FieldSpec f3 = FieldSpec::prime_field(3);
    DenseMatrix jp = DenseMatrix::jordan_matrix(f3, JordanType({3, 2}));
    CHECK((jp * jp).rank() == 1);
}

TEST_CASE("rank is invariant under row scaling with awkward denominators") {
    Rng rng(4);
    for (int i = 0; i < 20; ++i) {
        DenseMatrix a = testutil::random_matrix(rng, kQ, 4, 6);
        std::size_t r = a.rank();
        DenseMatrix scaled = a;
        for (std::size_t row = 0; row < 4; ++row) {
            Scalar f = testutil::random_nonzero_scalar(rng, kQ);
            for (std::size_t col = 0; col < 6; ++col) scaled.set(row, col, a.at(row, col) * f);
        }
        CHECK(scaled.rank() == r);
    }
}

TEST_CASE("jordan_type") {
    CHECK(jordan_type(DenseMatrix(kQ, 3, 3)) == JordanType({1, 1, 1}));

    DenseMatrix j64 = DenseMatrix::jordan_matrix(kQ, JordanType({6, 4}));
    CHECK(jordan_type(j64) == JordanType({6, 4}));

    CHECK_THROWS_AS(jordan_type(DenseMatrix::identity(kQ, 2)), NotNilpotentError);
}

TEST_CASE("jordan_type is conjugation-invariant") {
    Rng rng(5);
    DenseMatrix j = DenseMatrix::jordan_matrix(kQ, JordanType({3, 2}));
    FieldSpec f5 = FieldSpec::prime_field(5);
    DenseMatrix jp = DenseMatrix::jordan_matrix(f5, JordanType({3, 2}));
    for (int i = 0; i < 200; ++i) {
        // split the budget between the two fields
        if (i % 2 == 0) {
            DenseMatrix x = testutil::random_invertible(rng, kQ, 5);
            CHECK(jordan_type(conjugate(x, j)) == JordanType({3, 2}));
        } else {
            DenseMatrix x = testutil::random_invertible(rng, f5, 5);
            CHECK(jordan_type(conjugate(x, jp)) == JordanType({3, 2}));
        }
    }
}

TEST_CASE("jordan_basis on already-Jordan and permuted input") {
    DenseMatrix j32 = DenseMatrix::jordan_matrix(kQ, JordanType({3, 2}));
    DenseMatrix p = jordan_basis(j32);
    CHECK(p.inverse() * j32 * p == j32);

    // permutation-conjugated J3
    DenseMatrix perm(kQ, 3, 3);
    perm.set(0, 2, Scalar::one(kQ));
    perm.set(1, 0, Scalar::one(kQ));
    perm.set(2, 1, Scalar::one(kQ));
    DenseMatrix a = conjugate(perm, DenseMatrix::jordan_block(kQ, 3));
    DenseMatrix p2 = jordan_basis(a);
    CHECK(p2.inverse() * a * p2 == DenseMatrix::jordan_block(kQ, 3));

    DenseMatrix zero(kQ, 4, 4);
    DenseMatrix p3 = jordan_basis(zero);
    CHECK(p3.rank() == 4);
    CHECK((p3.inverse() * zero * p3).is_zero());
}

TEST_CASE("jordan_basis post-condition on random conjugates") {
    Rng rng(6);
    for (FieldSpec spec : {kQ, FieldSpec::prime_field(7)}) {
        for (const std::vector<std::size_t>& parts :
             {std::vector<std::size_t>{3, 2}, std::vector<std::size_t>{4, 2},
              std::vector<std::size_t>{2, 2, 1}}) {
            JordanType type(parts);
            DenseMatrix j = DenseMatrix::jordan_matrix(spec, type);
            for (int i = 0; i < 10; ++i) {
                DenseMatrix x = testutil::random_invertible(rng, spec, type.order());
                DenseMatrix a = conjugate(x, j);
                DenseMatrix p = jordan_basis(a);
                CHECK(p.inverse() * a * p == j);
            }
        }
    }
    CHECK_THROWS_AS(jordan_basis(DenseMatrix::identity(kQ, 2)), NotNilpotentError);
}

TEST_CASE("conjugate") {
    Rng rng(8);
    DenseMatrix b = testutil::random_matrix(rng, kQ, 3, 3);
    CHECK(conjugate(DenseMatrix::identity(kQ, 3), b) == b);
    DenseMatrix x = testutil::random_invertible(rng, kQ, 3);
    CHECK(conjugate(x, DenseMatrix(kQ, 3, 3)).is_zero());

    DenseMatrix u = testutil::matrix_of_ints(kQ, {{1, 1}, {0, 1}});
    DenseMatrix j2 = DenseMatrix::jordan_block(kQ, 2);
    CHECK(conjugate(u, j2) == j2);

    CHECK_THROWS_AS(conjugate(j2, b), ShapeError);
    CHECK_THROWS_AS(conjugate(DenseMatrix(kQ, 3, 3), b), SingularMatrixError);
}

TEST_CASE("conjugation is an algebra map") {
    Rng rng(9);
    for (int i = 0; i < 20; ++i) {
        DenseMatrix x = testutil::random_invertible(rng, kQ, 4);
        DenseMatrix b = testutil::random_matrix(rng, kQ, 4, 4);
        DenseMatrix c = testutil::random_matrix(rng, kQ, 4, 4);
        CHECK(conjugate(x, b * c) == conjugate(x, b) * conjugate(x, c));
    }
}

TEST_CASE("matrix power") {
    DenseMatrix j4 = DenseMatrix::jordan_block(kQ, 4);
    CHECK(j4.pow(0) == DenseMatrix::identity(kQ, 4));
    CHECK(j4.pow(3).rank() == 1);
    CHECK(j4.pow(4).is_zero());
}
