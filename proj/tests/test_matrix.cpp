#include <doctest.h>

#include <random>

#include "matgeo/matrix.hpp"
#include "matgeo/random.hpp"

using namespace matgeo;

TEST_SUITE("matrix") {

TEST_CASE("serialization round-trips and rejects malformed text") {
    const FieldSpec& f = field_make(3, 1);
    Matrix m = Matrix::parse(f, "0,1;1,2");
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 2);
    CHECK(m.at(1, 1) == 2);
    CHECK(m.to_text() == "0,1;1,2");
    CHECK(Matrix::parse(f, m.to_text()) == m);

    CHECK_THROWS_AS(Matrix::parse(f, "1,2;3"), Error);    // ragged rows
    CHECK_THROWS_AS(Matrix::parse(f, "1,5;0,0"), Error);  // entry outside GF(3)
    CHECK_THROWS_AS(Matrix::parse(f, ""), Error);
    CHECK_THROWS_AS(Matrix::parse(f, "1,x;0,0"), Error);
}

TEST_CASE("constructors build the expected entries") {
    const FieldSpec& f = field_make(5, 1);
    CHECK(Matrix::identity(f, 2).to_text() == "1,0;0,1");
    CHECK(Matrix::unit(f, 2, 3, 1, 2).to_text() == "0,0,0;0,0,1");
    CHECK(Matrix::from_rows(f, {{1, 2}, {3, 4}}).to_text() == "1,2;3,4");
    CHECK(row_vector(f, {4, 0, 1}).to_text() == "4,0,1");
    CHECK(is_zero(Matrix(f, 2, 2)));
}

TEST_CASE("arithmetic stays inside the field and respects shapes") {
    const FieldSpec& f = field_make(3, 1);
    Matrix a = Matrix::parse(f, "1,2;0,1");
    Matrix b = Matrix::parse(f, "2,2;1,0");
    CHECK((a + b).to_text() == "0,1;1,1");
    CHECK((a - b).to_text() == "2,0;2,1");
    CHECK((-a).to_text() == "2,1;0,2");
    CHECK(scale(2, a).to_text() == "2,1;0,2");
    CHECK((a * b).to_text() == "1,2;1,0");
    CHECK(transpose(a).to_text() == "1,0;2,1");

    Matrix wide = Matrix(f, 2, 3);
    CHECK_THROWS_AS(a + wide, Error);
    CHECK_THROWS_AS(wide * wide, Error);
}

TEST_CASE("rank and rref on hand-checked cases") {
    const FieldSpec& f5 = field_make(5, 1);
    CHECK(rank(Matrix::parse(f5, "1,2;2,4")) == 1);  // second row is twice the first
    CHECK(rank(Matrix::identity(f5, 3)) == 3);
    CHECK(rank(Matrix(f5, 2, 2)) == 0);

    const FieldSpec& f3 = field_make(3, 1);
    Matrix m = Matrix::parse(f3, "0,2,1;1,1,0");
    CHECK(rref(m).to_text() == "1,0,1;0,1,2");
    CHECK(rref(rref(m)) == rref(m));
}

TEST_CASE("rank is invariant under transposition") {
    std::mt19937_64 rng(11);
    const FieldSpec& f = field_make(2, 2);
    for (int trial = 0; trial < 40; ++trial) {
        Matrix m = random_matrix(rng, f, 3, 4);
        CHECK(rank(m) == rank(transpose(m)));
    }
}

TEST_CASE("inverse round-trips and singular matrices are refused") {
    std::mt19937_64 rng(12);
    const FieldSpec& f = field_make(7, 1);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix m = random_invertible(rng, f, 3);
        CHECK(m * inverse(m) == Matrix::identity(f, 3));
        CHECK(inverse(m) * m == Matrix::identity(f, 3));
    }
    Matrix singular = Matrix::parse(f, "1,2;2,4");
    CHECK_FALSE(try_inverse(singular).has_value());
    CHECK_THROWS_AS(inverse(singular), Error);
    CHECK_THROWS_AS(inverse(Matrix(f, 2, 3)), Error);
}

TEST_CASE("conjugate transpose applies the involution entrywise") {
    const FieldSpec& f9 = field_make(3, 2);
    Involution frob(f9, InvolutionKind::Frobenius);
    // With x^2 = 2: sigma(x) = x^3 = 2x, so 3 -> 6, 5 = 2+x -> 2+2x = 8.
    Matrix m = Matrix::parse(f9, "3,1;0,5");
    CHECK(conj_transpose(m, frob).to_text() == "6,0;1,8");

    Involution id(f9, InvolutionKind::Identity);
    CHECK(conj_transpose(m, id) == transpose(m));
}

TEST_CASE("hermitian and alternate predicates") {
    const FieldSpec& f9 = field_make(3, 2);
    Involution frob(f9, InvolutionKind::Frobenius);
    // sigma(6) = 3 and the diagonal is fixed, so this matrix is hermitian.
    Matrix h = Matrix::parse(f9, "1,3;6,2");
    CHECK(is_hermitian(h, frob));
    h.set(0, 1, 4);
    CHECK_FALSE(is_hermitian(h, frob));

    const FieldSpec& f2 = field_make(2, 1);
    CHECK(is_alternate(Matrix::parse(f2, "0,1;1,0")));
    CHECK_FALSE(is_alternate(Matrix::parse(f2, "1,1;1,0")));
    CHECK(is_symmetric(Matrix::parse(f2, "1,1;1,0")));

    const FieldSpec& f3 = field_make(3, 1);
    CHECK(is_alternate(Matrix::parse(f3, "0,1;2,0")));
    CHECK_FALSE(is_alternate(Matrix::parse(f3, "0,1;1,0")));
}

TEST_CASE("row space membership and intersection") {
    const FieldSpec& f2 = field_make(2, 1);
    Matrix a = Matrix::from_rows(f2, {{1, 0, 0}, {0, 1, 0}});
    Matrix b = Matrix::from_rows(f2, {{0, 1, 0}, {0, 0, 1}});

    CHECK(in_row_space(a, row_vector(f2, {1, 1, 0})));
    CHECK_FALSE(in_row_space(a, row_vector(f2, {0, 0, 1})));

    Matrix meet = intersect_row_spaces(a, b);
    CHECK(meet.rows() == 1);
    CHECK(meet.to_text() == "0,1,0");

    Matrix c = Matrix::from_rows(f2, {{0, 0, 1}});
    CHECK(intersect_row_spaces(a, c).rows() == 0);

    CHECK(vstack(a, c).to_text() == "1,0,0;0,1,0;0,0,1");
}

TEST_CASE("intersection agrees with dimension counting on random subspaces") {
    std::mt19937_64 rng(13);
    const FieldSpec& f = field_make(3, 1);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix a = random_matrix(rng, f, 2, 4);
        Matrix b = random_matrix(rng, f, 2, 4);
        Matrix meet = intersect_row_spaces(a, b);
        CHECK(meet.rows() == rank(a) + rank(b) - rank(vstack(a, b)));
        for (int i = 0; i < meet.rows(); ++i) {
            std::vector<int> row(meet.cols());
            for (int j = 0; j < meet.cols(); ++j) row[j] = meet.at(i, j);
            Matrix v = row_vector(f, row);
            CHECK(in_row_space(a, v));
            CHECK(in_row_space(b, v));
        }
    }
}

TEST_CASE("ordering is total and consistent with equality") {
    const FieldSpec& f = field_make(3, 1);
    Matrix a = Matrix::parse(f, "0,1;1,0");
    Matrix b = Matrix::parse(f, "0,2;1,0");
    CHECK(a < b);
    CHECK_FALSE(b < a);
    CHECK_FALSE(a < a);
    CHECK(Matrix(f, 1, 4) < Matrix(f, 2, 2));  // dimensions compare first
}

}  // TEST_SUITE("matrix")
