#include <doctest.h>

#include "matgeo/field.hpp"

using namespace matgeo;

TEST_SUITE("field") {

TEST_CASE("primality and irreducibility screens") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));

    CHECK(poly_irreducible({1, 1, 1}, 2));        // x^2+x+1 over GF(2)
    CHECK_FALSE(poly_irreducible({1, 0, 1}, 2));  // x^2+1 = (x+1)^2 over GF(2)
    CHECK(poly_irreducible({1, 0, 1}, 3));        // x^2+1 over GF(3)
    CHECK_FALSE(poly_irreducible({4, 0, 1}, 5));  // x^2-1 = (x-1)(x+1) over GF(5)
    CHECK(poly_irreducible({1, 1, 0, 1}, 2));     // x^3+x+1 over GF(2)
}

TEST_CASE("prime field arithmetic is plain modular arithmetic") {
    const FieldSpec& f = field_make(7, 1);
    CHECK(f.order() == 7);
    for (Elt a = 0; a < 7; ++a)
        for (Elt b = 0; b < 7; ++b) {
            CHECK(f.add(a, b) == (a + b) % 7);
            CHECK(f.mul(a, b) == (a * b) % 7);
        }
    CHECK(f.inv(3) == 5);
    CHECK(f.div(6, 2) == 3);
    CHECK(f.neg(2) == 5);
    CHECK_THROWS_AS((void)f.inv(0), Error);
}

TEST_CASE("extension field tables satisfy the field laws") {
    const FieldSpec& f = field_make(2, 3);
    int q = f.order();
    for (Elt a = 0; a < q; ++a) {
        CHECK(f.add(a, 0) == a);
        CHECK(f.mul(a, 1) == a);
        CHECK(f.add(a, f.neg(a)) == 0);
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
        for (Elt b = 0; b < q; ++b) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            for (Elt c = 0; c < q; ++c) {
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
            }
        }
    }
}

TEST_CASE("residue polynomial reductions hit their known values") {
    // Element 'p' encodes the polynomial x; the products below are the
    // modulus reductions worked out by hand.
    CHECK(field_make(2, 2).mul(2, 2) == 3);   // x^2 = x+1      in GF(4)
    CHECK(field_make(2, 3).pow(2, 3) == 3);   // x^3 = x+1      in GF(8)
    CHECK(field_make(3, 2).mul(3, 3) == 2);   // x^2 = 2        in GF(9)
    CHECK(field_make(2, 4).pow(2, 4) == 3);   // x^4 = x+1      in GF(16)
    CHECK(field_make(5, 2).mul(5, 5) == 3);   // x^2 = 3        in GF(25)
    CHECK(field_make(3, 3).pow(3, 3) == 5);   // x^3 = x+2      in GF(27)
}

TEST_CASE("multiplicative order divides q-1") {
    const std::vector<std::pair<int, int>> fields = {{2, 2}, {3, 2}, {2, 4}, {5, 2}, {3, 3}};
    for (auto [p, k] : fields) {
        const FieldSpec& f = field_make(p, k);
        for (Elt a = 1; a < f.order(); ++a) CHECK(f.pow(a, f.order() - 1) == 1);
    }
}

TEST_CASE("arith dispatches to the four binary operations") {
    const FieldSpec& f = field_make(3, 1);
    CHECK(f.arith(FieldOp::Add, 1, 2) == 0);
    CHECK(f.arith(FieldOp::Sub, 1, 2) == 2);
    CHECK(f.arith(FieldOp::Mul, 2, 2) == 1);
    CHECK(f.arith(FieldOp::Div, 1, 2) == 2);
    CHECK(f.arith(FieldOp::Neg, 1) == 2);
    CHECK(f.arith(FieldOp::Inv, 2) == 2);
}

TEST_CASE("field construction rejects bad parameters") {
    CHECK_THROWS_AS(field_make(4, 1), Error);    // p not prime
    CHECK_THROWS_AS(field_make(2, 9), Error);    // order 512 over the cap
    CHECK_THROWS_AS(field_make(7, 2), Error);    // no modulus tabulated
    CHECK_THROWS_AS(field_make(2, 4, 8), Error); // explicit cap below the order
}

TEST_CASE("mixing elements of different fields is caught") {
    const FieldSpec& f3 = field_make(3, 1);
    CHECK_THROWS_AS((void)f3.add(1, 5), Error);
}

TEST_CASE("frobenius involution squares to the identity") {
    const FieldSpec& f9 = field_make(3, 2);
    Involution frob(f9, InvolutionKind::Frobenius);
    for (Elt a = 0; a < f9.order(); ++a) {
        CHECK(frob(frob(a)) == a);
        for (Elt b = 0; b < f9.order(); ++b) {
            CHECK(frob(f9.add(a, b)) == f9.add(frob(a), frob(b)));
            CHECK(frob(f9.mul(a, b)) == f9.mul(frob(a), frob(b)));
        }
    }
    CHECK(frob.fixed_elements() == std::vector<Elt>{0, 1, 2});
    CHECK_THROWS_AS(Involution(field_make(2, 3), InvolutionKind::Frobenius), Error);
}

TEST_CASE("order-16 frobenius fixes exactly the order-4 subfield") {
    Involution frob(field_make(2, 4), InvolutionKind::Frobenius);
    CHECK(frob.fixed_elements() == std::vector<Elt>{0, 1, 6, 7});
}

TEST_CASE("restriction validators split as designed") {
    auto restr = [](int p, int k, InvolutionKind kind) {
        return Involution(field_make(p, k), kind).check_restrictions();
    };
    CHECK(restr(5, 1, InvolutionKind::Identity).both());
    CHECK(restr(2, 4, InvolutionKind::Frobenius).both());

    auto r3 = restr(3, 1, InvolutionKind::Identity);
    CHECK_FALSE(r3.fixed_field_large_enough);  // exactly three fixed elements
    CHECK(r3.not_identity_in_char2);

    auto r4id = restr(2, 2, InvolutionKind::Identity);
    CHECK(r4id.fixed_field_large_enough);
    CHECK_FALSE(r4id.not_identity_in_char2);

    auto r4frob = restr(2, 2, InvolutionKind::Frobenius);
    CHECK_FALSE(r4frob.fixed_field_large_enough);  // fixed field is GF(2)
    CHECK(r4frob.not_identity_in_char2);
}

}  // TEST_SUITE("field")
