#include "doctest.h"
#include "qlie/ybe.hpp"
#include "test_helpers.hpp"

using namespace qlie;

namespace {

LieAlgebra random_antisymmetric(testing::Rng& rng, std::size_t n) {
    LieAlgebra L(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Rational v(rng.range(-2, 2));
                L.c_at(i, j, k) = v;
                L.c_at(j, i, k) = -v;
            }
    return L;
}

}  // namespace

TEST_CASE("set-theoretic YBE agrees with the left shelf law on all 2-element tables") {
    for (std::size_t coded = 0; coded < 16; ++coded) {
        std::size_t c = coded;
        Magma2 Q;
        Q.size = 2;
        Q.left.assign(2, std::vector<std::size_t>(2));
        for (std::size_t x = 0; x < 2; ++x)
            for (std::size_t y = 0; y < 2; ++y) {
                Q.left[x][y] = c % 2;
                c /= 2;
            }
        CHECK(shelf_braiding_ybe(Q).ok == check_laws(Q).left_shelf.passed());
    }
}

TEST_CASE("set-theoretic YBE on the named examples") {
    CHECK(shelf_braiding_ybe(conj_quandle(symmetric_group(3))).ok);
    CHECK(shelf_braiding_ybe(cyclic_rack(4)).ok);
    Magma2 X;
    X.size = 2;
    X.left = {{0, 1}, {1, 0}};
    SetYbeResult r = shelf_braiding_ybe(X);
    CHECK(!r.ok);
    CHECK(r.witness.has_value());
}

TEST_CASE("inverse braiding checks") {
    InverseBraidingReport r1 = inverse_braiding_checks(conj_quandle(symmetric_group(3)));
    CHECK(r1.bbar_ybe.ok);
    CHECK(r1.mutually_inverse);
    CHECK(r1.bbar_ybe_matches_right_shelf);
    CHECK(r1.inverse_matches_inverse_laws);

    InverseBraidingReport r2 = inverse_braiding_checks(reflection_quandle(5));
    CHECK(r2.bbar_ybe.ok);
    CHECK(r2.mutually_inverse);

    // left shelf with a deliberately broken right table
    Magma2 broken = cyclic_rack(3);
    (*broken.right)[0][0] = 0;  // should be 2
    InverseBraidingReport r3 = inverse_braiding_checks(broken);
    CHECK(!r3.mutually_inverse);
    CHECK(r3.inverse_matches_inverse_laws);
    CHECK(r3.bbar_ybe_matches_right_shelf);
}

TEST_CASE("linear YBE operator structure") {
    // abelian: B is the plain swap on a 9-dimensional space
    LinearYB swap = linear_ybe_operator(catalog("abelian:2"));
    CHECK(swap.N == 3);
    CHECK(swap.B.rows() == 9);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) CHECK(swap.B.at(b * 3 + a, a * 3 + b) == 1);

    // so3: u1 ⊗ u2 ↦ u2 ⊗ u1 + u0 ⊗ u3
    LinearYB so3op = linear_ybe_operator(catalog("so3"));
    std::size_t N = 4;
    std::size_t col = 1 * N + 2;
    CHECK(so3op.B.at(2 * N + 1, col) == 1);
    CHECK(so3op.B.at(0 * N + 3, col) == 1);

    // sl2 with (h,e,f) = (u1,u2,u3): u2 ⊗ u3 ↦ u3 ⊗ u2 + u0 ⊗ u1
    LinearYB sl2op = linear_ybe_operator(catalog("sl2"));
    std::size_t col2 = 2 * N + 3;
    CHECK(sl2op.B.at(3 * N + 2, col2) == 1);
    CHECK(sl2op.B.at(0 * N + 1, col2) == 1);

    // a non-antisymmetric tensor is rejected
    LieAlgebra bad = catalog("so3");
    bad.c_at(0, 1, 2) = 2;
    CHECK_THROWS_AS(linear_ybe_operator(bad), InvalidShape);
}

TEST_CASE("closed-form inverse braiding inverts B") {
    for (const char* name : {"so3", "sl2", "heis3", "abelian:3"}) {
        LinearYB yb = linear_ybe_operator(catalog(name));
        Matrix Binv = linear_braiding_inverse(yb);
        CHECK(yb.B * Binv == Matrix::identity(yb.N * yb.N));
    }
}

TEST_CASE("linear YBE holds exactly for the catalog algebras") {
    for (const char* name : {"sl2", "so3", "heis3", "abelian:3"}) {
        CHECK(linear_ybe_check(linear_ybe_operator(catalog(name))).ok);
    }
}

TEST_CASE("linear YBE fails when Jacobi fails") {
    LieAlgebra L = catalog("so3");
    L.c_at(0, 1, 0) = 1;  // [e1,e2] = e1 + e3, antisymmetrized
    L.c_at(1, 0, 0) = -1;
    REQUIRE(!validate_lie_algebra(L).jacobi);
    LinearYbeResult r = linear_ybe_check(linear_ybe_operator(L));
    CHECK(!r.ok);
    CHECK(r.witness.has_value());
}

TEST_CASE("linear YBE agrees with the Jacobi validator on random brackets") {
    testing::Rng rng(98765);
    int jacobi_true = 0;
    for (int trial = 0; trial < 100; ++trial) {
        LieAlgebra L = random_antisymmetric(rng, 3);
        bool jac = validate_lie_algebra(L).jacobi;
        if (jac) ++jacobi_true;
        CHECK(linear_ybe_check(linear_ybe_operator(L)).ok == jac);
    }
    CHECK(jacobi_true < 100);  // most random brackets fail Jacobi
}
