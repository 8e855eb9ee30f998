#include "doctest.h"
#include "qlie/lie.hpp"
#include "test_helpers.hpp"

using namespace qlie;

TEST_CASE("catalog entries validate") {
    for (const char* name : {"so3", "sl2", "heis3", "abelian:3", "abelian:2"}) {
        LieAlgebra L = catalog(name);
        auto rep = validate_lie_algebra(L);
        CHECK(rep.antisymmetric);
        CHECK(rep.jacobi);
    }
    CHECK(catalog("so3").c_at(0, 1, 2) == 1);
    CHECK(catalog("sl2").c_at(1, 2, 0) == 1);  // [e,f] = h
    CHECK(is_zero(catalog("abelian:2").c));
    CHECK_THROWS_AS(catalog("e8"), UnknownCatalogEntry);
}

TEST_CASE("broken structure constants are caught") {
    // so3 with an extra antisymmetric term [e1,e2] = e1 + e3 breaks Jacobi
    LieAlgebra L = catalog("so3");
    L.c_at(0, 1, 0) = 1;
    L.c_at(1, 0, 0) = -1;
    auto rep = validate_lie_algebra(L);
    CHECK(rep.antisymmetric);
    CHECK(!rep.jacobi);
    CHECK(rep.jacobi_witness.has_value());

    // asymmetric change: antisymmetry fails, and Jacobi picks up a repeated-
    // index witness since cancellation needs antisymmetry
    LieAlgebra M = catalog("so3");
    M.c_at(0, 1, 2) = 2;
    auto rep2 = validate_lie_algebra(M);
    CHECK(!rep2.antisymmetric);
    CHECK(!rep2.jacobi);
}

TEST_CASE("rescaling one so3 constant antisymmetrically still satisfies Jacobi") {
    LieAlgebra L = catalog("so3");
    L.c_at(0, 1, 2) = 2;
    L.c_at(1, 0, 2) = -2;
    CHECK(validate_lie_algebra(L).ok());
}

TEST_CASE("killing form values") {
    Matrix K = killing_form(catalog("abelian:3"));
    CHECK(K.is_zero());

    Matrix Ksl2 = killing_form(catalog("sl2"));
    CHECK(Ksl2.at(0, 0) == 8);   // <h,h>
    CHECK(Ksl2.at(1, 2) == 4);   // <e,f>
    CHECK(Ksl2.at(2, 1) == 4);
    CHECK(Ksl2.at(1, 1) == 0);
    CHECK(Ksl2.at(2, 2) == 0);
    CHECK(Ksl2.at(0, 1) == 0);
    CHECK(Ksl2.at(0, 2) == 0);

    Matrix Kso3 = killing_form(catalog("so3"));
    CHECK(Kso3 == Rational(-2) * Matrix::identity(3));
}

TEST_CASE("killing form is symmetric and invariant") {
    for (const char* name : {"so3", "sl2", "heis3"}) {
        LieAlgebra L = catalog(name);
        Matrix K = killing_form(L);
        CHECK(K == K.transpose());
        // <[x,y],z> = <x,[y,z]> on all basis triples
        for (std::size_t i = 0; i < L.dim; ++i)
            for (std::size_t j = 0; j < L.dim; ++j)
                for (std::size_t k = 0; k < L.dim; ++k) {
                    Rational lhs = 0, rhs = 0;
                    Vec bij = L.bracket_basis(i, j), bjk = L.bracket_basis(j, k);
                    for (std::size_t m = 0; m < L.dim; ++m) {
                        lhs += bij[m] * K.at(m, k);
                        rhs += K.at(i, m) * bjk[m];
                    }
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("is_semisimple") {
    CHECK(is_semisimple(catalog("sl2")));
    CHECK(is_semisimple(catalog("so3")));
    CHECK(!is_semisimple(catalog("heis3")));
    CHECK(!is_semisimple(catalog("abelian:1")));
}

TEST_CASE("adjoint representation") {
    Representation ad = adjoint_rep(catalog("sl2"));
    CHECK(validate_representation(ad).valid);
    // rho(h) = diag(0, 2, -2) in the basis (h,e,f)
    CHECK(ad.rho[0].at(0, 0) == 0);
    CHECK(ad.rho[0].at(1, 1) == 2);
    CHECK(ad.rho[0].at(2, 2) == -2);

    CHECK(validate_representation(adjoint_rep(catalog("so3"))).valid);
    Representation zero = adjoint_rep(catalog("abelian:3"));
    for (const auto& m : zero.rho) CHECK(m.is_zero());
}

TEST_CASE("trivial representation validates at any dimension") {
    CHECK(validate_representation(trivial_rep(catalog("sl2"), 1)).valid);
    CHECK(validate_representation(trivial_rep(catalog("heis3"), 4)).valid);
}

TEST_CASE("perturbing a representation matrix is detected") {
    Representation ad = adjoint_rep(catalog("sl2"));
    ad.rho[0].at(1, 1) = 3;  // rho(h) no longer matches the relations
    auto rep = validate_representation(ad);
    CHECK(!rep.valid);
    CHECK(rep.witness.has_value());
}

TEST_CASE("adjoint rep validates iff Jacobi holds") {
    testing::Rng rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        LieAlgebra L(3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                for (std::size_t k = 0; k < 3; ++k) {
                    Rational v(rng.range(-2, 2));
                    L.c_at(i, j, k) = v;
                    L.c_at(j, i, k) = -v;
                }
        CHECK(validate_representation(adjoint_rep(L)).valid ==
              validate_lie_algebra(L).jacobi);
    }
}
