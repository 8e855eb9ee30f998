#include "doctest.h"
#include "qlie/matrix.hpp"
#include "test_helpers.hpp"

using namespace qlie;

TEST_CASE("rank of small matrices") {
    CHECK(rank(Matrix::identity(2)) == 2);
    CHECK(rank(Matrix::zero(2, 2)) == 0);

    Matrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    CHECK(rank(m) == 1);  // second row is twice the first
}

TEST_CASE("kernel_basis") {
    CHECK(kernel_basis(Matrix::zero(3, 3)).size() == 3);
    CHECK(kernel_basis(Matrix::identity(3)).empty());

    Matrix m(1, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    // proportional to (1, -1)
    CHECK(ker[0][0] == -ker[0][1]);
    CHECK(ker[0][0] != 0);
}

TEST_CASE("solve_linear") {
    Vec b{Rational(3), Rational(-7)};
    auto x = solve_linear(Matrix::identity(2), b);
    REQUIRE(x);
    CHECK(*x == b);

    Matrix u(1, 2);
    u.at(0, 0) = 1;
    u.at(0, 1) = 1;
    auto y = solve_linear(u, Vec{Rational(0)});
    REQUIRE(y);
    CHECK(u.apply(*y) == Vec{Rational(0)});

    Matrix v(2, 1);
    v.at(0, 0) = 1;
    v.at(1, 0) = 1;
    CHECK(!solve_linear(v, Vec{Rational(1), Rational(2)}));  // inconsistent
}

TEST_CASE("rank-nullity and solve consistency on random matrices") {
    testing::Rng rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
        Matrix m = testing::random_matrix(rng, r, c);
        CHECK(rank(m) + kernel_basis(m).size() == c);
        for (const auto& v : kernel_basis(m)) CHECK(is_zero(m.apply(v)));

        Vec b(r);
        for (auto& x : b) x = Rational(rng.range(-3, 3));
        auto sol = solve_linear(m, b);
        if (sol) {
            CHECK(m.apply(*sol) == b);
        } else {
            // inconsistent iff rank([m|b]) > rank(m)
            CHECK(rank(m.hcat(Matrix::from_columns({b}, r))) == rank(m) + 1);
        }
    }
}

TEST_CASE("inverse") {
    testing::Rng rng(999);
    int invertible_seen = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Matrix m = testing::random_matrix(rng, 4, 4);
        auto inv = inverse(m);
        if (rank(m) < 4) {
            CHECK(!inv);
            continue;
        }
        ++invertible_seen;
        REQUIRE(inv);
        CHECK(m * *inv == Matrix::identity(4));
        CHECK(*inv * m == Matrix::identity(4));
    }
    CHECK(invertible_seen > 10);
}

TEST_CASE("kron dimensions and identity") {
    Matrix a = Matrix::identity(2), b = Matrix::identity(3);
    CHECK(kron(a, b) == Matrix::identity(6));
}

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("7/3") == Rational(7, 3));
    CHECK(parse_rational("-2/6") == Rational(-1, 3));
    CHECK(parse_rational("5") == Rational(5));
    CHECK(format_rational(Rational(-1, 3)) == "-1/3");
    CHECK(format_rational(Rational(4)) == "4");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}
