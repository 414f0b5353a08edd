#include "fixtures.hpp"

#include <doctest.h>

using namespace lieder;
using fx::q;

TEST_CASE("rational parsing and canonical form") {
    CHECK(to_string(parse_rational("4/6")) == "2/3");
    CHECK(to_string(parse_rational("-3")) == "-3");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK(to_string(parse_rational("+7/1")) == "7");
    CHECK_THROWS_AS(parse_rational("2/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("3/-4"), std::invalid_argument);
}

TEST_CASE("rank examples") {
    CHECK(rank(Matrix::identity(2)) == 2);
    CHECK(rank(Matrix(3, 4)) == 0);
    CHECK(rank(Matrix{{1, 2}, {2, 4}}) == 1);
    CHECK(rank(Matrix{{q("1/2"), q("1/3")}, {q("1/4"), q("1/6")}}) == 1);
    CHECK(rank(Matrix(0, 3)) == 0);
}

TEST_CASE("kernel basis examples") {
    CHECK(kernel_basis(Matrix::identity(2)).empty());
    const auto k = kernel_basis(Matrix{{1, -1}});
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vector{1, 1});
    const auto z = kernel_basis(Matrix(2, 3));
    REQUIRE(z.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(z[i] == basis_vector(3, i));
}

TEST_CASE("solve examples") {
    CHECK(solve(Matrix::identity(2), Vector{3, 5}) == Vector{3, 5});
    CHECK(solve(Matrix{{1, -1}}, Vector{0}) == Vector{0, 0});
    CHECK_FALSE(solve(Matrix{{1}, {1}}, Vector{1, 2}).has_value());
    CHECK_THROWS_AS(solve(Matrix::identity(2), Vector{1}), std::invalid_argument);
}

TEST_CASE("inverse") {
    const Matrix m{{2, 1}, {1, 1}};
    const auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(m * *inv == Matrix::identity(2));
    CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}).has_value());
}

TEST_CASE("linear algebra properties on random matrices") {
    fx::Gen gen(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto r = static_cast<std::size_t>(gen.integer(0, 6));
        const auto c = static_cast<std::size_t>(gen.integer(0, 6));
        Matrix m = gen.matrix(r, c);
        // force some rank deficiency
        if (r >= 2 && c > 0 && gen.integer(0, 1))
            for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 3 - m(1, j);

        const auto k = kernel_basis(m);
        CHECK(rank(m) + k.size() == c);
        CHECK(rank(m) == rank(m.transpose()));
        CHECK(rank(m) == reduced_row_echelon(m).pivots.size());
        for (const auto& v : k) CHECK(is_zero(m.apply(v)));
        if (!k.empty()) CHECK(rank(Matrix::from_columns(k, c)) == k.size());

        const Vector b = gen.vector(r);
        const auto x = solve(m, b);
        Matrix aug = m;
        aug = hstack(m, Matrix::from_columns(std::vector<Vector>{b}, r));
        if (x) {
            CHECK(m.apply(*x) == b);
        } else {
            CHECK(rank(aug) > rank(m));
        }
    }
}
