#include "gtable/exactla.hpp"

#include <doctest.h>

#include <random>

using namespace gtable;
using namespace gtable::la;

namespace {

Vector vec(std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.push_back(x);
    return v;
}

}  // namespace

TEST_CASE("ratio is canonical") {
    CHECK(ratio(2, 4) == ratio(1, 2));
    CHECK(ratio(2, 4).get_den() == 2);
    CHECK(ratio(3, -6) == ratio(-1, 2));
    CHECK_THROWS_AS(ratio(1, 0), DimensionError);
}

TEST_CASE("scalar strings") {
    CHECK(to_string(ratio(-3, 2)) == "-3/2");
    CHECK(to_string(Scalar(4)) == "4");
    CHECK(parse_scalar("6/4") == ratio(3, 2));
    CHECK(parse_scalar("-7") == Scalar(-7));
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_scalar("x"), ParseError);
    CHECK_THROWS_AS(parse_scalar(""), ParseError);
}

TEST_CASE("kernel of the zero matrix is everything") {
    auto k = kernel(Matrix(3, 3));
    CHECK(k.dim() == 3);
    CHECK(k == Subspace::full(3));
}

TEST_CASE("kernel of the identity is zero") { CHECK(kernel(Matrix::identity(3)).dim() == 0); }

TEST_CASE("kernel by hand row reduction") {
    Matrix m{{1, 1, 0}, {0, 0, 1}};
    auto k = kernel(m);
    REQUIRE(k.dim() == 1);
    CHECK(k == Subspace::span(3, {vec({1, -1, 0})}));
    for (const auto& v : k.basis()) CHECK(is_zero(m * v));
}

TEST_CASE("solve with the identity returns the right-hand side") {
    auto b = vec({4, -1, 7});
    auto sol = solve(Matrix::identity(3), b);
    REQUIRE(sol);
    CHECK(sol->particular == b);
    CHECK(sol->kernel.dim() == 0);
}

TEST_CASE("solve a 1x1 system") {
    auto sol = solve(Matrix{{2}}, vec({3}));
    REQUIRE(sol);
    CHECK(sol->particular[0] == ratio(3, 2));
}

TEST_CASE("inconsistent rows have no solution") {
    CHECK_FALSE(solve(Matrix{{1, 0}, {1, 0}}, vec({1, 2})).has_value());
}

TEST_CASE("coords_modulo") {
    std::vector<Vector> reps = {vec({1, 0, 0, 0}), vec({0, 1, 1, 0})};
    SUBCASE("a representative itself") {
        auto c = coords_modulo(reps[0], reps, Subspace(4));
        REQUIRE(c);
        CHECK(*c == vec({1, 0}));
    }
    auto w = Subspace::span(4, {vec({0, 0, 1, 1}), vec({1, 0, 0, 1})});
    SUBCASE("an element of W has zero coordinates") {
        auto c = coords_modulo(vec({1, 0, 1, 2}), reps, w);
        REQUIRE(c);
        CHECK(*c == vec({0, 0}));
    }
    SUBCASE("known coefficients are recovered") {
        std::mt19937_64 gen(7);
        std::uniform_int_distribution<int> d(-5, 5);
        for (int trial = 0; trial < 20; ++trial) {
            Vector z = add(scale(2, reps[0]), scale(-3, reps[1]));
            for (const auto& b : w.basis()) axpy(d(gen), b, z);
            auto c = coords_modulo(z, reps, w);
            REQUIRE(c);
            CHECK(*c == vec({2, -3}));
        }
    }
    SUBCASE("outside the span") {
        CHECK_FALSE(coords_modulo(vec({0, 1, 0, 0}), {reps[0]}, w).has_value());
    }
}

TEST_CASE("subspaces from different generators compare equal") {
    auto a = Subspace::span(3, {vec({1, 2, 3}), vec({0, 1, 1})});
    auto b = Subspace::span(3, {vec({1, 3, 4}), vec({2, 4, 6}), vec({1, 1, 2})});
    CHECK(a == b);
    CHECK(a.basis() == b.basis());
    CHECK(a.contains(vec({3, 7, 10})));
    CHECK_FALSE(a.contains(vec({0, 0, 1})));
}

TEST_CASE("reduce gives a canonical representative") {
    auto w = Subspace::span(3, {vec({1, 1, 0})});
    CHECK(w.reduce(vec({2, 0, 5})) == w.reduce(vec({0, -2, 5})));
}

TEST_CASE("large matrices take the sparse path and agree with dense elimination") {
    Matrix m(80, 90);
    for (std::size_t i = 0; i < 80; ++i) {
        m(i, i) = Scalar(long(i % 7) + 1);
        m(i, (i * 13) % 90) += ratio(long(i % 5) - 2, 3);
    }
    auto s = rref(m);
    auto d = rref_dense(m);
    CHECK(s.rref == d.rref);
    CHECK(s.pivots == d.pivots);
    CHECK(rank(m) == s.rank());
}

TEST_CASE("inverse") {
    Matrix m{{2, 1}, {1, 1}};
    CHECK(inverse(m) == Matrix{{1, -1}, {-1, 2}});
    CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), DimensionError);
}
