#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "ltc/error.hpp"

using namespace ltc;
using testing::mat;
using testing::vec;

TEST_CASE("rref of small matrices") {
    CHECK(rref(mat({{2, 4}, {1, 2}})) == mat({{1, 2}, {0, 0}}));
    CHECK(rref(Matrix::identity(3)) == Matrix::identity(3));
    CHECK(rref(mat({{0, 1}, {1, 0}})) == Matrix::identity(2));
    CHECK(rref(mat({{0, 0, 3}, {0, 2, 1}})) == mat({{0, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("kernel examples") {
    Subspace k = kernel(mat({{1, 1}}));
    CHECK(k.dim() == 1);
    CHECK(k.contains(vec({1, -1})));
    CHECK(kernel(Matrix::identity(2)).is_zero());

    Subspace k2 = kernel(mat({{1, 2}, {2, 4}}));
    REQUIRE(k2.dim() == 1);
    CHECK(k2.contains(vec({-2, 1})));
    // canonical echelon form: leading entry 1
    CHECK(k2.basis_vector(0) == Vector{Rational(1), Rational(-1, 2)});
}

TEST_CASE("solve returns the echelon particular solution") {
    auto s = solve(Matrix::identity(2), vec({3, 4}));
    REQUIRE(s);
    CHECK(s->particular == vec({3, 4}));
    CHECK(s->homogeneous.is_zero());

    auto t = solve(mat({{1, 1}}), vec({2}));
    REQUIRE(t);
    CHECK(t->particular == vec({2, 0}));
    CHECK(t->homogeneous.contains(vec({1, -1})));

    CHECK_FALSE(solve(mat({{1}, {1}}), vec({1, 2})));
}

TEST_CASE("subspace lattice examples") {
    Subspace e1 = Subspace::span(2, {vec({1, 0})});
    Subspace e2 = Subspace::span(2, {vec({0, 1})});
    Subspace diag = Subspace::span(2, {vec({1, 1})});
    CHECK(subspace_sum(e1, e2).is_full());
    CHECK(subspace_intersect(diag, e1).is_zero());
    CHECK(subspace_contains(Subspace::full(2), diag));
    CHECK_FALSE(subspace_contains(e1, diag));
    CHECK(subspace_equal(subspace_sum(e1, diag), Subspace::full(2)));
    CHECK_THROWS_AS(subspace_sum(e1, Subspace::full(3)), Error);
}

TEST_CASE("coordinates against the echelon basis") {
    Subspace s = Subspace::span(3, {vec({1, 2, 0}), vec({0, 1, 1})});
    Vector v = vec({2, 5, 1});
    Vector c = s.coordinates(v);
    Vector back = zero_vector(3);
    for (std::size_t i = 0; i < c.size(); ++i) axpy(back, c[i], s.basis_vector(i));
    CHECK(back == v);
    CHECK_THROWS(s.coordinates(vec({0, 0, 1})));
}

TEST_CASE("inverse") {
    Matrix m = mat({{2, 1}, {1, 1}});
    CHECK(inverse(m) * m == Matrix::identity(2));
    CHECK_THROWS_AS(inverse(mat({{1, 2}, {2, 4}})), Error);
}

TEST_CASE("property: rref idempotent, rank-nullity, kernel vectors annihilated") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        Matrix m = testing::random_matrix(rng, rows, cols);
        if (trial % 3 == 0 && rows > 1) m.set_block(rows - 1, 0, m.block(0, 0, 1, cols));  // force dependence
        Matrix r = rref(m);
        CHECK(rref(r) == r);
        Subspace k = kernel(m);
        CHECK(k.dim() + rank(m) == cols);
        for (const auto& v : k.basis_vectors()) CHECK(is_zero(m * v));
        CHECK(Subspace::row_space(m) == Subspace::row_space(r));
    }
}

TEST_CASE("property: canonical bases and the modular law") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        Matrix a = testing::random_matrix(rng, 1 + rng() % n, n, 1);
        Matrix b = testing::random_matrix(rng, 1 + rng() % n, n, 1);
        Subspace u = Subspace::row_space(a), v = Subspace::row_space(b);
        Subspace sum = subspace_sum(u, v), meet = subspace_intersect(u, v);
        CHECK(sum.dim() + meet.dim() == u.dim() + v.dim());
        CHECK(subspace_contains(u, meet));
        CHECK(subspace_contains(v, meet));
        CHECK(subspace_contains(sum, u));

        // same space from a shuffled, rescaled generating set gives the same grid
        std::vector<Vector> gens = u.basis_vectors();
        std::reverse(gens.begin(), gens.end());
        for (auto& g : gens) g = Rational(-3, 2) * g;
        if (gens.size() > 1) gens[0] = gens[0] + gens[1];
        Subspace again = Subspace::span(n, gens);
        CHECK(again.basis() == u.basis());
        CHECK(subspace_equal(again, u));
    }
}

TEST_CASE("property: incremental reducer matches batch elimination") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        Matrix m = testing::random_matrix(rng, rows, cols);
        RowReducer rr(cols);
        for (std::size_t r = 0; r < rows; ++r) rr.add(m.row_vector(r));
        CHECK(rr.rank() == rank(m));
        CHECK(rr.kernel() == kernel(m));
        CHECK(rr.row_space() == Subspace::row_space(m));
    }
}
