#include <doctest.h>

#include "helpers.hpp"
#include "ltc/catalog.hpp"

using namespace ltc;
using testing::vec;

namespace {

StructureConstants nilpotent_a() {
    std::vector<Rational> t(27);
    t[(0 * 3 + 1) * 3 + 2] = 1;
    return StructureConstants(3, t, {"u1", "u2", "u3"});
}

}  // namespace

TEST_CASE("products in the nilpotent three-dimensional algebra") {
    StructureConstants a = nilpotent_a();
    CHECK(a.multiply(a.basis(0), a.basis(1)) == a.basis(2));
    CHECK(is_zero(a.multiply(a.basis(1), a.basis(0))));
    CHECK(is_zero(a.multiply(vec({1, 2, 3}), zero_vector(3))));
    CHECK_THROWS_AS(a.multiply(vec({1, 2}), vec({1, 2, 3})), Error);
}

TEST_CASE("unit detection") {
    StructureConstants t2 = upper_triangular(2).algebra();
    auto u = find_unit(t2);
    REQUIRE(u);
    CHECK(*u == vec({1, 0, 1}));  // e11 + e22 in the order e11, e12, e22
    CHECK_FALSE(find_unit(nilpotent_a()));
    CHECK(find_unit(rationals()) == vec({1}));
}

TEST_CASE("brackets") {
    StructureConstants t2 = upper_triangular(2).algebra();
    CHECK(t2.commutator(t2.basis(0), t2.basis(1)) == t2.basis(1));
    StructureConstants m2 = full_matrix(2).algebra();
    std::mt19937_64 rng(5);
    auto rnd = [&] {
        Vector v(4);
        for (auto& q : v) q = static_cast<long>(rng() % 9) - 4;
        return v;
    };
    for (int i = 0; i < 100; ++i) {
        Vector x = rnd(), y = rnd(), z = rnd();
        CHECK(is_zero(m2.double_commutator(x, x, z)));
        CHECK(m2.double_commutator(x, y, z) ==
              m2.jordan_product(x, m2.jordan_product(y, z)) - m2.jordan_product(y, m2.jordan_product(x, z)));
    }
}

TEST_CASE("centers") {
    StructureConstants m2 = full_matrix(2).algebra();
    Subspace z = center(m2);
    CHECK(z.dim() == 1);
    CHECK(z.contains(*find_unit(m2)));
    CHECK(center(upper_triangular(2).algebra()).dim() == 1);
    CHECK(center(example_1_2().u.algebra()).dim() == 4);
}

TEST_CASE("commutants") {
    StructureConstants m2 = full_matrix(2).algebra();  // order e11, e12, e21, e22
    CHECK(commutant(m2, Subspace(4)).is_full());
    CHECK(commutant(m2, Subspace::full(4)) == center(m2));
    Subspace c = commutant(m2, Subspace::span(4, {m2.basis(1)}));
    CHECK(c == Subspace::span(4, {vec({1, 0, 0, 1}), vec({0, 1, 0, 0})}));
}

TEST_CASE("double commutator spans") {
    StructureConstants m2 = full_matrix(2).algebra();
    Subspace d = double_commutator_span(m2);
    CHECK(d.dim() == 3);
    CHECK_FALSE(d.contains(*find_unit(m2)));
    CHECK(double_commutator_span(example_1_2().u.algebra()).is_zero());
    StructureConstants t2 = upper_triangular(2).algebra();
    CHECK(double_commutator_span(t2) == Subspace::span(3, {t2.basis(1)}));
}

TEST_CASE("largest central ideals") {
    CHECK(largest_central_ideal(full_matrix(2).algebra()).is_zero());
    CHECK(largest_central_ideal(rationals()).is_full());
    StructureConstants a = nilpotent_a();
    CHECK(largest_central_ideal(a) == Subspace::span(3, {a.basis(2)}));
}

TEST_CASE("associativity is checked at construction") {
    // e1 e1 = e2, e2 e1 = e1, everything else zero: (e1 e1) e1 = e1 but e1 (e1 e1) = 0
    std::vector<Rational> t(8);
    t[(0 * 2 + 0) * 2 + 1] = 1;
    t[(1 * 2 + 0) * 2 + 0] = 1;
    try {
        StructureConstants bad(2, t);
        FAIL("accepted a non-associative table");
    } catch (const AssociativityError& e) {
        CHECK(e.kind() == ErrorKind::NotAssociative);
        auto [i, j, k] = e.triple();
        CHECK(i < 2);
        CHECK(j < 2);
        CHECK(k < 2);
    }
    CHECK_THROWS_AS(StructureConstants(0, {}), Error);
    CHECK_THROWS_AS(StructureConstants(2, std::vector<Rational>(7)), Error);
}

TEST_CASE("content hash") {
    StructureConstants a = full_matrix(2).algebra();
    CHECK(a.content_hash() == full_matrix(2).algebra().content_hash());
    CHECK(a.content_hash().size() == 64);
    CHECK(a.content_hash() != upper_triangular(2).algebra().content_hash());
}

TEST_CASE("sums and tensor products") {
    StructureConstants s = direct_sum(rationals(), upper_triangular(2).algebra());
    CHECK(s.dim() == 4);
    CHECK(center(s).dim() == 2);
    StructureConstants t = tensor_product(full_matrix(2).algebra(), dual_numbers());
    CHECK(t.dim() == 8);
    CHECK(center(t).dim() == 2);
    CHECK(find_unit(t));
}

TEST_CASE("property: center inside commutants, commutant antitone, central ideal invariant") {
    std::mt19937_64 rng(21);
    for (const auto& entry : builtin_catalog()) {
        const StructureConstants& alg = entry.algebra;
        const std::size_t n = alg.dim();
        Subspace z = center(alg);
        Matrix gens = testing::random_matrix(rng, 2, n, 1);
        Subspace small = Subspace::span(n, {gens.row_vector(0)});
        Subspace big = Subspace::row_space(gens);
        CHECK(subspace_contains(commutant(alg, small), z));
        CHECK(subspace_contains(commutant(alg, small), commutant(alg, big)));

        Subspace ideal = largest_central_ideal(alg);
        CHECK(subspace_contains(z, ideal));
        for (const auto& v : ideal.basis_vectors())
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(ideal.contains(alg.multiply(alg.basis(i), v)));
                CHECK(ideal.contains(alg.multiply(v, alg.basis(i))));
            }
    }
}

TEST_CASE("property: double commutator span follows a change of basis") {
    std::mt19937_64 rng(22);
    StructureConstants m2 = full_matrix(2).algebra();
    for (int trial = 0; trial < 5; ++trial) {
        Matrix p = testing::random_matrix(rng, 4, 4);
        if (rank(p) < 4) continue;
        StructureConstants moved = change_basis(m2, p);
        Subspace original = double_commutator_span(m2);
        Subspace transformed = double_commutator_span(moved);
        CHECK(transformed.dim() == original.dim());
        for (const auto& v : transformed.basis_vectors()) CHECK(original.contains(p * v));
        CHECK(center(moved).dim() == 1);
    }
}
