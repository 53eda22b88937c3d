#include <doctest.h>

#include "helpers.hpp"
#include "ltc/catalog.hpp"
#include "ltc/derivations.hpp"

using namespace ltc;
using testing::vec;

namespace {

LinearOperator random_in(const Subspace& s, std::size_t n, std::mt19937_64& rng) {
    Vector v = zero_vector(n * n);
    for (const auto& b : s.basis_vectors()) axpy(v, Rational(static_cast<long>(rng() % 7) - 3), b);
    return operator_from_vector(v, n);
}

// On T2 (basis e11, e12, e22): e11 -> I, e12 -> 0, e22 -> -I.
LinearOperator central_split() {
    LinearOperator op(3, 3);
    op(0, 0) = op(2, 0) = 1;
    op(0, 2) = op(2, 2) = -1;
    return op;
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::TheoremViolation;
}

}  // namespace

TEST_CASE("generalized Lie triple derivations via centralizers") {
    Gma m2 = full_matrix(2);
    const auto& alg = m2.algebra();
    LinearOperator xi = inner_derivation(alg, alg.basis(1));
    GltdCorrespondence same = check_gltd_correspondence(alg, xi, xi);
    CHECK(same.holds);
    CHECK(same.agree());

    GltdCorrespondence shifted = check_gltd_correspondence(alg, xi + LinearOperator::identity(4), xi);
    CHECK(shifted.holds);
    CHECK(shifted.agree());

    LinearOperator swap(4, 4);
    swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1;
    GltdCorrespondence off = check_gltd_correspondence(alg, xi + swap, xi);
    CHECK_FALSE(off.holds);
    CHECK_FALSE(off.direct_holds);
    CHECK(off.witness.has_value());

    CHECK(kind_of([&] { check_gltd_correspondence(alg, xi, swap); }) == ErrorKind::NotLTD);
}

TEST_CASE("property: the correspondence on random operators") {
    std::mt19937_64 rng(61);
    for (const char* name : {"upper_triangular(3)", "full_matrix(2)", "dual_tri"}) {
        CatalogEntry entry = catalog_entry(name);
        const auto& alg = entry.algebra;
        const std::size_t n = alg.dim();
        Subspace ltd = solve_identity_space(alg, IdentityKind::LieTripleDerivation);
        Subspace ltc = solve_identity_space(alg, IdentityKind::LieTripleCentralizer);
        int members = 0, others = 0;
        for (int i = 0; i < 50; ++i) {
            LinearOperator xi = random_in(ltd, n, rng);
            LinearOperator lambda = xi + (i % 2 == 0 ? random_in(ltc, n, rng) : testing::random_matrix(rng, n, n));
            GltdCorrespondence r = check_gltd_correspondence(alg, lambda, xi);
            CHECK(r.agree());
            CHECK(r.holds == ltc.contains(vectorize(lambda - xi)));
            (r.holds ? members : others)++;
        }
        CHECK(members >= 25);
        CHECK(others > 0);
    }
}

TEST_CASE("hypothesis report on T2") {
    Gma t2 = upper_triangular(2);
    Thm41HypothesisReport r = check_thm41_hypotheses(t2);
    CHECK_FALSE(r.a_is_triple_span);
    CHECK(r.pi_a_is_center_a);
    CHECK(r.pi_b_is_center_b);
    CHECK(r.a_commuting_central);
    CHECK(r.iv());
    CHECK_FALSE(r.a_no_central_ideal);
    CHECK(r.c == Established::Holds);
    REQUIRE(r.m0);
    CHECK(*r.m0 == vec({1}));
    CHECK(r.satisfied());
    CHECK(std::string(to_string(Established::NotEstablished)) != to_string(Established::Holds));

    Thm41HypothesisReport z = check_thm41_hypotheses(t2, {vec({0})});
    CHECK(z.c == Established::NotEstablished);
    CHECK(z.m0_tested == 1);
    CHECK_FALSE(z.m0);
}

TEST_CASE("hypothesis report on larger algebras") {
    Thm41HypothesisReport m3 = check_thm41_hypotheses(full_matrix(3, 2));
    CHECK_FALSE(m3.a_is_triple_span);  // [[M2,M2],M2] is sl2
    CHECK(m3.pi_a_is_center_a);
    CHECK(m3.satisfied());
    CHECK(check_thm41_hypotheses(full_matrix(2)).satisfied());
    CHECK(kind_of([&] { check_thm41_hypotheses(example_1_2().u); }) == ErrorKind::NotUnital);
}

TEST_CASE("commuting-central elements and central vanishing maps") {
    StructureConstants m2 = full_matrix(2).algebra();
    CHECK(subspace_equal(commuting_central(m2), center(m2)));
    CHECK(commuting_central(dual_numbers()).is_full());

    StructureConstants t2 = upper_triangular(2).algebra();
    Subspace cv = central_vanishing_space(t2);
    CHECK(cv.dim() == 2);
    CHECK(cv.contains(vectorize(central_split())));
    CHECK(central_vanishing_space(m2).dim() == 1);
}

TEST_CASE("decomposing a Lie triple derivation on T2") {
    Gma t2 = upper_triangular(2);
    const auto& alg = t2.algebra();
    LinearOperator ad = inner_derivation(alg, alg.basis(0));
    LinearOperator xi = ad + central_split();
    auto r = decompose_ltd(t2, xi);
    REQUIRE(std::holds_alternative<LtdDecomposition>(r));
    const auto& d = std::get<LtdDecomposition>(r);
    CHECK(d.delta == ad);
    CHECK(d.d.is_zero());
    CHECK(d.gamma == central_split());
    CHECK(d.transcript.passed());

    CHECK(kind_of([&] { decompose_ltd(t2, LinearOperator::identity(3)); }) == ErrorKind::NotLTD);
}

TEST_CASE("decompositions over whole derivation spaces") {
    for (const char* name : {"upper_triangular(3)", "full_matrix(2)", "full_matrix(3,2)"}) {
        CatalogEntry entry = catalog_entry(name);
        const Gma& g = *entry.gma;
        REQUIRE(check_thm41_hypotheses(g).satisfied());
        Subspace der = solve_identity_space(g, IdentityKind::Derivation);
        Subspace sj = solve_identity_space(g, IdentityKind::SingularJordanDerivation);
        Subspace cv = central_vanishing_space(g.algebra());
        for (const auto& xi : operators_of(solve_identity_space(g, IdentityKind::LieTripleDerivation), g.dim())) {
            auto r = decompose_ltd(g, xi);
            REQUIRE(std::holds_alternative<LtdDecomposition>(r));
            const auto& d = std::get<LtdDecomposition>(r);
            CHECK(d.delta + d.d + d.gamma == xi);
            CHECK(der.contains(vectorize(d.delta)));
            CHECK(sj.contains(vectorize(d.d)));
            CHECK(cv.contains(vectorize(d.gamma)));
        }
    }
}

TEST_CASE("generalized decomposition") {
    Gma t2 = upper_triangular(2);
    const auto& alg = t2.algebra();
    LinearOperator xi = inner_derivation(alg, alg.basis(0)) + central_split();
    LinearOperator lambda = xi + Rational(2) * LinearOperator::identity(3);
    auto r = decompose_generalized_ltd(t2, lambda, xi);
    REQUIRE(std::holds_alternative<GltdDecomposition>(r));
    const auto& g = std::get<GltdDecomposition>(r);
    CHECK(g.lambda == Rational(2) * t2.unit());
    CHECK(g.within_hypotheses);
    CHECK(g.transcript.passed());
    CHECK(g.delta + g.d + g.psi + left_multiplication_operator(alg, g.lambda) == lambda);
    CHECK(central_vanishing_space(alg).contains(vectorize(g.psi)));

    LinearOperator bad = xi + LinearOperator(3, 3);
    bad(1, 0) = 1;  // e11 -> e12 component
    CHECK(kind_of([&] { decompose_generalized_ltd(t2, bad, xi); }) == ErrorKind::NotGLTD);
}

TEST_CASE("property: generalized decompositions of random members") {
    std::mt19937_64 rng(62);
    for (const char* name : {"upper_triangular(3)", "full_matrix(3,2)"}) {
        CatalogEntry entry = catalog_entry(name);
        const Gma& g = *entry.gma;
        const std::size_t n = g.dim();
        Subspace ltd = solve_identity_space(g, IdentityKind::LieTripleDerivation);
        Subspace ltc = solve_identity_space(g, IdentityKind::LieTripleCentralizer);
        for (int i = 0; i < 5; ++i) {
            LinearOperator xi = random_in(ltd, n, rng);
            LinearOperator lambda = xi + random_in(ltc, n, rng);
            auto r = decompose_generalized_ltd(g, lambda, xi);
            REQUIRE(std::holds_alternative<GltdDecomposition>(r));
            const auto& d = std::get<GltdDecomposition>(r);
            CHECK(d.delta + d.d + d.psi + left_multiplication_operator(g.algebra(), d.lambda) == lambda);
            CHECK(center(g.algebra()).contains(d.lambda));
        }
    }
}
