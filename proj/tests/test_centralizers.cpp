#include <doctest.h>

#include "helpers.hpp"
#include "oracle.hpp"
#include "ltc/blocks.hpp"
#include "ltc/catalog.hpp"
#include "ltc/identities.hpp"

using namespace ltc;
using testing::vec;

namespace {

const std::vector<std::pair<IdentityKind, oracle::Kind>> kinds = {
    {IdentityKind::LieCentralizer, oracle::Kind::lc},
    {IdentityKind::LieTripleCentralizer, oracle::Kind::ltc},
    {IdentityKind::JordanCentralizer, oracle::Kind::jc},
    {IdentityKind::Derivation, oracle::Kind::der},
    {IdentityKind::LieDerivation, oracle::Kind::lieder},
    {IdentityKind::JordanDerivation, oracle::Kind::jder},
    {IdentityKind::LieTripleDerivation, oracle::Kind::ltd},
};

oracle::Table table_of(const StructureConstants& alg) {
    oracle::Table t;
    t.n = static_cast<int>(alg.dim());
    t.c = alg.flat_table();
    return t;
}

LinearOperator random_in(const Subspace& s, std::size_t n, std::mt19937_64& rng) {
    Vector v = zero_vector(n * n);
    for (const auto& b : s.basis_vectors()) axpy(v, Rational(static_cast<long>(rng() % 7) - 3), b);
    return operator_from_vector(v, n);
}

// phi(e11) = p e11 + q e22, phi(e12) = t e12, phi(e22) = r e11 + s e22 on T2.
LinearOperator t2_family(long p, long q, long r, long s, long t) {
    LinearOperator op(3, 3);
    op(0, 0) = p;
    op(2, 0) = q;
    op(1, 1) = t;
    op(0, 2) = r;
    op(2, 2) = s;
    return op;
}

}  // namespace

TEST_CASE("solution dimensions agree with the reference elimination") {
    std::vector<std::pair<std::string, oracle::Table>> cases = {
        {"T2", oracle::matrix_units(2, true)},
        {"T3", oracle::matrix_units(3, true)},
        {"M2", oracle::matrix_units(2, false)},
        {"M3", oracle::matrix_units(3, false)},
    };
    std::vector<StructureConstants> algebras = {upper_triangular(2).algebra(), upper_triangular(3).algebra(),
                                                full_matrix(2).algebra(), full_matrix(3).algebra()};
    for (std::size_t c = 0; c < cases.size(); ++c)
        for (const auto& [kind, ok] : kinds) {
            CAPTURE(cases[c].first);
            CAPTURE(short_name(kind));
            CHECK(solve_identity_space(algebras[c], kind).dim() ==
                  static_cast<std::size_t>(oracle::solution_dim(cases[c].second, ok)));
        }
}

TEST_CASE("dimensions for 2x2 matrices over the nilpotent algebra") {
    oracle::Table t = oracle::two_by_two(oracle::nilpotent_three());
    StructureConstants alg = example_1_2().u.algebra();
    CHECK(oracle::center_dim(t) == 4);
    CHECK(oracle::rank_of(oracle::double_commutators(t), t.n) == 0);
    for (auto kind : {oracle::Kind::lc, oracle::Kind::ltc, oracle::Kind::der}) {
        IdentityKind ik = kind == oracle::Kind::lc    ? IdentityKind::LieCentralizer
                          : kind == oracle::Kind::ltc ? IdentityKind::LieTripleCentralizer
                                                      : IdentityKind::Derivation;
        CHECK(solve_identity_space(alg, ik).dim() == static_cast<std::size_t>(oracle::solution_dim(t, kind)));
    }
    CHECK(solve_identity_space(alg, IdentityKind::LieTripleCentralizer).dim() == 144);
    CHECK(solve_identity_space(alg, IdentityKind::LieCentralizer).dim() == 33);
}

TEST_CASE("random contexts agree with the reference elimination") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 6; ++i) {
        Gma g = random_morita_context(rng);
        oracle::Table t = table_of(g.algebra());
        for (auto [kind, ok] : {kinds[1], kinds[3], kinds[6]})
            CHECK(solve_identity_space(g.algebra(), kind).dim() ==
                  static_cast<std::size_t>(oracle::solution_dim(t, ok)));
    }
}

TEST_CASE("centralizer spaces contain the identity, derivation spaces do not") {
    for (const auto& entry : builtin_catalog()) {
        const auto& alg = entry.algebra;
        Vector id = vectorize(LinearOperator::identity(alg.dim()));
        CAPTURE(entry.name);
        CHECK(solve_identity_space(alg, IdentityKind::LieCentralizer).contains(id));
        CHECK(solve_identity_space(alg, IdentityKind::LieTripleCentralizer).contains(id));
        CHECK(solve_identity_space(alg, IdentityKind::JordanCentralizer).contains(id));
        if (find_unit(alg)) CHECK_FALSE(solve_identity_space(alg, IdentityKind::Derivation).contains(id));
    }
}

TEST_CASE("the swap on the nilpotent example is a Lie triple centralizer only") {
    Example12 ex = example_1_2();
    const auto& alg = ex.u.algebra();
    CHECK(is_identity_member(alg, IdentityKind::LieTripleCentralizer, ex.phi).holds);
    Membership lc = is_identity_member(alg, IdentityKind::LieCentralizer, ex.phi);
    CHECK_FALSE(lc.holds);
    REQUIRE(lc.witness);
    CHECK(lc.witness->lhs != lc.witness->rhs);
}

TEST_CASE("block decomposition of simple operators") {
    Gma m2 = full_matrix(2);
    BlockDecomposition d = block_decompose(m2, LinearOperator::identity(4));
    CHECK(d.alpha1() == LinearOperator::identity(1));
    CHECK(d.beta4() == LinearOperator::identity(1));
    CHECK(d.tau2() == LinearOperator::identity(1));
    CHECK(d.gamma3() == LinearOperator::identity(1));
    CHECK(d.alpha4().is_zero());
    CHECK(d.map(Block::M, Block::N).is_zero());
    CHECK(d.reassemble(m2) == LinearOperator::identity(4));
    CHECK(verify_thm31_conditions(m2, d).passed());

    // e12 <-> e21 moves M into N
    LinearOperator swap(4, 4);
    swap(0, 0) = 1;
    swap(3, 3) = 1;
    swap(2, 1) = 1;
    swap(1, 2) = 1;
    BlockDecomposition s = block_decompose(m2, swap);
    CHECK(s.map(Block::M, Block::N) == LinearOperator::identity(1));
    CheckReport r = verify_thm31_conditions(m2, s);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(is_identity_member(m2, IdentityKind::LieTripleCentralizer, swap).holds);
}

TEST_CASE("a three parameter family on T2") {
    Gma t2 = upper_triangular(2);
    Subspace ltc = solve_identity_space(t2, IdentityKind::LieTripleCentralizer);
    CHECK(ltc.dim() == 3);
    std::mt19937_64 rng(42);
    for (int i = 0; i < 30; ++i) {
        long p = static_cast<long>(rng() % 11) - 5, q = static_cast<long>(rng() % 11) - 5,
             r = static_cast<long>(rng() % 11) - 5;
        long t = p - q, s = p - q + r;
        LinearOperator good = t2_family(p, q, r, s, t);
        CHECK(ltc.contains(vectorize(good)));
        CHECK(verify_thm31_conditions(t2, block_decompose(t2, good)).passed());

        LinearOperator bad = t2_family(p, q, r, s, t + 1 + static_cast<long>(rng() % 3));
        CHECK_FALSE(ltc.contains(vectorize(bad)));
        CHECK_FALSE(verify_thm31_conditions(t2, block_decompose(t2, bad)).passed());
    }
}

TEST_CASE("the block conditions cut out the Lie triple centralizers") {
    std::vector<Gma> gmas = {upper_triangular(2), upper_triangular(3), upper_triangular(3, 2),
                             full_matrix(2), full_matrix(3, 2), m2_of(dual_numbers())};
    std::mt19937_64 rng(43);
    for (int i = 0; i < 8; ++i) gmas.push_back(random_morita_context(rng));
    for (const Gma& g : gmas) {
        Subspace ltc = solve_identity_space(g, IdentityKind::LieTripleCentralizer);
        Subspace comps = thm31_component_space(g);
        CHECK(comps.dim() == ltc.dim());
        for (const auto& v : comps.basis_vectors()) {
            LinearOperator op = build_from_blocks(g, components_from_vector(g, v));
            CHECK(ltc.contains(vectorize(op)));
            CHECK(components_to_vector(components_of(block_decompose(g, op))) == v);
        }
        for (const auto& op : operators_of(ltc, g.dim()))
            CHECK(verify_thm31_conditions(g, block_decompose(g, op)).passed());
    }
}

TEST_CASE("the strengthened corner conditions") {
    Gma g = full_matrix(3, 2);
    for (const auto& op : operators_of(solve_identity_space(g, IdentityKind::LieTripleCentralizer), g.dim())) {
        CheckReport r = corollary32_strengthen(g, block_decompose(g, op));
        CHECK(r.passed());
        CHECK(r.find("alpha4(A) in Z(B)"));
    }
}

TEST_CASE("singular Jordan derivations need a block structure") {
    try {
        solve_identity_space(full_matrix(2).algebra(), IdentityKind::SingularJordanDerivation);
        FAIL("accepted a bare algebra");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotGMA);
    }
    Subspace sj = solve_identity_space(full_matrix(2), IdentityKind::SingularJordanDerivation);
    for (const auto& op : operators_of(sj, 4)) {
        BlockDecomposition d = block_decompose(full_matrix(2), op);
        CHECK(d.alpha1().is_zero());
        CHECK(d.beta4().is_zero());
        CHECK(is_identity_member(full_matrix(2), IdentityKind::JordanDerivation, op).holds);
    }
}

TEST_CASE("inclusions between the solution spaces") {
    for (const auto& entry : builtin_catalog()) {
        const auto& alg = entry.algebra;
        CAPTURE(entry.name);
        Subspace der = solve_identity_space(alg, IdentityKind::Derivation);
        Subspace jder = solve_identity_space(alg, IdentityKind::JordanDerivation);
        Subspace lieder = solve_identity_space(alg, IdentityKind::LieDerivation);
        Subspace ltd = solve_identity_space(alg, IdentityKind::LieTripleDerivation);
        Subspace lc = solve_identity_space(alg, IdentityKind::LieCentralizer);
        Subspace ltc = solve_identity_space(alg, IdentityKind::LieTripleCentralizer);
        CHECK(subspace_contains(subspace_intersect(jder, lieder), der));
        CHECK(subspace_contains(ltd, subspace_intersect(jder, lieder)));
        CHECK(subspace_contains(ltc, lc));
        CHECK(subspace_equal(solve_ltc_middle_form(alg), ltc));
        for (std::size_t i = 0; i < alg.dim(); ++i) CHECK(der.contains(vectorize(inner_derivation(alg, alg.basis(i)))));
    }
}

TEST_CASE("property: direct membership agrees with the solved subspace") {
    std::mt19937_64 rng(44);
    std::vector<CatalogEntry> entries = {catalog_entry("upper_triangular(3)"), catalog_entry("full_matrix(2)"),
                                         catalog_entry("dual_tri")};
    for (const auto& entry : entries) {
        const auto& alg = entry.algebra;
        const std::size_t n = alg.dim();
        for (const auto& [kind, ok] : kinds) {
            Subspace s = solve_identity_space(alg, kind);
            for (int i = 0; i < 4; ++i) {
                LinearOperator in = random_in(s, n, rng);
                CHECK(is_identity_member(alg, kind, in).holds);
                LinearOperator any = testing::random_matrix(rng, n, n);
                Membership m = is_identity_member(alg, kind, any);
                CHECK(m.holds == s.contains(vectorize(any)));
                if (!m.holds) CHECK(m.witness.has_value());
            }
        }
    }
}
