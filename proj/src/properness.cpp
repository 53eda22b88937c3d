#include "ltc/properness.hpp"

#include <random>

namespace ltc {

namespace {

std::string tuple_text(const std::vector<std::size_t>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i] + 1);
    return s + ")";
}

void require_ltc(const StructureConstants& alg, const LinearOperator& phi) {
    if (phi.rows() != alg.dim() || phi.cols() != alg.dim())
        throw Error(ErrorKind::DimensionMismatch, "operator does not act on this algebra");
    Membership m = is_identity_member(alg, IdentityKind::LieTripleCentralizer, phi);
    if (!m.holds)
        throw Error(ErrorKind::NotLTC, "operator fails the Lie triple identity at basis triple " +
                                           tuple_text(m.witness->tuple) + ": " + to_string(m.witness->lhs) +
                                           " vs " + to_string(m.witness->rhs));
}

void require_unital_annihilating(const Gma& u) {
    if (!u.is_unital()) throw Error(ErrorKind::NotUnital, "the GMA has no unit");
    if (!check_annihilating_conditions(u).holds())
        throw Error(ErrorKind::AnnihilatorConditionsFail, "the annihilating conditions fail");
}

bool columns_in(const Matrix& m, const Subspace& s) {
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!s.contains(m.column(c))) return false;
    return true;
}

Subspace span_with(const Subspace& base, const std::vector<Vector>& extra) {
    std::vector<Vector> gens = base.basis_vectors();
    gens.insert(gens.end(), extra.begin(), extra.end());
    return Subspace::span(base.ambient_dim(), gens);
}

}  // namespace

CheckReport verify_certificate(const StructureConstants& alg, const LinearOperator& phi,
                               const PropernessCertificate& cert) {
    const std::size_t n = alg.dim();
    CheckReport report;
    Subspace z = center(alg);

    bool central = z.contains(cert.lambda);
    report.add("lambda is central", central, central ? "" : "lambda = " + to_string(cert.lambda));

    std::string detail;
    for (std::size_t j = 0; j < n && detail.empty(); ++j)
        if (!z.contains(cert.chi.column(j))) detail = "chi(" + alg.label(j) + ") = " + to_string(cert.chi.column(j));
    report.add("chi takes values in the center", detail.empty(), detail);

    detail.clear();
    std::vector<Vector> table = double_commutator_table(alg);
    for (std::size_t t = 0; t < table.size() && detail.empty(); ++t) {
        Vector v = cert.chi * table[t];
        if (!is_zero(v))
            detail = "chi([[e" + std::to_string(t / (n * n) + 1) + ",e" + std::to_string(t / n % n + 1) + "],e" +
                     std::to_string(t % n + 1) + "]) = " + to_string(v);
    }
    report.add("chi vanishes on double commutators", detail.empty(), detail);

    detail.clear();
    for (std::size_t j = 0; j < n && detail.empty(); ++j) {
        Vector lhs = phi.column(j);
        Vector rhs = alg.multiply(cert.lambda, alg.basis(j)) + cert.chi.column(j);
        if (lhs != rhs) detail = "at " + alg.label(j) + ": " + to_string(lhs) + " vs " + to_string(rhs);
    }
    report.add("phi(X) = lambda X + chi(X)", detail.empty(), detail);
    return report;
}

PropernessResult is_proper_thm33(const Gma& u, const LinearOperator& phi) {
    require_unital_annihilating(u);
    require_ltc(u.algebra(), phi);
    const EtaMap eta = eta_map(u);
    const BlockDecomposition d = block_decompose(u, phi);
    const std::size_t da = u.block_dim(Block::A), db = u.block_dim(Block::B);

    const Vector a4_one = d.alpha4() * u.unit_a();
    if (!eta.codomain.contains(a4_one))
        return PropernessFailure{Block::A, std::nullopt, a4_one, eta.codomain, "alpha4(1_A) is not in pi_B(Z(U))"};
    const Vector b1_one = d.beta1() * u.unit_b();
    if (!eta.domain.contains(b1_one))
        return PropernessFailure{Block::B, std::nullopt, b1_one, eta.domain, "beta1(1_B) is not in pi_A(Z(U))"};

    PropernessCertificate cert;
    Matrix alpha_bar(da, da), beta_bar(db, db);
    cert.chi = LinearOperator(u.dim(), u.dim());
    for (std::size_t i = 0; i < da; ++i) {
        Vector a4 = d.alpha4().column(i);
        if (!eta.codomain.contains(a4))
            throw Error(ErrorKind::TheoremViolation, "alpha4(1_A) lies in pi_B(Z(U)) but alpha4(a" +
                                                         std::to_string(i + 1) + ") does not");
        Vector back = eta.apply_inverse(a4);
        alpha_bar.set_column(i, d.alpha1().column(i) - back);
        cert.chi.set_column(u.block_offset(Block::A) + i, u.embed(Block::A, back) + u.embed(Block::B, a4));
    }
    for (std::size_t j = 0; j < db; ++j) {
        Vector b1 = d.beta1().column(j);
        if (!eta.domain.contains(b1))
            throw Error(ErrorKind::TheoremViolation, "beta1(1_B) lies in pi_A(Z(U)) but beta1(b" +
                                                         std::to_string(j + 1) + ") does not");
        Vector fwd = eta.apply(b1);
        beta_bar.set_column(j, d.beta4().column(j) - fwd);
        cert.chi.set_column(u.block_offset(Block::B) + j, u.embed(Block::A, b1) + u.embed(Block::B, fwd));
    }
    const Vector a0 = d.alpha1() * u.unit_a() - eta.apply_inverse(a4_one);
    const Vector b0 = d.beta4() * u.unit_b() - eta.apply(b1_one);
    cert.lambda = u.embed(Block::A, a0) + u.embed(Block::B, b0);

    cert.transcript = verify_certificate(u.algebra(), phi, cert);
    bool same = alpha_bar * u.unit_a() == a0 && beta_bar * u.unit_b() == b0;
    cert.transcript.add("lambda = diag(alpha_bar(1_A), beta_bar(1_B))", same);
    std::string detail;
    for (std::size_t i = 0; i < da && detail.empty(); ++i) {
        Vector ai = unit_vector(da, i);
        Vector lhs = eta.apply_inverse(d.alpha4().column(i));
        Vector rhs = d.alpha1().column(i) - u.corner_product(Block::A, a0, Block::A, ai, Block::A);
        if (lhs != rhs) detail = "at a" + std::to_string(i + 1) + ": " + to_string(lhs) + " vs " + to_string(rhs);
    }
    cert.transcript.add("eta^-1(alpha4(a)) = alpha1(a) - a0 a", detail.empty(), detail);
    cert.alpha_bar = std::move(alpha_bar);
    cert.beta_bar = std::move(beta_bar);

    if (const Check* bad = cert.transcript.first_failure())
        throw Error(ErrorKind::TheoremViolation, "unit-criterion certificate fails: " + bad->name + " " + bad->detail);
    return cert;
}

PropernessResult is_proper_direct(const StructureConstants& alg, const LinearOperator& phi,
                                  const std::optional<Vector>& probe) {
    require_ltc(alg, phi);
    const std::size_t n = alg.dim();
    const Subspace z = center(alg);
    const std::vector<Vector> zb = z.basis_vectors();
    const std::size_t k = zb.size();
    const Matrix ann = z.annihilator();
    const Subspace dspan = double_commutator_span(alg);

    // Unknowns: coordinates c of lambda = sum c_t z_t.
    //   ann * (phi(e_j) - lambda e_j) = 0   for every basis e_j
    //   phi(d) - lambda d = 0              for every d spanning the double commutators
    std::vector<Vector> rows;
    Vector rhs;
    auto add_block = [&](const Matrix& coeff, const Vector& target) {
        for (std::size_t r = 0; r < coeff.rows(); ++r) {
            rows.push_back(coeff.row_vector(r));
            rhs.push_back(target[r]);
        }
    };
    auto products = [&](const Vector& x) {
        std::vector<Vector> cols;
        for (const auto& zt : zb) cols.push_back(alg.multiply(zt, x));
        return cols;
    };
    for (std::size_t j = 0; j < n; ++j) {
        Matrix coeff = ann * Matrix::from_columns(products(alg.basis(j)), n);
        add_block(coeff, ann * phi.column(j));
    }
    for (const auto& dv : dspan.basis_vectors()) add_block(Matrix::from_columns(products(dv), n), phi * dv);

    std::optional<Solution> sol;
    if (rows.empty())
        sol = Solution{zero_vector(k), Subspace::full(k)};
    else
        sol = solve(Matrix::from_rows(rows, k), rhs);

    if (sol) {
        PropernessCertificate cert;
        cert.lambda = zero_vector(n);
        for (std::size_t t = 0; t < k; ++t) axpy(cert.lambda, sol->particular[t], zb[t]);
        cert.chi = phi - alg.left_multiplication(cert.lambda);
        cert.transcript = verify_certificate(alg, phi, cert);
        if (const Check* bad = cert.transcript.first_failure())
            throw Error(ErrorKind::TheoremViolation, "feasible solution fails re-verification: " + bad->name);
        return cert;
    }

    auto range_failure = [&](const Vector& x) -> std::optional<PropernessFailure> {
        Subspace target = span_with(z, products(x));
        Vector image = phi * x;
        if (target.contains(image)) return std::nullopt;
        return PropernessFailure{std::nullopt, x, image, target,
                                 "phi(X) is not of the form lambda X + chi(X) with lambda, chi(X) central"};
    };
    if (probe) {
        if (probe->size() != n) throw Error(ErrorKind::DimensionMismatch, "probe element length");
        if (auto f = range_failure(*probe)) return *f;
    }
    for (std::size_t j = 0; j < n; ++j)
        if (auto f = range_failure(alg.basis(j))) return *f;
    for (const auto& dv : dspan.basis_vectors()) {
        Subspace target = Subspace::span(n, products(dv));
        Vector image = phi * dv;
        if (!target.contains(image))
            return PropernessFailure{std::nullopt, dv, image, target,
                                     "phi(X) on a double commutator X is not lambda X for any central lambda"};
    }
    return PropernessFailure{std::nullopt, std::nullopt, {}, Subspace(n),
                             "each input is satisfiable alone but no single central lambda serves all of them"};
}

Cor36Report check_cor36_hypotheses(const Gma& u) {
    require_unital_annihilating(u);
    CenterBlocks cb = center_block_description(u);
    StructureConstants a = u.corner_algebra(Block::A), b = u.corner_algebra(Block::B);
    Cor36Report r;
    r.pi_b_is_center_b = cb.pi_b == center(b);
    r.a_is_triple_span = double_commutator_span(a).is_full();
    r.pi_a_is_center_a = cb.pi_a == center(a);
    r.b_is_triple_span = double_commutator_span(b).is_full();
    return r;
}

std::size_t EquivalenceAudit::improper_count() const {
    std::size_t c = 0;
    for (const auto& e : entries) c += e.direct ? 0 : 1;
    return c;
}

bool EquivalenceAudit::consistent() const { return first_disagreement() == nullptr; }

const AuditEntry* EquivalenceAudit::first_disagreement() const {
    for (const auto& e : entries)
        if (!e.agree()) return &e;
    return nullptr;
}

EquivalenceAudit equivalence_audit(const Gma& u, std::size_t random_samples, std::uint64_t seed) {
    require_unital_annihilating(u);
    const EtaMap eta = eta_map(u);
    const Subspace ltc = solve_identity_space(u.algebra(), IdentityKind::LieTripleCentralizer);
    std::vector<LinearOperator> basis = operators_of(ltc, u.dim());

    std::vector<std::pair<std::string, LinearOperator>> inputs;
    for (std::size_t i = 0; i < basis.size(); ++i) inputs.emplace_back("basis " + std::to_string(i + 1), basis[i]);
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < random_samples && !basis.empty(); ++s) {
        LinearOperator phi(u.dim(), u.dim());
        for (const auto& b : basis) phi += Rational(static_cast<long>(rng() % 7) - 3) * b;
        inputs.emplace_back("random " + std::to_string(s + 1), std::move(phi));
    }

    EquivalenceAudit audit;
    for (auto& [label, phi] : inputs) {
        BlockDecomposition d = block_decompose(u, phi);
        AuditEntry e;
        e.label = label;
        e.unit_criterion = eta.codomain.contains(d.alpha4() * u.unit_a()) && eta.domain.contains(d.beta1() * u.unit_b());
        e.range_criterion = columns_in(d.alpha4(), eta.codomain) && columns_in(d.beta1(), eta.domain);
        e.direct = is_proper(is_proper_direct(u.algebra(), phi));
        if (e.unit_criterion) {
            try {
                e.certificate_ok = is_proper(is_proper_thm33(u, phi));
            } catch (const Error& err) {
                if (err.kind() != ErrorKind::TheoremViolation) throw;
                e.certificate_ok = false;
            }
        }
        audit.entries.push_back(std::move(e));
    }
    return audit;
}

}  // namespace ltc
