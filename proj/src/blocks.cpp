#include "ltc/blocks.hpp"

#include <functional>

namespace ltc {

namespace {

constexpr std::array<Block, 4> kBlocks{Block::A, Block::M, Block::N, Block::B};

Vector column_major(const Matrix& m) {
    Vector v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r) v.push_back(m(r, c));
    return v;
}

Matrix from_column_major(const Vector& v, std::size_t offset, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = v[offset + c * rows + r];
    return m;
}

using Sink = std::function<void(const char* condition, const char* vars, std::array<std::size_t, 3> idx,
                                const Vector& residual)>;

// Evaluates every corner identity on all basis tuples and passes each
// residual (which must vanish) to the sink.
void evaluate_corner_identities(const Gma& u, const ThmComponents& c, const Sink& sink) {
    const std::size_t da = u.block_dim(Block::A), dm = u.block_dim(Block::M);
    const std::size_t dn = u.block_dim(Block::N), db = u.block_dim(Block::B);
    auto a = [&](std::size_t i) { return unit_vector(da, i); };
    auto m = [&](std::size_t i) { return unit_vector(dm, i); };
    auto n = [&](std::size_t i) { return unit_vector(dn, i); };
    auto b = [&](std::size_t i) { return unit_vector(db, i); };
    auto mul = [&](Block lb, const Vector& x, Block rb, const Vector& y, Block out) {
        return u.corner_product(lb, x, rb, y, out);
    };
    auto brA = [&](const Vector& x, const Vector& y) { return mul(Block::A, x, Block::A, y, Block::A) - mul(Block::A, y, Block::A, x, Block::A); };
    auto brB = [&](const Vector& x, const Vector& y) { return mul(Block::B, x, Block::B, y, Block::B) - mul(Block::B, y, Block::B, x, Block::B); };
    auto alpha1 = [&](const Vector& x) { return c.alpha1 * x; };
    auto alpha4 = [&](const Vector& x) { return c.alpha4 * x; };
    auto beta1 = [&](const Vector& x) { return c.beta1 * x; };
    auto beta4 = [&](const Vector& x) { return c.beta4 * x; };
    auto tau2 = [&](const Vector& x) { return c.tau2 * x; };
    auto gamma3 = [&](const Vector& x) { return c.gamma3 * x; };

    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < da; ++k) {
                Vector w = brA(brA(a(i), a(j)), a(k));
                sink("alpha1 is a Lie triple centralizer on A", "a1,a2,a3", {i, j, k},
                     alpha1(w) - brA(brA(alpha1(a(i)), a(j)), a(k)));
                sink("alpha4([[a1,a2],a3]) = 0", "a1,a2,a3", {i, j, k}, alpha4(w));
            }
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < db; ++k) {
                Vector w = brB(brB(b(i), b(j)), b(k));
                sink("beta4 is a Lie triple centralizer on B", "b1,b2,b3", {i, j, k},
                     beta4(w) - brB(brB(beta4(b(i)), b(j)), b(k)));
                sink("beta1([[b1,b2],b3]) = 0", "b1,b2,b3", {i, j, k}, beta1(w));
            }
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < db; ++k) {
                sink("[[alpha4(a),b1],b2] = 0", "a,b1,b2", {i, j, k}, brB(brB(alpha4(a(i)), b(j)), b(k)));
                sink("alpha4(a) commutes with [b1,b2]", "a,b1,b2", {i, j, k}, brB(alpha4(a(i)), brB(b(j), b(k))));
            }
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < da; ++k) {
                sink("[[beta1(b),a1],a2] = 0", "b,a1,a2", {i, j, k}, brA(brA(beta1(b(i)), a(j)), a(k)));
                sink("beta1(b) commutes with [a1,a2]", "b,a1,a2", {i, j, k}, brA(beta1(b(i)), brA(a(j), a(k))));
            }
    for (std::size_t p = 0; p < dm; ++p)
        for (std::size_t q = 0; q < dn; ++q) {
            Vector mn = mul(Block::M, m(p), Block::N, n(q), Block::A);
            Vector nm = mul(Block::N, n(q), Block::M, m(p), Block::B);
            Vector t2m_n = mul(Block::M, tau2(m(p)), Block::N, n(q), Block::A);
            Vector m_g3n = mul(Block::M, m(p), Block::N, gamma3(n(q)), Block::A);
            Vector n_t2m = mul(Block::N, n(q), Block::M, tau2(m(p)), Block::B);
            Vector g3n_m = mul(Block::N, gamma3(n(q)), Block::M, m(p), Block::B);
            sink("(i) alpha1(mn) - beta1(nm) = tau2(m)n", "m,n", {p, q, 0}, alpha1(mn) - beta1(nm) - t2m_n);
            sink("(i) tau2(m)n = m gamma3(n)", "m,n", {p, q, 0}, t2m_n - m_g3n);
            sink("(ii) beta4(nm) - alpha4(mn) = n tau2(m)", "m,n", {p, q, 0}, beta4(nm) - alpha4(mn) - n_t2m);
            sink("(ii) n tau2(m) = gamma3(n)m", "m,n", {p, q, 0}, n_t2m - g3n_m);
        }
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t p = 0; p < dm; ++p) {
            Vector am = mul(Block::A, a(i), Block::M, m(p), Block::M);
            Vector a_t2m = mul(Block::A, a(i), Block::M, tau2(m(p)), Block::M);
            Vector rhs = mul(Block::A, alpha1(a(i)), Block::M, m(p), Block::M) -
                         mul(Block::M, m(p), Block::B, alpha4(a(i)), Block::M);
            sink("(iii) tau2(am) = a tau2(m)", "a,m", {i, p, 0}, tau2(am) - a_t2m);
            sink("(iii) a tau2(m) = alpha1(a)m - m alpha4(a)", "a,m", {i, p, 0}, a_t2m - rhs);
        }
    for (std::size_t j = 0; j < db; ++j)
        for (std::size_t p = 0; p < dm; ++p) {
            Vector mb = mul(Block::M, m(p), Block::B, b(j), Block::M);
            Vector t2m_b = mul(Block::M, tau2(m(p)), Block::B, b(j), Block::M);
            Vector rhs = mul(Block::M, m(p), Block::B, beta4(b(j)), Block::M) -
                         mul(Block::A, beta1(b(j)), Block::M, m(p), Block::M);
            sink("(iii) tau2(mb) = tau2(m)b", "b,m", {j, p, 0}, tau2(mb) - t2m_b);
            sink("(iii) tau2(m)b = m beta4(b) - beta1(b)m", "b,m", {j, p, 0}, t2m_b - rhs);
        }
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t q = 0; q < dn; ++q) {
            Vector na = mul(Block::N, n(q), Block::A, a(i), Block::N);
            Vector g3n_a = mul(Block::N, gamma3(n(q)), Block::A, a(i), Block::N);
            Vector rhs = mul(Block::N, n(q), Block::A, alpha1(a(i)), Block::N) -
                         mul(Block::B, alpha4(a(i)), Block::N, n(q), Block::N);
            sink("(iv) gamma3(na) = gamma3(n)a", "a,n", {i, q, 0}, gamma3(na) - g3n_a);
            sink("(iv) gamma3(n)a = n alpha1(a) - alpha4(a)n", "a,n", {i, q, 0}, g3n_a - rhs);
        }
    for (std::size_t j = 0; j < db; ++j)
        for (std::size_t q = 0; q < dn; ++q) {
            Vector bn = mul(Block::B, b(j), Block::N, n(q), Block::N);
            Vector b_g3n = mul(Block::B, b(j), Block::N, gamma3(n(q)), Block::N);
            Vector rhs = mul(Block::B, beta4(b(j)), Block::N, n(q), Block::N) -
                         mul(Block::N, n(q), Block::A, beta1(b(j)), Block::N);
            sink("(iv) gamma3(bn) = b gamma3(n)", "b,n", {j, q, 0}, gamma3(bn) - b_g3n);
            sink("(iv) b gamma3(n) = beta4(b)n - n beta1(b)", "b,n", {j, q, 0}, b_g3n - rhs);
        }
}

std::string describe(const char* vars, std::array<std::size_t, 3> idx, const Vector& residual) {
    std::string out = "at (";
    std::string names(vars);
    std::size_t k = 0, start = 0;
    while (start <= names.size()) {
        auto comma = names.find(',', start);
        if (comma == std::string::npos) comma = names.size();
        if (k) out += ", ";
        out += names.substr(start, comma - start) + "=#" + std::to_string(idx[k] + 1);
        ++k;
        start = comma + 1;
    }
    return out + ") residual " + to_string(residual);
}

void require_unital(const Gma& u) {
    if (!u.is_unital()) throw Error(ErrorKind::NotUnital, "the block characterization needs a unital GMA");
}

}  // namespace

LinearOperator BlockDecomposition::reassemble(const Gma& u) const {
    LinearOperator op(u.dim(), u.dim());
    for (Block from : kBlocks)
        for (Block to : kBlocks) op.set_block(u.block_offset(to), u.block_offset(from), map(from, to));
    return op;
}

BlockDecomposition block_decompose(const Gma& u, const LinearOperator& phi) {
    if (phi.rows() != u.dim() || phi.cols() != u.dim())
        throw Error(ErrorKind::DimensionMismatch, "operator does not act on this GMA");
    BlockDecomposition d;
    for (Block from : kBlocks)
        for (Block to : kBlocks)
            d.map(from, to) = phi.block(u.block_offset(to), u.block_offset(from), u.block_dim(to), u.block_dim(from));
    return d;
}

ThmComponents components_of(const BlockDecomposition& d) {
    return {d.alpha1(), d.beta1(), d.tau2(), d.gamma3(), d.alpha4(), d.beta4()};
}

LinearOperator build_from_blocks(const Gma& u, const ThmComponents& c) {
    auto shape = [&](const Matrix& m, Block from, Block to, const char* name) {
        if (m.rows() != u.block_dim(to) || m.cols() != u.block_dim(from))
            throw Error(ErrorKind::DimensionMismatch, std::string(name) + " has the wrong shape");
    };
    shape(c.alpha1, Block::A, Block::A, "alpha1");
    shape(c.beta1, Block::B, Block::A, "beta1");
    shape(c.tau2, Block::M, Block::M, "tau2");
    shape(c.gamma3, Block::N, Block::N, "gamma3");
    shape(c.alpha4, Block::A, Block::B, "alpha4");
    shape(c.beta4, Block::B, Block::B, "beta4");
    BlockDecomposition d = block_decompose(u, LinearOperator(u.dim(), u.dim()));
    d.map(Block::A, Block::A) = c.alpha1;
    d.map(Block::B, Block::A) = c.beta1;
    d.map(Block::M, Block::M) = c.tau2;
    d.map(Block::N, Block::N) = c.gamma3;
    d.map(Block::A, Block::B) = c.alpha4;
    d.map(Block::B, Block::B) = c.beta4;
    return d.reassemble(u);
}

CheckReport verify_thm31_conditions(const Gma& u, const BlockDecomposition& d) {
    require_unital(u);
    CheckReport report;
    const std::pair<Block, Block> vanishing[] = {
        {Block::A, Block::M}, {Block::A, Block::N}, {Block::B, Block::M}, {Block::B, Block::N}, {Block::M, Block::A},
        {Block::M, Block::N}, {Block::M, Block::B}, {Block::N, Block::A}, {Block::N, Block::M}, {Block::N, Block::B}};
    const char* names[] = {"alpha2", "alpha3", "beta2", "beta3", "tau1", "tau3", "tau4", "gamma1", "gamma2", "gamma4"};
    for (std::size_t t = 0; t < 10; ++t) {
        const Matrix& m = d.map(vanishing[t].first, vanishing[t].second);
        report.add(std::string(names[t]) + " = 0", m.is_zero(), m.is_zero() ? "" : to_string(m));
    }
    // Conditions arrive interleaved across tuples; keep one line per name.
    evaluate_corner_identities(u, components_of(d), [&](const char* cond, const char* vars,
                                                        std::array<std::size_t, 3> idx, const Vector& residual) {
        bool ok = is_zero(residual);
        for (auto& c : report.checks)
            if (c.name == cond) {
                if (c.passed && !ok) {
                    c.passed = false;
                    c.detail = describe(vars, idx, residual);
                }
                return;
            }
        report.add(cond, ok, ok ? "" : describe(vars, idx, residual));
    });
    return report;
}

CheckReport corollary32_strengthen(const Gma& u, const BlockDecomposition& d) {
    require_unital(u);
    auto ann = check_annihilating_conditions(u);
    if (!ann.holds()) throw Error(ErrorKind::AnnihilatorConditionsFail, "the strengthened block form needs the annihilating conditions");
    Subspace za = center(u.corner_algebra(Block::A)), zb = center(u.corner_algebra(Block::B));
    CheckReport report;
    auto range_in = [&](const Matrix& m, const Subspace& z, const char* name, const char* var) {
        for (std::size_t i = 0; i < m.cols(); ++i) {
            Vector img = m.column(i);
            if (!z.contains(img)) {
                report.add(name, false, std::string(var) + "=#" + std::to_string(i + 1) + " maps to " + to_string(img));
                return;
            }
        }
        report.add(name, true);
    };
    range_in(d.alpha4(), zb, "alpha4(A) in Z(B)", "a");
    range_in(d.beta1(), za, "beta1(B) in Z(A)", "b");
    return report;
}

Vector components_to_vector(const ThmComponents& c) {
    Vector v;
    for (const Matrix* m : {&c.alpha1, &c.beta1, &c.tau2, &c.gamma3, &c.alpha4, &c.beta4}) {
        Vector part = column_major(*m);
        v.insert(v.end(), part.begin(), part.end());
    }
    return v;
}

ThmComponents components_from_vector(const Gma& u, const Vector& v) {
    const std::size_t da = u.block_dim(Block::A), dm = u.block_dim(Block::M);
    const std::size_t dn = u.block_dim(Block::N), db = u.block_dim(Block::B);
    const std::size_t total = da * da + da * db + dm * dm + dn * dn + db * da + db * db;
    if (v.size() != total) throw Error(ErrorKind::DimensionMismatch, "component vector length");
    ThmComponents c;
    std::size_t off = 0;
    auto take = [&](std::size_t rows, std::size_t cols) {
        Matrix m = from_column_major(v, off, rows, cols);
        off += rows * cols;
        return m;
    };
    c.alpha1 = take(da, da);
    c.beta1 = take(da, db);
    c.tau2 = take(dm, dm);
    c.gamma3 = take(dn, dn);
    c.alpha4 = take(db, da);
    c.beta4 = take(db, db);
    return c;
}

Subspace thm31_component_space(const Gma& u) {
    require_unital(u);
    const std::size_t da = u.block_dim(Block::A), dm = u.block_dim(Block::M);
    const std::size_t dn = u.block_dim(Block::N), db = u.block_dim(Block::B);
    const std::size_t total = da * da + da * db + dm * dm + dn * dn + db * da + db * db;
    // The corner identities are linear in the components: column t of the
    // constraint matrix is the residual vector at the t-th unit component tuple.
    std::vector<Vector> columns;
    for (std::size_t t = 0; t < total; ++t) {
        Vector residuals;
        evaluate_corner_identities(u, components_from_vector(u, unit_vector(total, t)),
                                   [&](const char*, const char*, std::array<std::size_t, 3>, const Vector& r) {
                                       residuals.insert(residuals.end(), r.begin(), r.end());
                                   });
        columns.push_back(std::move(residuals));
    }
    Matrix constraints = Matrix::from_columns(columns, columns.empty() ? 0 : columns[0].size());
    RowReducer rr(total);
    for (std::size_t r = 0; r < constraints.rows() && !rr.full(); ++r) {
        auto row = constraints.row(r);
        if (!is_zero(row)) rr.add(Vector(row.begin(), row.end()));
    }
    return rr.kernel();
}

}  // namespace ltc
