#include "ltc/gma.hpp"

namespace ltc {

namespace {

// Block position in the 2x2 grid: A=(0,0), M=(0,1), N=(1,0), B=(1,1).
constexpr int row_of(Block b) { return b == Block::A || b == Block::M ? 0 : 1; }
constexpr int col_of(Block b) { return b == Block::A || b == Block::N ? 0 : 1; }
constexpr Block block_at(int r, int c) {
    return r == 0 ? (c == 0 ? Block::A : Block::M) : (c == 0 ? Block::N : Block::B);
}
constexpr std::array<Block, 4> kBlocks{Block::A, Block::M, Block::N, Block::B};

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::InvalidDocument, what);
}

}  // namespace

const char* to_string(Block b) {
    switch (b) {
    case Block::A: return "A";
    case Block::M: return "M";
    case Block::N: return "N";
    case Block::B: return "B";
    }
    return "?";
}

Gma::Gma(StructureConstants algebra, std::array<std::size_t, 4> block_dims)
    : algebra_(std::move(algebra)), dims_(block_dims) {
    if (dims_[0] + dims_[1] + dims_[2] + dims_[3] != algebra_.dim())
        throw Error(ErrorKind::NotGMA, "block dimensions do not add up to the algebra dimension");
    if (dims_[0] == 0 || dims_[3] == 0) throw Error(ErrorKind::NotGMA, "corner algebras A and B must be nonzero");
    const std::size_t n = algebra_.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Block x = block_of(i), y = block_of(j);
            const Vector& p = algebra_.basis_product(i, j);
            bool matches = col_of(x) == row_of(y);
            Block target = block_at(row_of(x), col_of(y));
            for (std::size_t k = 0; k < n; ++k) {
                if (sgn(p[k]) == 0) continue;
                if (!matches || block_of(k) != target)
                    throw Error(ErrorKind::NotGMA, "product of basis " + std::to_string(i) + " and " +
                                                       std::to_string(j) + " leaves the block pattern");
            }
        }
    unit_ = find_unit(algebra_);
}

std::size_t Gma::block_offset(Block b) const noexcept {
    std::size_t off = 0;
    for (int i = 0; i < static_cast<int>(b); ++i) off += dims_[i];
    return off;
}

Block Gma::block_of(std::size_t basis_index) const {
    std::size_t off = 0;
    for (Block b : kBlocks) {
        off += block_dim(b);
        if (basis_index < off) return b;
    }
    throw Error(ErrorKind::DimensionMismatch, "basis index out of range");
}

Vector Gma::embed(Block b, const Vector& corner) const {
    if (corner.size() != block_dim(b))
        throw Error(ErrorKind::DimensionMismatch, std::string("element does not fit block ") + to_string(b));
    Vector x(dim());
    std::size_t off = block_offset(b);
    for (std::size_t i = 0; i < corner.size(); ++i) x[off + i] = corner[i];
    return x;
}

Vector Gma::project(Block b, const Vector& x) const {
    if (x.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "element is not in the GMA");
    std::size_t off = block_offset(b);
    return Vector(x.begin() + off, x.begin() + off + block_dim(b));
}

Vector Gma::corner_product(Block lb, const Vector& x, Block rb, const Vector& y, Block out) const {
    return project(out, algebra_.multiply(embed(lb, x), embed(rb, y)));
}

StructureConstants Gma::corner_algebra(Block b) const {
    if (b != Block::A && b != Block::B)
        throw Error(ErrorKind::DimensionMismatch, "only A and B are corner algebras");
    const std::size_t d = block_dim(b), off = block_offset(b);
    std::vector<Rational> t(d * d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) t[(i * d + j) * d + k] = algebra_.c(off + i, off + j, off + k);
    std::vector<std::string> labels(algebra_.labels().begin() + off, algebra_.labels().begin() + off + d);
    return StructureConstants(d, t, labels);
}

const Vector& Gma::unit() const {
    if (!unit_) throw Error(ErrorKind::NotUnital, "the generalized matrix algebra has no unit");
    return *unit_;
}

MoritaContext Gma::to_context() const {
    const std::size_t da = block_dim(Block::A), dm = block_dim(Block::M), dn = block_dim(Block::N),
                      db = block_dim(Block::B);
    auto coeff = [&](Block lb, std::size_t i, Block rb, std::size_t j, Block out, std::size_t k) {
        return algebra_.c(block_offset(lb) + i, block_offset(rb) + j, block_offset(out) + k);
    };
    MoritaContext ctx{corner_algebra(Block::A), corner_algebra(Block::B), {dm, {}, {}}, {dn, {}, {}}, {}, {}};
    ctx.M.left.resize(da * dm * dm);
    ctx.M.right.resize(dm * db * dm);
    ctx.N.left.resize(db * dn * dn);
    ctx.N.right.resize(dn * da * dn);
    ctx.zeta.resize(dm * dn * da);
    ctx.psi.resize(dn * dm * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t p = 0; p < dm; ++p)
            for (std::size_t q = 0; q < dm; ++q) ctx.M.left[(i * dm + p) * dm + q] = coeff(Block::A, i, Block::M, p, Block::M, q);
    for (std::size_t p = 0; p < dm; ++p)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t q = 0; q < dm; ++q) ctx.M.right[(p * db + j) * dm + q] = coeff(Block::M, p, Block::B, j, Block::M, q);
    for (std::size_t j = 0; j < db; ++j)
        for (std::size_t p = 0; p < dn; ++p)
            for (std::size_t q = 0; q < dn; ++q) ctx.N.left[(j * dn + p) * dn + q] = coeff(Block::B, j, Block::N, p, Block::N, q);
    for (std::size_t p = 0; p < dn; ++p)
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t q = 0; q < dn; ++q) ctx.N.right[(p * da + i) * dn + q] = coeff(Block::N, p, Block::A, i, Block::N, q);
    for (std::size_t p = 0; p < dm; ++p)
        for (std::size_t q = 0; q < dn; ++q)
            for (std::size_t k = 0; k < da; ++k) ctx.zeta[(p * dn + q) * da + k] = coeff(Block::M, p, Block::N, q, Block::A, k);
    for (std::size_t q = 0; q < dn; ++q)
        for (std::size_t p = 0; p < dm; ++p)
            for (std::size_t k = 0; k < db; ++k) ctx.psi[(q * dm + p) * db + k] = coeff(Block::N, q, Block::M, p, Block::B, k);
    return ctx;
}

Gma assemble(const MoritaContext& ctx) {
    const std::size_t da = ctx.A.dim(), db = ctx.B.dim(), dm = ctx.M.dim, dn = ctx.N.dim;
    require(ctx.M.left.size() == da * dm * dm, "M left action has the wrong size");
    require(ctx.M.right.size() == dm * db * dm, "M right action has the wrong size");
    require(ctx.N.left.size() == db * dn * dn, "N left action has the wrong size");
    require(ctx.N.right.size() == dn * da * dn, "N right action has the wrong size");
    require(ctx.zeta.size() == dm * dn * da, "zeta pairing has the wrong size");
    require(ctx.psi.size() == dn * dm * db, "psi pairing has the wrong size");

    const std::size_t n = da + dm + dn + db;
    const std::size_t oA = 0, oM = da, oN = da + dm, oB = da + dm + dn;
    std::vector<Rational> t(n * n * n);
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& { return t[(i * n + j) * n + k]; };

    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < da; ++k) at(oA + i, oA + j, oA + k) = ctx.A.c(i, j, k);
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < db; ++k) at(oB + i, oB + j, oB + k) = ctx.B.c(i, j, k);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t p = 0; p < dm; ++p)
            for (std::size_t q = 0; q < dm; ++q) at(oA + i, oM + p, oM + q) = ctx.M.left[(i * dm + p) * dm + q];
    for (std::size_t p = 0; p < dm; ++p)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t q = 0; q < dm; ++q) at(oM + p, oB + j, oM + q) = ctx.M.right[(p * db + j) * dm + q];
    for (std::size_t j = 0; j < db; ++j)
        for (std::size_t p = 0; p < dn; ++p)
            for (std::size_t q = 0; q < dn; ++q) at(oB + j, oN + p, oN + q) = ctx.N.left[(j * dn + p) * dn + q];
    for (std::size_t p = 0; p < dn; ++p)
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t q = 0; q < dn; ++q) at(oN + p, oA + i, oN + q) = ctx.N.right[(p * da + i) * dn + q];
    for (std::size_t p = 0; p < dm; ++p)
        for (std::size_t q = 0; q < dn; ++q)
            for (std::size_t k = 0; k < da; ++k) at(oM + p, oN + q, oA + k) = ctx.zeta[(p * dn + q) * da + k];
    for (std::size_t q = 0; q < dn; ++q)
        for (std::size_t p = 0; p < dm; ++p)
            for (std::size_t k = 0; k < db; ++k) at(oN + q, oM + p, oB + k) = ctx.psi[(q * dm + p) * db + k];

    std::vector<std::string> labels;
    for (const auto& l : ctx.A.labels()) labels.push_back("A." + l);
    for (std::size_t p = 0; p < dm; ++p) labels.push_back("M." + std::to_string(p + 1));
    for (std::size_t q = 0; q < dn; ++q) labels.push_back("N." + std::to_string(q + 1));
    for (const auto& l : ctx.B.labels()) labels.push_back("B." + l);
    return Gma(StructureConstants(n, t, labels), {da, dm, dn, db});
}

Gma m2_of(const StructureConstants& alg) {
    const std::size_t d = alg.dim();
    std::vector<Rational> mult = alg.flat_table();
    Bimodule same{d, mult, mult};
    MoritaContext ctx{alg, alg, same, same, mult, mult};
    Gma u = assemble(ctx);
    std::vector<std::string> labels;
    for (const char* pos : {"11", "12", "21", "22"})
        for (const auto& l : alg.labels()) labels.push_back("E" + std::string(pos) + "(" + l + ")");
    return Gma(StructureConstants(u.dim(), u.algebra().flat_table(), labels), u.block_dims());
}

PeirceDecomposition peirce_from_idempotent(const StructureConstants& alg, const Vector& e) {
    const std::size_t n = alg.dim();
    if (e.size() != n) throw Error(ErrorKind::DimensionMismatch, "idempotent has the wrong length");
    auto one = find_unit(alg);
    if (!one) throw Error(ErrorKind::NotUnital, "Peirce decomposition needs a unital algebra");
    if (alg.multiply(e, e) != e) throw Error(ErrorKind::NotIdempotent, "e*e != e");
    if (is_zero(e) || e == *one) throw Error(ErrorKind::TrivialIdempotent, "e must differ from 0 and 1");
    Vector f = *one - e;

    auto corner = [&](const Vector& l, const Vector& r) {
        Matrix m = alg.left_multiplication(l) * alg.right_multiplication(r);
        return Subspace::row_space(m.transpose());
    };
    std::array<Subspace, 4> corners{corner(e, e), corner(e, f), corner(f, e), corner(f, f)};

    std::vector<Vector> cols;
    std::vector<std::string> labels;
    const char* names[] = {"eAe", "eAf", "fAe", "fAf"};
    for (int b = 0; b < 4; ++b)
        for (std::size_t t = 0; t < corners[b].dim(); ++t) {
            cols.push_back(corners[b].basis_vector(t));
            labels.push_back(std::string(names[b]) + "." + std::to_string(t + 1));
        }
    if (cols.size() != n) throw Error(ErrorKind::TheoremViolation, "Peirce corners do not span the algebra");
    Matrix p = Matrix::from_columns(cols, n);
    Matrix p_inv = inverse(p);

    std::vector<Rational> t(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector c = p_inv * alg.multiply(cols[i], cols[j]);
            for (std::size_t k = 0; k < n; ++k) t[(i * n + j) * n + k] = c[k];
        }
    std::array<std::size_t, 4> dims{corners[0].dim(), corners[1].dim(), corners[2].dim(), corners[3].dim()};
    return {Gma(StructureConstants(n, t, labels), dims), std::move(p)};
}

AnnihilatorReport check_annihilating_conditions(const Gma& u) {
    const std::size_t da = u.block_dim(Block::A), db = u.block_dim(Block::B);
    const std::size_t dm = u.block_dim(Block::M), dn = u.block_dim(Block::N);

    auto side = [&](Block corner, std::size_t d) {
        RowReducer rr(d);
        // For each module basis vector, the linear map x -> (x m) or (n x), etc.
        auto add_rows = [&](Block mod, std::size_t dmod, bool corner_on_left) {
            for (std::size_t p = 0; p < dmod; ++p) {
                Matrix m(dmod, d);
                for (std::size_t i = 0; i < d; ++i) {
                    Vector prod = corner_on_left
                                      ? u.corner_product(corner, unit_vector(d, i), mod, unit_vector(dmod, p), mod)
                                      : u.corner_product(mod, unit_vector(dmod, p), corner, unit_vector(d, i), mod);
                    m.set_column(i, prod);
                }
                for (std::size_t r = 0; r < dmod; ++r) rr.add(m.row_vector(r));
            }
        };
        if (corner == Block::A) {
            add_rows(Block::M, dm, true);   // a m
            add_rows(Block::N, dn, false);  // n a
        } else {
            add_rows(Block::M, dm, false);  // m b
            add_rows(Block::N, dn, true);   // b n
        }
        return rr.kernel();
    };
    return {side(Block::A, da), side(Block::B, db)};
}

static void require_center_hypotheses(const Gma& u) {
    if (!u.is_unital()) throw Error(ErrorKind::NotUnital, "the center description needs a unital GMA");
    auto ann = check_annihilating_conditions(u);
    if (!ann.holds())
        throw Error(ErrorKind::AnnihilatorConditionsFail,
                    std::string("annihilating condition fails on the ") + (ann.a_holds() ? "B" : "A") +
                        " side, witness " +
                        to_string(ann.a_holds() ? ann.b_side.basis_vector(0) : ann.a_side.basis_vector(0)));
}

CenterBlocks center_block_description(const Gma& u) {
    require_center_hypotheses(u);
    Subspace z = center(u.algebra());
    std::vector<Vector> pa, pb;
    for (std::size_t t = 0; t < z.dim(); ++t) {
        Vector v = z.basis_vector(t);
        if (!is_zero(u.project(Block::M, v)) || !is_zero(u.project(Block::N, v)))
            throw Error(ErrorKind::OffDiagonalCenter, "central element " + to_string(v) + " is not block diagonal");
        pa.push_back(u.project(Block::A, v));
        pb.push_back(u.project(Block::B, v));
    }
    return {z, Subspace::span(u.block_dim(Block::A), pa), Subspace::span(u.block_dim(Block::B), pb)};
}

Subspace block_center(const Gma& u) {
    const std::size_t da = u.block_dim(Block::A), db = u.block_dim(Block::B);
    const std::size_t dm = u.block_dim(Block::M), dn = u.block_dim(Block::N);
    const std::size_t unknowns = da + db;
    RowReducer rr(unknowns);
    // am - mb = 0 for each basis m; na - bn = 0 for each basis n.
    for (std::size_t p = 0; p < dm; ++p) {
        Vector m = unit_vector(dm, p);
        Matrix rows(dm, unknowns);
        for (std::size_t i = 0; i < da; ++i) rows.set_column(i, u.corner_product(Block::A, unit_vector(da, i), Block::M, m, Block::M));
        for (std::size_t j = 0; j < db; ++j) rows.set_column(da + j, -u.corner_product(Block::M, m, Block::B, unit_vector(db, j), Block::M));
        for (std::size_t r = 0; r < dm; ++r) rr.add(rows.row_vector(r));
    }
    for (std::size_t q = 0; q < dn; ++q) {
        Vector n = unit_vector(dn, q);
        Matrix rows(dn, unknowns);
        for (std::size_t i = 0; i < da; ++i) rows.set_column(i, u.corner_product(Block::N, n, Block::A, unit_vector(da, i), Block::N));
        for (std::size_t j = 0; j < db; ++j) rows.set_column(da + j, -u.corner_product(Block::B, unit_vector(db, j), Block::N, n, Block::N));
        for (std::size_t r = 0; r < dn; ++r) rr.add(rows.row_vector(r));
    }
    Subspace sol = rr.kernel();
    std::vector<Vector> diag;
    for (std::size_t t = 0; t < sol.dim(); ++t) {
        Vector ab = sol.basis_vector(t);
        Vector a(ab.begin(), ab.begin() + da), b(ab.begin() + da, ab.end());
        diag.push_back(u.embed(Block::A, a) + u.embed(Block::B, b));
    }
    return Subspace::span(u.dim(), diag);
}

Vector EtaMap::apply(const Vector& a) const { return forward * domain.coordinates(a); }

Vector EtaMap::apply_inverse(const Vector& b) const { return backward * codomain.coordinates(b); }

EtaMap eta_map(const Gma& u) {
    CenterBlocks cb = center_block_description(u);
    const std::size_t k = cb.center.dim();
    if (cb.pi_a.dim() != k || cb.pi_b.dim() != k)
        throw Error(ErrorKind::NonUniqueEta, "a central element has a zero corner; eta is not well defined");

    std::vector<Vector> za, zb;
    for (std::size_t t = 0; t < k; ++t) {
        za.push_back(u.project(Block::A, cb.center.basis_vector(t)));
        zb.push_back(u.project(Block::B, cb.center.basis_vector(t)));
    }
    const std::size_t da = u.block_dim(Block::A), db = u.block_dim(Block::B);
    Matrix pa = Matrix::from_columns(za, da), pb = Matrix::from_columns(zb, db);

    EtaMap eta{cb.pi_a, cb.pi_b, Matrix(db, k), Matrix(da, k)};
    for (std::size_t s = 0; s < k; ++s) {
        auto ca = solve(pa, cb.pi_a.basis_vector(s));
        auto cbb = solve(pb, cb.pi_b.basis_vector(s));
        if (!ca || !cbb) throw Error(ErrorKind::TheoremViolation, "corner projection of the center is inconsistent");
        eta.forward.set_column(s, pb * ca->particular);
        eta.backward.set_column(s, pa * cbb->particular);
    }

    auto violation = [](const std::string& what) { return Error(ErrorKind::TheoremViolation, "eta: " + what); };
    const std::size_t dm = u.block_dim(Block::M), dn = u.block_dim(Block::N);
    StructureConstants a_alg = u.corner_algebra(Block::A), b_alg = u.corner_algebra(Block::B);
    for (std::size_t s = 0; s < k; ++s) {
        Vector a = cb.pi_a.basis_vector(s);
        Vector ea = eta.apply(a);
        if (eta.apply_inverse(ea) != a) throw violation("not invertible");
        for (std::size_t t = 0; t < k; ++t) {
            Vector a2 = cb.pi_a.basis_vector(t);
            Vector prod = a_alg.multiply(a, a2);
            if (!cb.pi_a.contains(prod)) throw violation("domain is not closed under multiplication");
            if (eta.apply(prod) != b_alg.multiply(ea, eta.apply(a2))) throw violation("not multiplicative");
        }
        for (std::size_t p = 0; p < dm; ++p) {
            Vector m = unit_vector(dm, p);
            if (u.corner_product(Block::A, a, Block::M, m, Block::M) != u.corner_product(Block::M, m, Block::B, ea, Block::M))
                throw violation("am != m eta(a)");
        }
        for (std::size_t q = 0; q < dn; ++q) {
            Vector n = unit_vector(dn, q);
            if (u.corner_product(Block::N, n, Block::A, a, Block::N) != u.corner_product(Block::B, ea, Block::N, n, Block::N))
                throw violation("na != eta(a) n");
        }
    }
    if (eta.apply(u.unit_a()) != u.unit_b()) throw violation("eta(1_A) != 1_B");
    return eta;
}

}  // namespace ltc
