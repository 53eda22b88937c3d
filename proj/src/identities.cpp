#include "ltc/identities.hpp"

#include <functional>

namespace ltc {

const char* to_string(IdentityKind kind) {
    switch (kind) {
    case IdentityKind::LieCentralizer: return "LieCentralizer";
    case IdentityKind::LieTripleCentralizer: return "LieTripleCentralizer";
    case IdentityKind::JordanCentralizer: return "JordanCentralizer";
    case IdentityKind::Derivation: return "Derivation";
    case IdentityKind::LieDerivation: return "LieDerivation";
    case IdentityKind::JordanDerivation: return "JordanDerivation";
    case IdentityKind::LieTripleDerivation: return "LieTripleDerivation";
    case IdentityKind::SingularJordanDerivation: return "SingularJordanDerivation";
    }
    return "?";
}

const char* short_name(IdentityKind kind) {
    switch (kind) {
    case IdentityKind::LieCentralizer: return "lc";
    case IdentityKind::LieTripleCentralizer: return "ltc";
    case IdentityKind::JordanCentralizer: return "jc";
    case IdentityKind::Derivation: return "der";
    case IdentityKind::LieDerivation: return "lieder";
    case IdentityKind::JordanDerivation: return "jder";
    case IdentityKind::LieTripleDerivation: return "ltd";
    case IdentityKind::SingularJordanDerivation: return "sjder";
    }
    return "?";
}

std::optional<IdentityKind> parse_identity_kind(std::string_view name) {
    for (auto k : {IdentityKind::LieCentralizer, IdentityKind::LieTripleCentralizer, IdentityKind::JordanCentralizer,
                   IdentityKind::Derivation, IdentityKind::LieDerivation, IdentityKind::JordanDerivation,
                   IdentityKind::LieTripleDerivation, IdentityKind::SingularJordanDerivation})
        if (name == short_name(k)) return k;
    return std::nullopt;
}

std::size_t arity(IdentityKind kind) {
    return kind == IdentityKind::LieTripleCentralizer || kind == IdentityKind::LieTripleDerivation ? 3 : 2;
}

namespace {

enum class Product { Plain, Bracket, Jordan };

// Basis-level binary products, indexed i*n + j.
std::vector<Vector> product_table(const StructureConstants& alg, Product p) {
    const std::size_t n = alg.dim();
    std::vector<Vector> t(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector& ij = alg.basis_product(i, j);
            const Vector& ji = alg.basis_product(j, i);
            switch (p) {
            case Product::Plain: t[i * n + j] = ij; break;
            case Product::Bracket: t[i * n + j] = ij - ji; break;
            case Product::Jordan: t[i * n + j] = ij + ji; break;
            }
        }
    return t;
}

// Accumulates the n rows contributed by one basis tuple. Each term is
// either phi(x) for a fixed element x, or L(phi(e_i)) for a linear map L
// given by its columns L(e_s).
class TupleRows {
public:
    explicit TupleRows(std::size_t n) : n_(n), rows_(n, Vector(n * n)) {}

    void phi_of(const Vector& x, int sign) {
        for (std::size_t l = 0; l < n_; ++l) {
            if (sgn(x[l]) == 0) continue;
            for (std::size_t r = 0; r < n_; ++r) add(r, l * n_ + r, sign, x[l]);
        }
    }

    void map_of_phi(const std::function<const Vector&(std::size_t)>& column, std::size_t i, int sign) {
        for (std::size_t s = 0; s < n_; ++s) {
            const Vector& col = column(s);
            for (std::size_t r = 0; r < n_; ++r)
                if (sgn(col[r]) != 0) add(r, i * n_ + s, sign, col[r]);
        }
    }

    void flush(RowReducer& rr) {
        for (auto& row : rows_)
            if (!is_zero(row)) rr.add(std::move(row));
        rows_.assign(n_, Vector(n_ * n_));
    }

private:
    void add(std::size_t r, std::size_t unknown, int sign, const Rational& v) {
        if (sign > 0)
            rows_[r][unknown] += v;
        else
            rows_[r][unknown] -= v;
    }

    std::size_t n_;
    std::vector<Vector> rows_;
};

void binary_rows(const StructureConstants& alg, Product p, bool derivation, RowReducer& rr) {
    const std::size_t n = alg.dim();
    auto t = product_table(alg, p);
    TupleRows rows(n);
    for (std::size_t i = 0; i < n && !rr.full(); ++i)
        for (std::size_t j = 0; j < n && !rr.full(); ++j) {
            rows.phi_of(t[i * n + j], +1);
            rows.map_of_phi([&](std::size_t s) -> const Vector& { return t[s * n + j]; }, i, -1);
            if (derivation) rows.map_of_phi([&](std::size_t s) -> const Vector& { return t[i * n + s]; }, j, -1);
            rows.flush(rr);
        }
}

enum class TripleForm { Centralizer, CentralizerMiddle, Derivation };

void triple_rows(const StructureConstants& alg, TripleForm form, RowReducer& rr) {
    const std::size_t n = alg.dim();
    auto dc = double_commutator_table(alg);
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Vector& { return dc[(i * n + j) * n + k]; };
    TupleRows rows(n);
    for (std::size_t i = 0; i < n && !rr.full(); ++i)
        for (std::size_t j = 0; j < n && !rr.full(); ++j)
            for (std::size_t k = 0; k < n && !rr.full(); ++k) {
                rows.phi_of(at(i, j, k), +1);
                if (form != TripleForm::CentralizerMiddle)
                    rows.map_of_phi([&](std::size_t s) -> const Vector& { return at(s, j, k); }, i, -1);
                if (form != TripleForm::Centralizer)
                    rows.map_of_phi([&](std::size_t s) -> const Vector& { return at(i, s, k); }, j, -1);
                if (form == TripleForm::Derivation)
                    rows.map_of_phi([&](std::size_t s) -> const Vector& { return at(i, j, s); }, k, -1);
                rows.flush(rr);
            }
}

bool singular_support(const Gma& u, std::size_t row, std::size_t col) {
    Block in = u.block_of(col), out = u.block_of(row);
    return (in == Block::M && out == Block::N) || (in == Block::N && out == Block::M);
}

void fill_rows(const StructureConstants& alg, IdentityKind kind, RowReducer& rr) {
    switch (kind) {
    case IdentityKind::LieCentralizer: binary_rows(alg, Product::Bracket, false, rr); break;
    case IdentityKind::JordanCentralizer: binary_rows(alg, Product::Jordan, false, rr); break;
    case IdentityKind::Derivation: binary_rows(alg, Product::Plain, true, rr); break;
    case IdentityKind::LieDerivation: binary_rows(alg, Product::Bracket, true, rr); break;
    case IdentityKind::JordanDerivation:
    case IdentityKind::SingularJordanDerivation: binary_rows(alg, Product::Jordan, true, rr); break;
    case IdentityKind::LieTripleCentralizer: triple_rows(alg, TripleForm::Centralizer, rr); break;
    case IdentityKind::LieTripleDerivation: triple_rows(alg, TripleForm::Derivation, rr); break;
    }
}

}  // namespace

Subspace solve_identity_space(const StructureConstants& alg, IdentityKind kind) {
    if (kind == IdentityKind::SingularJordanDerivation)
        throw Error(ErrorKind::NotGMA, "singular Jordan derivations need the block structure of a GMA");
    RowReducer rr(alg.dim() * alg.dim());
    fill_rows(alg, kind, rr);
    return rr.kernel();
}

Subspace solve_identity_space(const Gma& u, IdentityKind kind) {
    if (kind != IdentityKind::SingularJordanDerivation) return solve_identity_space(u.algebra(), kind);
    const std::size_t n = u.dim();
    RowReducer rr(n * n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r)
            if (!singular_support(u, r, c)) rr.add(unit_vector(n * n, c * n + r));
    fill_rows(u.algebra(), kind, rr);
    return rr.kernel();
}

Subspace solve_ltc_middle_form(const StructureConstants& alg) {
    RowReducer rr(alg.dim() * alg.dim());
    triple_rows(alg, TripleForm::CentralizerMiddle, rr);
    return rr.kernel();
}

std::vector<LinearOperator> operators_of(const Subspace& space, std::size_t dim) {
    std::vector<LinearOperator> ops;
    for (std::size_t t = 0; t < space.dim(); ++t) ops.push_back(operator_from_vector(space.basis_vector(t), dim));
    return ops;
}

Membership is_identity_member(const StructureConstants& alg, IdentityKind kind, const LinearOperator& op) {
    const std::size_t n = alg.dim();
    if (op.rows() != n || op.cols() != n) throw Error(ErrorKind::DimensionMismatch, "operator shape");
    if (kind == IdentityKind::SingularJordanDerivation)
        throw Error(ErrorKind::NotGMA, "singular Jordan derivations need the block structure of a GMA");

    std::vector<Vector> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = op.column(i);
    auto phi = [&](const Vector& x) { return op * x; };
    auto e = [&](std::size_t i) { return alg.basis(i); };
    auto br = [&](const Vector& x, const Vector& y) { return alg.commutator(x, y); };
    auto jo = [&](const Vector& x, const Vector& y) { return alg.jordan_product(x, y); };
    auto mul = [&](const Vector& x, const Vector& y) { return alg.multiply(x, y); };

    if (arity(kind) == 3) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    Vector lhs = phi(br(br(e(i), e(j)), e(k)));
                    Vector rhs = br(br(images[i], e(j)), e(k));
                    if (kind == IdentityKind::LieTripleDerivation)
                        rhs = rhs + br(br(e(i), images[j]), e(k)) + br(br(e(i), e(j)), images[k]);
                    if (lhs != rhs) return {false, IdentityWitness{{i, j, k}, lhs, rhs, {}}};
                }
        return {};
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector lhs, rhs;
            switch (kind) {
            case IdentityKind::LieCentralizer:
                lhs = phi(br(e(i), e(j)));
                rhs = br(images[i], e(j));
                break;
            case IdentityKind::JordanCentralizer:
                lhs = phi(jo(e(i), e(j)));
                rhs = jo(images[i], e(j));
                break;
            case IdentityKind::Derivation:
                lhs = phi(mul(e(i), e(j)));
                rhs = mul(images[i], e(j)) + mul(e(i), images[j]);
                break;
            case IdentityKind::LieDerivation:
                lhs = phi(br(e(i), e(j)));
                rhs = br(images[i], e(j)) + br(e(i), images[j]);
                break;
            default:  // Jordan derivation
                lhs = phi(jo(e(i), e(j)));
                rhs = jo(images[i], e(j)) + jo(e(i), images[j]);
                break;
            }
            if (lhs != rhs) return {false, IdentityWitness{{i, j}, lhs, rhs, {}}};
        }
    return {};
}

Membership is_identity_member(const Gma& u, IdentityKind kind, const LinearOperator& op) {
    if (kind != IdentityKind::SingularJordanDerivation) return is_identity_member(u.algebra(), kind, op);
    const std::size_t n = u.dim();
    if (op.rows() != n || op.cols() != n) throw Error(ErrorKind::DimensionMismatch, "operator shape");
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r)
            if (sgn(op(r, c)) != 0 && !singular_support(u, r, c))
                return {false, IdentityWitness{{}, op.column(c), {}, "entry (" + std::to_string(r) + "," +
                                                                          std::to_string(c) + ") outside the M->N, N->M corners"}};
    return is_identity_member(u.algebra(), IdentityKind::JordanDerivation, op);
}

LinearOperator left_multiplication_operator(const StructureConstants& alg, const Vector& z) {
    return alg.left_multiplication(z);
}

LinearOperator inner_derivation(const StructureConstants& alg, const Vector& z) {
    return alg.left_multiplication(z) - alg.right_multiplication(z);
}

}  // namespace ltc
