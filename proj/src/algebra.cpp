#include "ltc/algebra.hpp"

#include <openssl/evp.h>

#include <cstdio>

namespace ltc {

StructureConstants::StructureConstants(std::size_t dim, const std::vector<Rational>& table,
                                       std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)) {
    if (dim == 0) throw Error(ErrorKind::InvalidDocument, "algebra dimension must be at least 1");
    if (table.size() != dim * dim * dim)
        throw Error(ErrorKind::DimensionMismatch, "table has " + std::to_string(table.size()) +
                                                      " entries, expected " + std::to_string(dim * dim * dim));
    if (labels_.empty())
        for (std::size_t i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i + 1));
    if (labels_.size() != dim) throw Error(ErrorKind::DimensionMismatch, "label count differs from dim");

    products_.resize(dim * dim);
    for (std::size_t ij = 0; ij < dim * dim; ++ij)
        products_[ij] = Vector(table.begin() + ij * dim, table.begin() + (ij + 1) * dim);

    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                Vector lhs(dim), rhs(dim);
                const Vector& ij = basis_product(i, j);
                const Vector& jk = basis_product(j, k);
                for (std::size_t l = 0; l < dim; ++l) {
                    if (sgn(ij[l]) != 0) axpy(lhs, ij[l], basis_product(l, k));
                    if (sgn(jk[l]) != 0) axpy(rhs, jk[l], basis_product(i, l));
                }
                if (lhs != rhs)
                    throw AssociativityError({i, j, k}, "(e" + std::to_string(i) + " e" + std::to_string(j) +
                                                            ") e" + std::to_string(k) + " = " + to_string(lhs) +
                                                            " but e" + std::to_string(i) + " (e" +
                                                            std::to_string(j) + " e" + std::to_string(k) +
                                                            ") = " + to_string(rhs));
            }
}

void StructureConstants::check_length(const Vector& x) const {
    if (x.size() != dim_)
        throw Error(ErrorKind::DimensionMismatch, "element of length " + std::to_string(x.size()) +
                                                      " used in algebra of dim " + std::to_string(dim_));
}

Vector StructureConstants::multiply(const Vector& x, const Vector& y) const {
    check_length(x);
    check_length(y);
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (sgn(y[j]) == 0) continue;
            axpy(out, x[i] * y[j], products_[i * dim_ + j]);
        }
    }
    return out;
}

Vector StructureConstants::commutator(const Vector& x, const Vector& y) const {
    return multiply(x, y) - multiply(y, x);
}

Vector StructureConstants::jordan_product(const Vector& x, const Vector& y) const {
    return multiply(x, y) + multiply(y, x);
}

Vector StructureConstants::double_commutator(const Vector& x, const Vector& y, const Vector& z) const {
    return commutator(commutator(x, y), z);
}

Matrix StructureConstants::left_multiplication(const Vector& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, multiply(x, basis(j)));
    return m;
}

Matrix StructureConstants::right_multiplication(const Vector& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, multiply(basis(j), x));
    return m;
}

std::vector<Rational> StructureConstants::flat_table() const {
    std::vector<Rational> t;
    t.reserve(dim_ * dim_ * dim_);
    for (const auto& p : products_) t.insert(t.end(), p.begin(), p.end());
    return t;
}

std::string StructureConstants::content_hash() const {
    std::string canon = "dim=" + std::to_string(dim_) + ";";
    for (const auto& p : products_)
        for (const auto& x : p) {
            canon += x.get_str();
            canon += ',';
        }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(canon.data(), canon.size(), digest, &len, EVP_sha256(), nullptr);
    std::string hex;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

Vector vectorize(const LinearOperator& op) {
    Vector v(op.rows() * op.cols());
    for (std::size_t c = 0; c < op.cols(); ++c)
        for (std::size_t r = 0; r < op.rows(); ++r) v[c * op.rows() + r] = op(r, c);
    return v;
}

LinearOperator operator_from_vector(const Vector& v, std::size_t dim) {
    if (v.size() != dim * dim) throw Error(ErrorKind::DimensionMismatch, "operator vector length");
    LinearOperator op(dim, dim);
    for (std::size_t c = 0; c < dim; ++c)
        for (std::size_t r = 0; r < dim; ++r) op(r, c) = v[c * dim + r];
    return op;
}

std::vector<Vector> double_commutator_table(const StructureConstants& alg) {
    const std::size_t n = alg.dim();
    std::vector<Vector> brackets(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) brackets[i * n + j] = alg.basis_product(i, j) - alg.basis_product(j, i);
    std::vector<Vector> table(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector w(n);
                const Vector& b = brackets[i * n + j];
                for (std::size_t l = 0; l < n; ++l)
                    if (sgn(b[l]) != 0) axpy(w, b[l], brackets[l * n + k]);
                table[(i * n + j) * n + k] = std::move(w);
            }
    return table;
}

std::optional<Vector> find_unit(const StructureConstants& alg) {
    const std::size_t n = alg.dim();
    // u e_j = e_j and e_j u = e_j, linear in u.
    Matrix m(2 * n * n, n);
    Vector rhs(2 * n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t r = 0; r < n; ++r) {
            std::size_t left = j * n + r, right = n * n + j * n + r;
            for (std::size_t l = 0; l < n; ++l) {
                m(left, l) = alg.c(l, j, r);
                m(right, l) = alg.c(j, l, r);
            }
            if (j == r) rhs[left] = rhs[right] = 1;
        }
    auto sol = solve(m, rhs);
    if (!sol) return std::nullopt;
    return sol->particular;
}

Subspace commutant(const StructureConstants& alg, const Subspace& s) {
    const std::size_t n = alg.dim();
    if (s.ambient_dim() != n) throw Error(ErrorKind::DimensionMismatch, "commutant of a foreign subspace");
    RowReducer rr(n);
    for (std::size_t t = 0; t < s.dim() && !rr.full(); ++t) {
        Vector x = s.basis_vector(t);
        Matrix ad = alg.right_multiplication(x) - alg.left_multiplication(x);  // a -> a x - x a
        for (std::size_t r = 0; r < n; ++r) rr.add(ad.row_vector(r));
    }
    return rr.kernel();
}

Subspace center(const StructureConstants& alg) { return commutant(alg, Subspace::full(alg.dim())); }

Subspace double_commutator_span(const StructureConstants& alg) {
    return Subspace::span(alg.dim(), double_commutator_table(alg));
}

Subspace largest_central_ideal(const StructureConstants& alg) {
    const std::size_t n = alg.dim();
    Subspace v = center(alg);
    for (;;) {
        if (v.is_zero()) return v;
        // Coefficients c with sum_t c_t v_t mapped into v by every left/right basis multiplication.
        Matrix ann = v.annihilator();
        Matrix basis_cols = v.basis().transpose();
        RowReducer rr(v.dim());
        for (std::size_t i = 0; i < n && ann.rows() > 0; ++i) {
            Matrix l = ann * alg.left_multiplication(alg.basis(i)) * basis_cols;
            Matrix r = ann * alg.right_multiplication(alg.basis(i)) * basis_cols;
            for (std::size_t k = 0; k < l.rows(); ++k) {
                rr.add(l.row_vector(k));
                rr.add(r.row_vector(k));
            }
        }
        Subspace coeffs = rr.kernel();
        if (coeffs.dim() == v.dim()) return v;
        std::vector<Vector> next;
        for (std::size_t t = 0; t < coeffs.dim(); ++t) next.push_back(basis_cols * coeffs.basis_vector(t));
        v = Subspace::span(n, next);
    }
}

StructureConstants subalgebra(const StructureConstants& alg, const Subspace& sub) {
    if (sub.ambient_dim() != alg.dim()) throw Error(ErrorKind::DimensionMismatch, "subalgebra");
    const std::size_t d = sub.dim();
    std::vector<Rational> table(d * d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vector p = alg.multiply(sub.basis_vector(i), sub.basis_vector(j));
            if (!sub.contains(p))
                throw Error(ErrorKind::DimensionMismatch, "subspace is not closed under multiplication");
            Vector c = sub.coordinates(p);
            for (std::size_t k = 0; k < d; ++k) table[(i * d + j) * d + k] = c[k];
        }
    return StructureConstants(d, table);
}

StructureConstants direct_sum(const StructureConstants& a, const StructureConstants& b) {
    const std::size_t n = a.dim() + b.dim();
    std::vector<Rational> t(n * n * n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k) t[(i * n + j) * n + k] = a.c(i, j, k);
    const std::size_t o = a.dim();
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            for (std::size_t k = 0; k < b.dim(); ++k) t[((o + i) * n + o + j) * n + o + k] = b.c(i, j, k);
    std::vector<std::string> labels = a.labels();
    for (const auto& l : b.labels()) labels.push_back(l + "'");
    return StructureConstants(n, t, labels);
}

StructureConstants tensor_product(const StructureConstants& a, const StructureConstants& b) {
    const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
    std::vector<Rational> t(n * n * n);
    for (std::size_t i1 = 0; i1 < na; ++i1)
        for (std::size_t i2 = 0; i2 < nb; ++i2)
            for (std::size_t j1 = 0; j1 < na; ++j1)
                for (std::size_t j2 = 0; j2 < nb; ++j2)
                    for (std::size_t k1 = 0; k1 < na; ++k1) {
                        if (sgn(a.c(i1, j1, k1)) == 0) continue;
                        for (std::size_t k2 = 0; k2 < nb; ++k2) {
                            if (sgn(b.c(i2, j2, k2)) == 0) continue;
                            std::size_t i = i1 * nb + i2, j = j1 * nb + j2, k = k1 * nb + k2;
                            t[(i * n + j) * n + k] = a.c(i1, j1, k1) * b.c(i2, j2, k2);
                        }
                    }
    std::vector<std::string> labels;
    for (std::size_t i1 = 0; i1 < na; ++i1)
        for (std::size_t i2 = 0; i2 < nb; ++i2) labels.push_back(a.label(i1) + "*" + b.label(i2));
    return StructureConstants(n, t, labels);
}

std::string format_element(const StructureConstants& alg, const Vector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        Rational c = v[i];
        if (!out.empty()) {
            out += sgn(c) < 0 ? " - " : " + ";
            c = abs(c);
        } else if (sgn(c) < 0) {
            out += "-";
            c = abs(c);
        }
        if (c != 1) out += to_string(c) + " ";
        out += alg.label(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace ltc
