#include "ltc/linalg.hpp"

#include <algorithm>

#include "ltc/error.hpp"

namespace ltc {

Echelon echelon(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
        std::size_t p = lead;
        while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != lead)
            for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(lead, k));
        Rational inv = 1 / a(lead, c);
        for (std::size_t k = c; k < a.cols(); ++k) a(lead, k) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead || sgn(a(r, c)) == 0) continue;
            Rational f = a(r, c);
            for (std::size_t k = c; k < a.cols(); ++k)
                if (sgn(a(lead, k)) != 0) a(r, k) -= f * a(lead, k);
        }
        pivots.push_back(c);
        ++lead;
    }
    return {std::move(a), std::move(pivots)};
}

Matrix rref(const Matrix& m) { return echelon(m).reduced; }

std::size_t rank(const Matrix& m) { return echelon(m).pivots.size(); }

static Subspace kernel_from_echelon(const Echelon& e, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return Subspace::span(cols, basis);
}

Subspace kernel(const Matrix& m) { return kernel_from_echelon(echelon(m), m.cols()); }

std::optional<Solution> solve(const Matrix& m, const Vector& rhs) {
    if (rhs.size() != m.rows())
        throw Error(ErrorKind::DimensionMismatch, "rhs length " + std::to_string(rhs.size()) +
                                                      " for " + std::to_string(m.rows()) + " rows");
    Matrix aug(m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    for (std::size_t r = 0; r < m.rows(); ++r) aug(r, m.cols()) = rhs[r];
    Echelon e = echelon(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
    Echelon coef{e.reduced.block(0, 0, e.reduced.rows(), m.cols()), e.pivots};
    return Solution{std::move(x), kernel_from_echelon(coef, m.cols())};
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Echelon e = echelon(Matrix::hstack(m, Matrix::identity(n)));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
        throw Error(ErrorKind::DimensionMismatch, "matrix is singular");
    return e.reduced.block(0, n, n, n);
}

// ---- Subspace ----

Subspace Subspace::full(std::size_t n) { return row_space(Matrix::identity(n)); }

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    RowReducer rr(ambient_dim);
    for (const auto& v : vectors) {
        if (v.size() != ambient_dim) throw Error(ErrorKind::DimensionMismatch, "span vector length");
        rr.add(v);
    }
    return rr.row_space();
}

Subspace Subspace::row_space(const Matrix& m) {
    Echelon e = echelon(m);
    Subspace s(m.cols());
    s.basis_ = e.reduced.block(0, 0, e.pivots.size(), m.cols());
    s.pivots_ = std::move(e.pivots);
    return s;
}

std::vector<Vector> Subspace::basis_vectors() const {
    std::vector<Vector> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
    return out;
}

Vector Subspace::reduce(const Vector& v) const {
    if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector not in ambient space");
    Vector r = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        Rational f = r[pivots_[i]];
        if (sgn(f) != 0) axpy(r, -f, basis_.row(i));
    }
    return r;
}

bool Subspace::contains(const Vector& v) const { return ltc::is_zero(reduce(v)); }

Vector Subspace::coordinates(const Vector& v) const {
    if (!contains(v)) throw Error(ErrorKind::DimensionMismatch, "vector is not a member of the subspace");
    Vector c(pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
}

Matrix Subspace::annihilator() const {
    Subspace k = kernel(basis_.rows() ? basis_ : Matrix(0, ambient_));
    return k.basis();
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "subspace_sum");
    RowReducer rr(u.ambient_dim());
    for (std::size_t i = 0; i < u.dim(); ++i) rr.add(u.basis_vector(i));
    for (std::size_t i = 0; i < v.dim(); ++i) rr.add(v.basis_vector(i));
    return rr.row_space();
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "subspace_intersect");
    Matrix constraints = Matrix::vstack(u.annihilator(), v.annihilator());
    if (constraints.rows() == 0) return Subspace::full(u.ambient_dim());
    return kernel(constraints);
}

bool subspace_contains(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "subspace_contains");
    for (std::size_t i = 0; i < v.dim(); ++i)
        if (!u.contains(v.basis_vector(i))) return false;
    return true;
}

bool subspace_equal(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "subspace_equal");
    return u == v;
}

// ---- RowReducer ----

void RowReducer::refresh_support(Row& r) {
    r.support.clear();
    for (std::size_t i = 0; i < r.values.size(); ++i)
        if (sgn(r.values[i]) != 0) r.support.push_back(i);
}

void RowReducer::eliminate(Vector& v) const {
    for (std::size_t p : pivot_cols_) {
        if (sgn(v[p]) == 0) continue;
        Rational f = v[p];
        const Row& r = rows_[pivot_row_[p]];
        for (std::size_t k : r.support) v[k] -= f * r.values[k];
    }
}

Vector RowReducer::reduce(Vector row) const {
    if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row length");
    eliminate(row);
    return row;
}

bool RowReducer::add(Vector row) {
    if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row length");
    if (full()) return false;
    eliminate(row);
    std::size_t lead = 0;
    while (lead < cols_ && sgn(row[lead]) == 0) ++lead;
    if (lead == cols_) return false;
    Rational inv = 1 / row[lead];
    Row fresh{std::move(row), {}};
    for (auto& x : fresh.values)
        if (sgn(x) != 0) x *= inv;
    refresh_support(fresh);
    for (auto& r : rows_) {
        if (sgn(r.values[lead]) == 0) continue;
        Rational f = r.values[lead];
        for (std::size_t k : fresh.support) r.values[k] -= f * fresh.values[k];
        refresh_support(r);
    }
    pivot_row_[lead] = rows_.size();
    pivot_cols_.push_back(lead);
    rows_.push_back(std::move(fresh));
    return true;
}

Echelon RowReducer::echelon() const {
    std::vector<std::size_t> pivots = pivot_cols_;
    std::sort(pivots.begin(), pivots.end());
    Matrix m(pivots.size(), cols_);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const Row& r = rows_[pivot_row_[pivots[i]]];
        for (std::size_t k : r.support) m(i, k) = r.values[k];
    }
    return {std::move(m), std::move(pivots)};
}

Subspace RowReducer::kernel() const { return kernel_from_echelon(echelon(), cols_); }

Subspace RowReducer::row_space() const {
    Echelon e = echelon();
    return Subspace::row_space(e.reduced);
}

}  // namespace ltc
