#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ltc/matrix.hpp"

namespace ltc {

/// A subspace of Q^n stored by its reduced row-echelon basis. Two equal
/// subspaces always carry identical basis grids.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    static Subspace full(std::size_t n);
    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
    static Subspace row_space(const Matrix& m);

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    bool is_zero() const noexcept { return dim() == 0; }
    bool is_full() const noexcept { return dim() == ambient_; }

    const Matrix& basis() const noexcept { return basis_; }
    Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
    std::vector<Vector> basis_vectors() const;
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// v minus its component along the basis, in echelon order. Zero iff v is a member.
    Vector reduce(const Vector& v) const;
    bool contains(const Vector& v) const;
    /// Coefficients of a member v against basis(); for an echelon basis these are v's pivot entries.
    Vector coordinates(const Vector& v) const;
    /// Rows spanning the functionals that vanish on the subspace: U = kernel(annihilator()).
    Matrix annihilator() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

Echelon echelon(const Matrix& m);
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Subspace kernel(const Matrix& m);

struct Solution {
    Vector particular;
    Subspace homogeneous;
};

/// Echelon particular solution (free variables zero) plus the kernel; nullopt if inconsistent.
std::optional<Solution> solve(const Matrix& m, const Vector& rhs);

/// Inverse of a square matrix; throws DimensionMismatch when singular.
Matrix inverse(const Matrix& m);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
/// True iff every basis vector of v lies in u.
bool subspace_contains(const Subspace& u, const Subspace& v);
bool subspace_equal(const Subspace& u, const Subspace& v);

/// Incremental Gauss-Jordan over a stream of constraint rows. Keeps the
/// accepted rows in reduced echelon form at every step; rows that reduce
/// to zero are dropped, so duplicated constraints cost one reduction each.
class RowReducer {
public:
    explicit RowReducer(std::size_t cols) : cols_(cols), pivot_row_(cols, npos) {}

    /// Returns true if the row increased the rank.
    bool add(Vector row);
    Vector reduce(Vector row) const;

    std::size_t cols() const noexcept { return cols_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    bool full() const noexcept { return rank() == cols_; }

    Echelon echelon() const;
    Subspace kernel() const;
    Subspace row_space() const;

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    struct Row {
        Vector values;
        std::vector<std::size_t> support;
    };
    void eliminate(Vector& v) const;
    static void refresh_support(Row& r);

    std::size_t cols_;
    std::vector<Row> rows_;
    std::vector<std::size_t> pivot_row_;  // column -> index into rows_
    std::vector<std::size_t> pivot_cols_; // pivot columns, unsorted
};

}  // namespace ltc
