#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ltc/error.hpp"
#include "ltc/linalg.hpp"

namespace ltc {

/// Raised when a multiplication table fails (e_i e_j) e_k = e_i (e_j e_k).
class AssociativityError : public Error {
public:
    AssociativityError(std::array<std::size_t, 3> triple, const std::string& detail)
        : Error(ErrorKind::NotAssociative, detail), triple_(triple) {}
    std::array<std::size_t, 3> triple() const noexcept { return triple_; }

private:
    std::array<std::size_t, 3> triple_;
};

/// A finite-dimensional associative algebra over Q given by its
/// multiplication table: e_i * e_j = sum_k c(i,j,k) e_k.
///
/// Associativity is checked for every basis triple on construction, so
/// every object of this type is an associative algebra.
class StructureConstants {
public:
    /// table is flat, indexed [(i*dim + j)*dim + k].
    StructureConstants(std::size_t dim, const std::vector<Rational>& table,
                       std::vector<std::string> labels = {});

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return products_[i * dim_ + j][k];
    }
    /// e_i * e_j as a coordinate vector.
    const Vector& basis_product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
    Vector basis(std::size_t i) const { return unit_vector(dim_, i); }

    Vector multiply(const Vector& x, const Vector& y) const;
    Vector commutator(const Vector& x, const Vector& y) const;
    Vector jordan_product(const Vector& x, const Vector& y) const;
    Vector double_commutator(const Vector& x, const Vector& y, const Vector& z) const;

    /// Matrix of y -> x*y (column j is x*e_j).
    Matrix left_multiplication(const Vector& x) const;
    /// Matrix of y -> y*x.
    Matrix right_multiplication(const Vector& x) const;

    std::vector<Rational> flat_table() const;
    /// Hex SHA-256 of the canonical serialization (dim and table entries).
    std::string content_hash() const;

    friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
        return a.dim_ == b.dim_ && a.products_ == b.products_;
    }

private:
    void check_length(const Vector& x) const;

    std::size_t dim_;
    std::vector<Vector> products_;
    std::vector<std::string> labels_;
};

/// Linear maps on an algebra are square matrices whose column j is the image of e_j.
using LinearOperator = Matrix;

/// Operator unknowns are ordered column-major: entry (r, c) sits at c*dim + r.
Vector vectorize(const LinearOperator& op);
LinearOperator operator_from_vector(const Vector& v, std::size_t dim);

/// "e11 - 1/2 e12" style rendering with the algebra's labels; "0" for zero.
std::string format_element(const StructureConstants& alg, const Vector& v);

/// All [[e_i,e_j],e_k], indexed (i*dim + j)*dim + k.
std::vector<Vector> double_commutator_table(const StructureConstants& alg);

std::optional<Vector> find_unit(const StructureConstants& alg);
Subspace center(const StructureConstants& alg);
Subspace commutant(const StructureConstants& alg, const Subspace& s);
Subspace double_commutator_span(const StructureConstants& alg);
/// Largest ideal contained in the center.
Subspace largest_central_ideal(const StructureConstants& alg);

/// Restriction of the table to a subspace closed under multiplication,
/// in the coordinates of the subspace's echelon basis.
StructureConstants subalgebra(const StructureConstants& alg, const Subspace& sub);

StructureConstants direct_sum(const StructureConstants& a, const StructureConstants& b);
StructureConstants tensor_product(const StructureConstants& a, const StructureConstants& b);

}  // namespace ltc
